#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mzv/word.hpp"

namespace mzv {

/// MZV index (k1, ..., kn) with every ki >= 1.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int depth() const noexcept { return static_cast<int>(parts_.size()); }
  int weight() const noexcept;
  bool admissible() const noexcept { return !parts_.empty() && parts_.front() >= 2; }

  std::string str() const;  // "3,1"

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

Composition parse_composition(std::string_view text);

/// Throws NotInH1 for words ending in x and for the empty word.
Composition word_to_composition(Word w);
Word composition_to_word(const Composition& c);

/// Splits a word in h1 into its z-block sizes; the empty word gives {}.
std::vector<int> z_blocks(Word w);

}  // namespace mzv
