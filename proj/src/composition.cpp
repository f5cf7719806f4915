#include "mzv/composition.hpp"

#include <charconv>
#include <numeric>

#include "mzv/error.hpp"

namespace mzv {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(ErrorCode::ParseError, "composition must be nonempty");
  for (int k : parts_) {
    if (k < 1) throw Error(ErrorCode::ParseError, "composition parts must be positive");
  }
}

int Composition::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Composition::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

Composition parse_composition(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int k = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), k);
    if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size() || k < 1) {
      throw Error(ErrorCode::ParseError, "bad composition '" + std::string(text) + "'");
    }
    parts.push_back(k);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Composition(std::move(parts));
}

std::vector<int> z_blocks(Word w) {
  if (!w.in_h1()) throw Error(ErrorCode::NotInH1, "word " + w.str() + " ends in x");
  std::vector<int> blocks;
  int run = 0;
  for (int i = 0; i < w.size(); ++i) {
    ++run;
    if (w[i] == Letter::Y) {
      blocks.push_back(run);
      run = 0;
    }
  }
  return blocks;
}

Composition word_to_composition(Word w) {
  if (w.empty()) throw Error(ErrorCode::NotInH1, "empty word has no composition");
  return Composition(z_blocks(w));
}

Word composition_to_word(const Composition& c) {
  Word w;
  for (int k : c.parts()) w = w * Word::z(k);
  return w;
}

}  // namespace mzv
