#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "mzv/cyclotomic.hpp"
#include "mzv/word.hpp"

namespace mzv {

/// Finitely supported linear combination of words with cyclotomic coefficients.
///
/// Zero coefficients are never stored. Iteration follows Word ordering.
class NCPoly {
 public:
  using Terms = std::map<Word, CycloNum>;

  NCPoly() = default;
  NCPoly(Word w);                    // NOLINT(google-explicit-constructor)
  NCPoly(const CycloNum& constant);  // NOLINT(google-explicit-constructor)
  NCPoly(long constant) : NCPoly(CycloNum(constant)) {}  // NOLINT(google-explicit-constructor)
  static NCPoly monomial(const CycloNum& c, Word w);

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  CycloNum coeff(Word w) const;
  void add_term(Word w, const CycloNum& c);

  /// Weight-d part.
  NCPoly homogeneous(int d) const;
  /// Terms of weight <= n.
  NCPoly truncated(int n) const;
  /// Largest word length present, -1 for zero.
  int max_weight() const noexcept;
  int min_weight() const noexcept;
  bool is_homogeneous(int d) const noexcept;

  NCPoly& operator+=(const NCPoly& rhs);
  NCPoly& operator-=(const NCPoly& rhs);
  NCPoly& operator*=(const CycloNum& c);

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const CycloNum& c) { return a *= c; }
  friend NCPoly operator*(const CycloNum& c, NCPoly a) { return a *= c; }
  /// Concatenation product.
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  NCPoly operator-() const;

  friend bool operator==(const NCPoly&, const NCPoly&) = default;

 private:
  Terms terms_;
};

/// Words with multiplicities, sorted by Word ordering.
using CountedWords = std::vector<std::pair<Word, std::uint64_t>>;

/// Memoized shuffle of two words. The returned reference stays valid for the
/// lifetime of the calling thread.
const CountedWords& shuffle_words(Word a, Word b);
/// Memoized harmonic product of two words in h1.
const CountedWords& harmonic_words(Word a, Word b);

NCPoly shuffle(const NCPoly& p, const NCPoly& q);
/// Throws NotInH1 when a supporting word ends in x.
NCPoly harmonic(const NCPoly& p, const NCPoly& q);

/// Sum over all order-preserving interleavings; independent of the recursion.
NCPoly shuffle_oracle(Word a, Word b);

}  // namespace mzv
