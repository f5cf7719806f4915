#pragma once

#include <vector>

#include "mzv/ncpoly.hpp"

namespace mzv {

/// Element of Q<<x,y>> truncated above weight `max_weight()`.
///
/// part(d) is homogeneous of weight d. Binary operations truncate to the
/// smaller of the two bounds.
class GradedSeries {
 public:
  explicit GradedSeries(int max_weight = 0);
  /// Splits a polynomial into graded parts, dropping weights above `max_weight`.
  GradedSeries(const NCPoly& p, int max_weight);

  int max_weight() const noexcept { return static_cast<int>(parts_.size()) - 1; }
  const NCPoly& part(int d) const { return parts_.at(d); }
  void add_to_part(int d, const NCPoly& p);

  NCPoly to_poly() const;
  GradedSeries truncated(int n) const;
  /// Number of nonzero graded parts.
  int nonzero_parts() const;

  GradedSeries& operator+=(const GradedSeries& rhs);
  GradedSeries& operator-=(const GradedSeries& rhs);
  GradedSeries& operator*=(const CycloNum& c);
  friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
  friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
  friend GradedSeries operator*(GradedSeries a, const CycloNum& c) { return a *= c; }
  /// Concatenation product.
  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);

  friend bool operator==(const GradedSeries&, const GradedSeries&) = default;

 private:
  std::vector<NCPoly> parts_;
};

/// Kleene closure sum_n p^n up to weight n_max. Throws NonzeroConstantTerm.
GradedSeries star(const NCPoly& p, int n_max);
GradedSeries star(const GradedSeries& s);

GradedSeries shuffle(const GradedSeries& a, const GradedSeries& b);
GradedSeries harmonic(const GradedSeries& a, const GradedSeries& b);

}  // namespace mzv
