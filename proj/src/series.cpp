#include "mzv/series.hpp"

#include <algorithm>

#include "mzv/error.hpp"

namespace mzv {

GradedSeries::GradedSeries(int max_weight) : parts_(static_cast<std::size_t>(std::max(max_weight, 0)) + 1) {}

GradedSeries::GradedSeries(const NCPoly& p, int max_weight) : GradedSeries(max_weight) {
  for (const auto& [w, c] : p.terms()) {
    if (w.size() <= max_weight) parts_[w.size()].add_term(w, c);
  }
}

void GradedSeries::add_to_part(int d, const NCPoly& p) {
  if (d > max_weight()) return;
  if (!p.is_homogeneous(d)) throw Error(ErrorCode::InvalidState, "part is not homogeneous of its degree");
  parts_[d] += p;
}

NCPoly GradedSeries::to_poly() const {
  NCPoly out;
  for (const auto& p : parts_) out += p;
  return out;
}

GradedSeries GradedSeries::truncated(int n) const {
  GradedSeries out(std::min(n, max_weight()));
  for (int d = 0; d <= out.max_weight(); ++d) out.parts_[d] = parts_[d];
  return out;
}

int GradedSeries::nonzero_parts() const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](const NCPoly& p) { return !p.is_zero(); }));
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& rhs) {
  if (rhs.max_weight() < max_weight()) parts_.resize(rhs.parts_.size());
  for (std::size_t d = 0; d < parts_.size(); ++d) parts_[d] += rhs.parts_[d];
  return *this;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& rhs) {
  if (rhs.max_weight() < max_weight()) parts_.resize(rhs.parts_.size());
  for (std::size_t d = 0; d < parts_.size(); ++d) parts_[d] -= rhs.parts_[d];
  return *this;
}

GradedSeries& GradedSeries::operator*=(const CycloNum& c) {
  for (auto& p : parts_) p *= c;
  return *this;
}

namespace {

template <typename Product>
GradedSeries convolve(const GradedSeries& a, const GradedSeries& b, Product product) {
  const int n = std::min(a.max_weight(), b.max_weight());
  GradedSeries out(n);
  for (int d1 = 0; d1 <= n; ++d1) {
    if (a.part(d1).is_zero()) continue;
    for (int d2 = 0; d1 + d2 <= n; ++d2) {
      if (b.part(d2).is_zero()) continue;
      out.add_to_part(d1 + d2, product(a.part(d1), b.part(d2)));
    }
  }
  return out;
}

}  // namespace

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
  return convolve(a, b, [](const NCPoly& p, const NCPoly& q) { return p * q; });
}

GradedSeries shuffle(const GradedSeries& a, const GradedSeries& b) {
  return convolve(a, b, [](const NCPoly& p, const NCPoly& q) { return shuffle(p, q); });
}

GradedSeries harmonic(const GradedSeries& a, const GradedSeries& b) {
  return convolve(a, b, [](const NCPoly& p, const NCPoly& q) { return harmonic(p, q); });
}

GradedSeries star(const GradedSeries& s) {
  if (!s.part(0).is_zero()) throw Error(ErrorCode::NonzeroConstantTerm, "star needs a zero constant term");
  const int n = s.max_weight();
  GradedSeries out(n);
  out.add_to_part(0, NCPoly(1L));
  // S_d = sum_{e=1..d} p_e S_{d-e}
  for (int d = 1; d <= n; ++d) {
    NCPoly part;
    for (int e = 1; e <= d; ++e) {
      if (s.part(e).is_zero() || out.part(d - e).is_zero()) continue;
      part += s.part(e) * out.part(d - e);
    }
    out.add_to_part(d, part);
  }
  return out;
}

GradedSeries star(const NCPoly& p, int n_max) {
  if (!p.coeff(Word()).is_zero()) {
    throw Error(ErrorCode::NonzeroConstantTerm, "star needs a zero constant term");
  }
  return star(GradedSeries(p, n_max));
}

}  // namespace mzv
