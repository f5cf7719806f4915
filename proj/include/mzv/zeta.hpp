#pragma once

#include <optional>

#include "mzv/composition.hpp"
#include "mzv/cyclotomic.hpp"
#include "mzv/ncpoly.hpp"

namespace mzv {

struct MZVValue {
  double value = 0;
  /// Heuristic majorant of the truncation error, not a proven bound.
  double tail_bound = 0;
  long cutoff = 0;
};

/// Exact value coeff * pi^pi_power.
struct PiCoefficient {
  Rational coeff;
  int pi_power = 0;

  double value() const;
};

/// Generating function t e^t / (e^t - 1), so B_1 = +1/2.
Rational bernoulli(int k);
/// zeta(2k) as a rational multiple of pi^(2k).
PiCoefficient zeta_even(int k);

/// Closed form for zeta({2k}_n) = coeff * pi^(2kn). `exact` is set for k <= 3.
struct ClosedForm {
  long double coeff = 0;
  int pi_power = 0;
  std::optional<Rational> exact;
};

/// k in 1..7; throws UnsupportedK otherwise. The k = 7 display is evaluated as
/// printed (roots found numerically), including its failing n = 0 case.
ClosedForm zeta_family_closed(int k, int n);

/// Coefficient c with zeta({2k}_n) = c * pi^(2kn), from the sign-sum formula
/// evaluated exactly in Q(zeta_{2k}). Throws NonRationalResult if the sum does
/// not reduce to a rational.
Rational zeta_signsum_coeff(int k, int n);

/// Truncated nested sum over m1 > ... > mn > 0 with m1 <= cutoff.
MZVValue zeta_numeric(const Composition& c, long cutoff);

/// Z map on admissible words with rational coefficients; the empty word maps to 1.
/// The tail bound is the coefficient-weighted sum of the per-term bounds.
MZVValue z_map_value(const NCPoly& p, long cutoff);
double z_map(const NCPoly& p, long cutoff);

/// n! as an exact integer.
mpz_class factorial(unsigned n);

}  // namespace mzv
