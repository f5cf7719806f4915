#include "mzv/zeta.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <vector>

#include "mzv/error.hpp"

namespace mzv {

mpz_class factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

double PiCoefficient::value() const { return coeff.get_d() * std::pow(std::numbers::pi, pi_power); }

Rational bernoulli(int k) {
  if (k < 0) throw Error(ErrorCode::IndexOutOfRange, "Bernoulli index must be nonnegative");
  // sum_{j=0}^{n} C(n+1, j) B_j = n + 1
  std::vector<Rational> b(static_cast<std::size_t>(k) + 1);
  for (int n = 0; n <= k; ++n) {
    Rational s = 0;
    mpz_class binom = 1;  // C(n+1, j)
    for (int j = 0; j < n; ++j) {
      s += Rational(binom) * b[j];
      binom = binom * (n + 1 - j) / (j + 1);
    }
    b[n] = (Rational(n + 1) - s) / Rational(binom);
    b[n].canonicalize();
  }
  return b[k];
}

PiCoefficient zeta_even(int k) {
  if (k < 1) throw Error(ErrorCode::IndexOutOfRange, "zeta_even needs k >= 1");
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * k);
  Rational c = Rational(two_pow) * bernoulli(2 * k) / Rational(2 * factorial(2 * k));
  if (k % 2 == 0) c = -c;
  c.canonicalize();
  return {c, 2 * k};
}

namespace {

long double fact_ld(int n) {
  long double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Real roots of a cubic with three real roots, by bisection on sign changes.
std::vector<long double> cubic_roots(long double a, long double b, long double c) {
  auto f = [&](long double t) { return ((t + a) * t + b) * t + c; };
  std::vector<long double> roots;
  const long double bound = 1 + std::fabs(a) + std::fabs(b) + std::fabs(c);
  const int steps = 20000;
  long double lo = -bound;
  for (int i = 1; i <= steps; ++i) {
    const long double hi = -bound + 2 * bound * i / steps;
    if (f(lo) == 0) {
      roots.push_back(lo);
    } else if ((f(lo) < 0) != (f(hi) < 0)) {
      long double l = lo;
      long double h = hi;
      for (int it = 0; it < 200; ++it) {
        const long double mid = (l + h) / 2;
        if ((f(l) < 0) == (f(mid) < 0)) {
          l = mid;
        } else {
          h = mid;
        }
      }
      roots.push_back((l + h) / 2);
    }
    lo = hi;
  }
  if (roots.size() != 3) throw Error(ErrorCode::NonRationalResult, "cubic does not have three real roots");
  return roots;
}

}  // namespace

ClosedForm zeta_family_closed(int k, int n) {
  if (k < 1 || k > 7) throw Error(ErrorCode::UnsupportedK, "closed forms cover k = 1..7");
  if (n < 0) throw Error(ErrorCode::IndexOutOfRange, "n must be nonnegative");
  ClosedForm out;
  out.pi_power = 2 * k * n;
  if (k <= 3) {
    Rational c;
    if (k == 1) {
      c = Rational(1) / Rational(factorial(2 * n + 1));
    } else if (k == 2) {
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), 2, 2 * n + 1);
      c = Rational(p) / Rational(factorial(4 * n + 2));
    } else {
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), 2, 6 * n);
      c = Rational(6 * p) / Rational(factorial(6 * n + 3));
    }
    c.canonicalize();
    out.exact = c;
    out.coeff = static_cast<long double>(c.get_d());
    return out;
  }
  const int e = 2 * n + 1;
  const long double two = 2;
  switch (k) {
    case 4: {
      const long double s = std::sqrt(two);
      out.coeff = std::pow(two, 6 * n + 2) * (std::pow(3 + 2 * s, e) + std::pow(3 - 2 * s, e)) / fact_ld(8 * n + 4);
      break;
    }
    case 5: {
      const long double s = std::sqrt(5.0L);
      out.coeff = 5 * std::pow(two, 8 * n) *
                  (std::pow(two, e) + std::pow(11 + 5 * s, e) + std::pow(11 - 5 * s, e)) / fact_ld(10 * n + 5);
      break;
    }
    case 6: {
      const long double s = std::sqrt(3.0L);
      out.coeff = 3 * std::pow(two, 12 * n + 2) *
                  (std::pow(two, 6 * n + 3) + std::pow(26 + 15 * s, e) + std::pow(26 - 15 * s, e)) /
                  fact_ld(12 * n + 6);
      break;
    }
    default: {
      // lambda^2 - 13 lambda + 128: complex pair, alpha^e + beta^e = 2 Re(alpha^e)
      const std::complex<long double> alpha(13.0L / 2, std::sqrt(512.0L - 169.0L) / 2);
      long double braces = 1 + 2 * std::pow(alpha, e).real();
      for (long double r : cubic_roots(-57, 103, -1)) braces += std::pow(r, e) + std::pow(r, -e);
      out.coeff = 7 * std::pow(two, 14 * n + 1) * braces / fact_ld(14 * n + 7);
      break;
    }
  }
  return out;
}

Rational zeta_signsum_coeff(int k, int n) {
  if (k < 1) throw Error(ErrorCode::UnsupportedK, "sign-sum needs k >= 1");
  if (n < 0) throw Error(ErrorCode::IndexOutOfRange, "n must be nonnegative");
  const int order = 2 * k;
  const unsigned power = static_cast<unsigned>(2 * k * n + k);
  std::vector<CycloNum> roots;
  for (int j = 0; j < k; ++j) roots.push_back(CycloNum::root_power(order, j));

  CycloNum sum;
  for (unsigned mask = 0; mask < (1U << k); ++mask) {
    CycloNum base = CycloNum(0L);
    int sign = 1;
    for (int j = 0; j < k; ++j) {
      if (mask & (1U << j)) {
        base -= roots[j];
        sign = -sign;
      } else {
        base += roots[j];
      }
    }
    const CycloNum term = pow(base, power);
    if (sign > 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  sum *= CycloNum::root_power(order, -static_cast<long long>(k) * (k - 1) / 2);
  mpz_class two_k;
  mpz_ui_pow_ui(two_k.get_mpz_t(), 2, k);
  Rational scale = Rational(1) / Rational(two_k * factorial(power));
  if (((k + 1) * n) % 2 != 0) scale = -scale;
  scale.canonicalize();
  sum *= scale;
  const auto r = sum.rational();
  if (!r) throw Error(ErrorCode::NonRationalResult, "sign-sum did not reduce to a rational");
  return *r;
}

namespace {

// 1/i^k for i = 0..cutoff (entry 0 unused), cached per (k, cutoff).
const std::vector<long double>& inverse_powers(int k, long cutoff) {
  thread_local std::map<std::pair<int, long>, std::vector<long double>> cache;
  auto [it, inserted] = cache.try_emplace({k, cutoff});
  if (inserted) {
    auto& v = it->second;
    v.resize(static_cast<std::size_t>(cutoff) + 1);
    for (long i = 1; i <= cutoff; ++i) {
      long double p = 1;
      const long double li = static_cast<long double>(i);
      for (int j = 0; j < k; ++j) p *= li;
      v[i] = 1 / p;
    }
  }
  return it->second;
}

}  // namespace

MZVValue zeta_numeric(const Composition& c, long cutoff) {
  if (!c.admissible()) throw Error(ErrorCode::Inadmissible, "zeta(" + c.str() + ") diverges: k1 = 1");
  if (cutoff < c.depth()) throw Error(ErrorCode::CutoffTooSmall, "cutoff below depth");

  thread_local std::map<std::pair<std::vector<int>, long>, MZVValue> memo;
  if (auto it = memo.find({c.parts(), cutoff}); it != memo.end()) return it->second;

  const auto& parts = c.parts();
  const std::size_t m = static_cast<std::size_t>(cutoff);
  // t[i] = T_{j+1}(i), running from the innermost index outward
  std::vector<long double> t(m + 1, 1.0L);
  std::vector<long double> next(m + 1);
  for (std::size_t j = parts.size(); j-- > 0;) {
    const auto& inv = inverse_powers(parts[j], cutoff);
    long double acc = 0;
    next[0] = 0;
    for (std::size_t i = 1; i <= m; ++i) {
      acc += t[i - 1] * inv[i];
      next[i] = acc;
    }
    t.swap(next);
  }
  MZVValue out;
  out.value = static_cast<double>(t[m]);
  out.cutoff = cutoff;
  const double lm = std::log(static_cast<double>(cutoff));
  const int k1 = parts.front();
  out.tail_bound = std::pow(1 + lm, c.depth() - 1) * std::pow(static_cast<double>(cutoff), 1 - k1) / (k1 - 1);
  memo.emplace(std::pair{c.parts(), cutoff}, out);
  return out;
}

MZVValue z_map_value(const NCPoly& p, long cutoff) {
  MZVValue out;
  out.cutoff = cutoff;
  for (const auto& [w, coeff] : p.terms()) {
    if (!w.admissible()) throw Error(ErrorCode::InadmissibleWord, "word " + w.str() + " is not admissible");
    const auto r = coeff.rational();
    if (!r) throw Error(ErrorCode::NonRationalCoefficient, "coefficient of " + w.str() + " is not rational");
    const double c = r->get_d();
    if (w.empty()) {
      out.value += c;
      continue;
    }
    const MZVValue z = zeta_numeric(word_to_composition(w), cutoff);
    out.value += c * z.value;
    out.tail_bound += std::fabs(c) * z.tail_bound;
  }
  return out;
}

double z_map(const NCPoly& p, long cutoff) { return z_map_value(p, cutoff).value; }

}  // namespace mzv
