#include "mzv/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>

#include "mzv/error.hpp"

namespace mzv {

namespace {

using Poly = std::vector<long long>;

// Exact division of a monic integer polynomial by a monic divisor.
Poly divide_exact(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  Poly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long long c = num[i];
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

struct OrderTable {
  int order;
  int phi;
  // powers[e] = zeta^e in the power basis, 0 <= e < order.
  std::vector<std::vector<Rational>> powers;
};

std::mutex& table_mutex() {
  static std::mutex m;
  return m;
}

std::map<int, Poly>& phi_polys() {
  static std::map<int, Poly> polys;
  return polys;
}

const Poly& cyclo_poly_locked(int m) {
  auto& polys = phi_polys();
  if (auto it = polys.find(m); it != polys.end()) return it->second;
  Poly p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = divide_exact(p, cyclo_poly_locked(d));
  }
  return polys.emplace(m, std::move(p)).first->second;
}

const OrderTable& table_for(int m) {
  static std::map<int, std::unique_ptr<OrderTable>> tables;
  std::lock_guard lock(table_mutex());
  if (auto it = tables.find(m); it != tables.end()) return *it->second;

  const Poly& phi_poly = cyclo_poly_locked(m);
  const int phi = static_cast<int>(phi_poly.size()) - 1;
  auto t = std::make_unique<OrderTable>();
  t->order = m;
  t->phi = phi;
  t->powers.assign(m, std::vector<Rational>(phi));
  std::vector<Rational> cur(phi);
  cur[0] = 1;
  for (int e = 0; e < m; ++e) {
    t->powers[e] = cur;
    // multiply by zeta: shift up, then fold the top coefficient with Phi_m.
    Rational top = cur[phi - 1];
    for (int j = phi - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int j = 0; j < phi; ++j) cur[j] -= top * static_cast<long>(phi_poly[j]);
    }
  }
  return *tables.emplace(m, std::move(t)).first->second;
}

// sum_j raw[j] * zeta^(j * stride mod order), reduced in Q(zeta_order).
std::vector<Rational> reduce(const OrderTable& t, const std::vector<Rational>& raw,
                             long long stride) {
  std::vector<Rational> out(t.phi);
  for (std::size_t j = 0; j < raw.size(); ++j) {
    if (raw[j] == 0) continue;
    const long long e = (static_cast<long long>(j) * stride) % t.order;
    if (e < t.phi) {
      out[e] += raw[j];
      continue;
    }
    const auto& row = t.powers[e];
    for (int i = 0; i < t.phi; ++i) {
      if (row[i] != 0) out[i] += raw[j] * row[i];
    }
  }
  return out;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int m) {
  if (m <= 0) throw Error(ErrorCode::ZeroOrder, "cyclotomic order must be positive");
  std::lock_guard lock(table_mutex());
  return cyclo_poly_locked(m);
}

int euler_phi(int m) {
  if (m <= 0) throw Error(ErrorCode::ZeroOrder, "cyclotomic order must be positive");
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

CycloNum::CycloNum() : order_(1), coeffs_(1) {}

CycloNum::CycloNum(long value) : order_(1), coeffs_{Rational(value)} {}

CycloNum::CycloNum(const Rational& value) : order_(1), coeffs_{value} {
  coeffs_[0].canonicalize();
}

CycloNum::CycloNum(int order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {}

CycloNum CycloNum::make(int order, std::span<const Rational> coeffs) {
  if (order <= 0) throw Error(ErrorCode::ZeroOrder, "cyclotomic order must be positive");
  const OrderTable& t = table_for(order);
  std::vector<Rational> raw(coeffs.begin(), coeffs.end());
  for (auto& c : raw) c.canonicalize();
  // exponents beyond the order wrap around since zeta^order = 1
  return CycloNum(order, reduce(t, raw, 1));
}

CycloNum CycloNum::root_power(int order, long long e) {
  if (order <= 0) throw Error(ErrorCode::ZeroOrder, "cyclotomic order must be positive");
  const OrderTable& t = table_for(order);
  long long r = e % order;
  if (r < 0) r += order;
  return CycloNum(order, t.powers[r]);
}

bool CycloNum::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

std::optional<Rational> CycloNum::rational() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) return std::nullopt;
  }
  return coeffs_[0];
}

std::complex<double> CycloNum::to_complex() const {
  std::complex<double> sum = 0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / order_;
    sum += coeffs_[j].get_d() * std::polar(1.0, angle);
  }
  return sum;
}

CycloNum CycloNum::embed(int target) const {
  if (target == order_) return *this;
  if (target <= 0 || target % order_ != 0) {
    throw Error(ErrorCode::ZeroOrder, "embedding target must be a multiple of the order");
  }
  return CycloNum(target, reduce(table_for(target), coeffs_, target / order_));
}

namespace {

int common_order(int a, int b) { return std::lcm(a, b); }

}  // namespace

CycloNum& CycloNum::operator+=(const CycloNum& rhs) {
  if (order_ != rhs.order_) {
    const int m = common_order(order_, rhs.order_);
    *this = embed(m);
    return *this += rhs.embed(m);
  }
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& rhs) {
  if (order_ != rhs.order_) {
    const int m = common_order(order_, rhs.order_);
    *this = embed(m);
    return *this -= rhs.embed(m);
  }
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  return *this;
}

CycloNum& CycloNum::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& rhs) {
  if (rhs.order_ == 1) return *this *= rhs.coeffs_[0];
  if (order_ == 1) {
    Rational s = coeffs_[0];
    *this = rhs;
    return *this *= s;
  }
  if (order_ != rhs.order_) {
    const int m = common_order(order_, rhs.order_);
    *this = embed(m);
    return *this *= rhs.embed(m);
  }
  const std::size_t n = coeffs_.size();
  std::vector<Rational> raw(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (rhs.coeffs_[j] != 0) raw[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = reduce(table_for(order_), raw, 1);
  return *this;
}

CycloNum CycloNum::operator-() const {
  CycloNum out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const CycloNum& lhs, const CycloNum& rhs) {
  if (lhs.order_ == rhs.order_) return lhs.coeffs_ == rhs.coeffs_;
  const int m = std::lcm(lhs.order_, rhs.order_);
  return lhs.embed(m).coeffs_ == rhs.embed(m).coeffs_;
}

CycloNum pow(const CycloNum& base, unsigned exponent) {
  CycloNum result(1L);
  CycloNum b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

}  // namespace mzv
