#include "mzv/operators.hpp"

#include <array>

#include "mzv/error.hpp"

namespace mzv {

namespace {

struct FamilyData {
  Word block;
  Word primed_block;
  int sigma_pos;  // sigma exchanges letters sigma_pos, sigma_pos + 1 of a block
  long base;      // -12 or 36
  long divisor;   // 2 or 3
};

FamilyData data(Family f) {
  if (f == Family::X4Y2) return {Word("xxxxyy"), Word("xxxxyx"), 3, -12, 2};
  return {Word("xxxyyy"), Word("xxxyyx"), 2, 36, 3};
}

NCPoly lin(std::initializer_list<std::pair<long, const char*>> terms) {
  NCPoly p;
  for (const auto& [c, w] : terms) p.add_term(Word(w), CycloNum(c));
  return p;
}

Rational rpow(long base, int e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), mpz_class(base).get_mpz_t(), static_cast<unsigned>(e));
  return Rational(r);
}

}  // namespace

const char* family_name(Family f) { return f == Family::X4Y2 ? "x4y2" : "x3y3"; }

Word sigma_tau_apply(const OperatorSpec& spec, bool primed) {
  const int n = spec.n;
  if (n < 1) throw Error(ErrorCode::IndexOutOfRange, "operators need n >= 1");
  if (static_cast<int>(spec.eps.size()) != n || static_cast<int>(spec.eps_prime.size()) != n - 1) {
    throw Error(ErrorCode::IndexOutOfRange, "need n sigma bits and n-1 tau bits");
  }
  const FamilyData d = data(spec.family);
  const int len = d.block.size();
  Word w;
  for (int i = 0; i + 1 < n; ++i) w = w * d.block;
  w = w * (primed ? d.primed_block : d.block);
  for (int i = 0; i < n; ++i) {
    if (spec.eps[i] != 0 && spec.eps[i] != 1) throw Error(ErrorCode::IndexOutOfRange, "bits must be 0 or 1");
    if (spec.eps[i] == 1) w = w.swap_adjacent(i * len + d.sigma_pos);
  }
  for (int j = 0; j + 1 < n; ++j) {
    if (spec.eps_prime[j] != 0 && spec.eps_prime[j] != 1) {
      throw Error(ErrorCode::IndexOutOfRange, "bits must be 0 or 1");
    }
    if (spec.eps_prime[j] == 1) w = w.swap_adjacent((j + 1) * len - 1);
  }
  return w;
}

namespace {

std::pair<NCPoly, NCPoly> by_formula(Family f, int n) {
  if (n == 0) return {NCPoly(1L), NCPoly()};
  const FamilyData d = data(f);
  const int bits = 2 * n - 1;
  NCPoly p;
  NCPoly q;
  const Rational top = rpow(d.base, n);
  for (unsigned mask = 0; mask < (1U << bits); ++mask) {
    OperatorSpec spec{f, n, {}, {}};
    int s = 0;
    for (int i = 0; i < bits; ++i) {
      const int b = (mask >> i) & 1U;
      s += b;
      if (i < n) {
        spec.eps.push_back(b);
      } else {
        spec.eps_prime.push_back(b);
      }
    }
    const Rational c = top / rpow(d.divisor, s);
    p.add_term(sigma_tau_apply(spec, false), CycloNum(c));
    q.add_term(sigma_tau_apply(spec, true), CycloNum(Rational(c / d.divisor)));
  }
  return {p, q};
}

std::pair<NCPoly, NCPoly> by_recursion(Family f, int n) {
  NCPoly p(1L);
  NCPoly q;
  NCPoly pp, pq, qp, qq;  // p_n = p_{n-1} pp + q_{n-1} qp, q_n = p_{n-1} pq + q_{n-1} qq
  if (f == Family::X4Y2) {
    pp = lin({{-12, "xxxxyy"}, {-6, "xxxyxy"}});
    qp = lin({{-12, "yxxxyy"}, {-6, "yxxyxy"}});
    pq = lin({{-6, "xxxxyx"}, {-3, "xxxyxx"}});
    qq = lin({{-6, "yxxxyx"}, {-3, "yxxyxx"}});
  } else {
    pp = lin({{36, "xxxyyy"}, {12, "xxyxyy"}});
    qp = lin({{36, "yxxyyy"}, {12, "yxyxyy"}});
    pq = lin({{12, "xxxyyx"}, {4, "xxyxyx"}});
    qq = lin({{12, "yxxyyx"}, {4, "yxyxyx"}});
  }
  for (int i = 0; i < n; ++i) {
    NCPoly np = p * pp + q * qp;
    NCPoly nq = p * pq + q * qq;
    p = std::move(np);
    q = std::move(nq);
  }
  return {p, q};
}

}  // namespace

Automaton family_automaton(Family family) {
  if (family == Family::X4Y2) {
    const std::array<Factor, 2> f{Factor{CycloNum(1L), Word("xxy")}, Factor{CycloNum(-1L), Word("xxy")}};
    return shuffle_automaton(f, true);
  }
  const std::array<Factor, 3> f{Factor{CycloNum(1L), Word("xy")}, Factor{CycloNum::root_power(3, 1), Word("xy")},
                                Factor{CycloNum::root_power(3, 2), Word("xy")}};
  return shuffle_automaton(f, true);
}

Matrix family_block_matrix(Family family) {
  const Matrix a = adjacency(family_automaton(family));
  if (family == Family::X4Y2) {
    const Matrix c = a.block(0, 3, 3, 6) * a.block(3, 6, 6, 9) * a.block(6, 9, 0, 3);
    return c * c;
  }
  const Matrix c = a.block(0, 4, 4, 8) * a.block(4, 8, 0, 4);
  return c * c * c;
}

std::pair<NCPoly, NCPoly> pn_qn(Family family, int n, PnMethod method) {
  if (n < 0) throw Error(ErrorCode::IndexOutOfRange, "n must be nonnegative");
  switch (method) {
    case PnMethod::Recursion:
      return by_recursion(family, n);
    case PnMethod::Formula:
      return by_formula(family, n);
    case PnMethod::Matrix:
      break;
  }
  const Matrix m = matrix_power(family_block_matrix(family), static_cast<unsigned>(n));
  if (family == Family::X4Y2) return {m.at(0, 0), m.at(0, 1)};
  return {m.at(0, 0), -m.at(0, 3)};
}

NCPoly normalized_pn(Family family, int n) {
  NCPoly p = pn_qn(family, n, PnMethod::Recursion).first;
  if (family == Family::X4Y2 && n % 2 == 1) p = -p;
  return p;
}

std::vector<std::pair<Rational, Composition>> theorem_terms(Family family, int n) {
  if (n < 1) throw Error(ErrorCode::IndexOutOfRange, "theorem sums need n >= 1");
  const bool x4 = family == Family::X4Y2;
  const Rational top = rpow(x4 ? 12 : 36, n);
  const long divisor = x4 ? 2 : 3;
  std::vector<std::pair<Rational, Composition>> out;
  const int bits = 2 * n - 1;
  for (unsigned mask = 0; mask < (1U << bits); ++mask) {
    std::vector<int> e(n + 1, 0);   // e[i] = eps_i, 1-based
    std::vector<int> ep(n + 1, 0);  // ep[i] = eps'_i, ep[0] = ep[n] = 0
    int s = 0;
    for (int i = 0; i < bits; ++i) {
      const int b = (mask >> i) & 1U;
      s += b;
      if (i < n) {
        e[i + 1] = b;
      } else {
        ep[i - n + 1] = b;
      }
    }
    std::vector<int> parts;
    for (int i = 1; i <= n; ++i) {
      if (x4) {
        parts.push_back(5 - ep[i - 1] - e[i]);
        parts.push_back(1 + e[i] + ep[i]);
      } else {
        parts.push_back(4 - e[i] - ep[i - 1]);
        parts.push_back(1 + e[i]);
        parts.push_back(1 + ep[i]);
      }
    }
    Rational c = top / rpow(divisor, s);
    c.canonicalize();
    out.emplace_back(c, Composition(std::move(parts)));
  }
  return out;
}

Automaton sawada_automaton(bool tail) {
  using S = SawadaStates;
  Automaton m(tail ? 8 : 6);
  const Label x = Label::x();
  const Label y = Label::y();
  const CycloNum one(1L);
  const CycloNum neg(-1L);
  m.add_transition(S::q1, x, one, S::q3);
  m.add_transition(S::q1, x, one, S::q4);
  m.add_transition(S::q3, y, one, S::q1);
  m.add_transition(S::q3, x, one, S::q2);
  m.add_transition(S::q3, x, one, S::q1p);
  m.add_transition(S::q4, x, one, S::q2);
  m.add_transition(S::q4, y, neg, S::q1);
  m.add_transition(S::q2, y, one, S::q4);
  m.add_transition(S::q2, y, neg, S::q3);
  if (!tail) {
    m.add_transition(S::q2, x, one, S::q2p);
    m.add_transition(S::q1p, x, one, S::q2p);
    m.add_transition(S::q2p, y, neg, S::q1p);
  } else {
    // right block: a copy of the (xy)* shuffle (-xy)* torus started at q1'
    m.add_transition(S::q2, x, one, S::q4p);
    m.add_transition(S::q1p, x, one, S::q3p);
    m.add_transition(S::q1p, x, one, S::q4p);
    m.add_transition(S::q3p, y, one, S::q1p);
    m.add_transition(S::q3p, x, one, S::q2p);
    m.add_transition(S::q4p, x, one, S::q2p);
    m.add_transition(S::q4p, y, neg, S::q1p);
    m.add_transition(S::q2p, y, neg, S::q3p);
    m.add_transition(S::q2p, y, one, S::q4p);
  }
  m.set_final(S::q1p);
  return m;
}

}  // namespace mzv
