#pragma once

#include <utility>
#include <vector>

#include "mzv/automaton.hpp"
#include "mzv/composition.hpp"

namespace mzv {

/// Block conventions: X4Y2 uses w_n = (x^4y^2)^n from the (x^2y)* shuffle
/// (-x^2y)* machine, X3Y3 uses w_n = (x^3y^3)^n from the three-factor
/// machine with cube roots of unity.
enum class Family { X4Y2, X3Y3 };

const char* family_name(Family f);

struct OperatorSpec {
  Family family = Family::X4Y2;
  int n = 1;
  std::vector<int> eps;        // eps_1..eps_n
  std::vector<int> eps_prime;  // eps'_1..eps'_{n-1}
};

/// Applies sigma_i^eps_i and tau_j^eps'_j to w_n (or w'_n when primed).
/// sigma_i exchanges the middle y/x pair of block i; tau_j exchanges the last
/// letter of block j with the first letter of block j+1.
Word sigma_tau_apply(const OperatorSpec& spec, bool primed);

enum class PnMethod { Recursion, Formula, Matrix };

/// (p_n, q_n) for n >= 0 by the chosen route.
std::pair<NCPoly, NCPoly> pn_qn(Family family, int n, PnMethod method);

/// p_n with the sign that makes Z(p_n) = zeta({6}_n).
NCPoly normalized_pn(Family family, int n);

/// The shuffle automaton behind each family: 9 states for X4Y2, 8 for X3Y3.
Automaton family_automaton(Family family);
/// P = (P1 P2 P3)^2 for X4Y2, P-hat = (B1 B2)^3 for X3Y3, read off the
/// adjacency matrix of family_automaton.
Matrix family_block_matrix(Family family);

/// The theorem-side index sum: coefficients and compositions, with the
/// coefficients 12^n / 2^S (X4Y2) or 36^n / 3^S (X3Y3).
std::vector<std::pair<Rational, Composition>> theorem_terms(Family family, int n);

/// State indices of the automata for (-xy)* shuffle (xy)* x^2 (xy)^*.
struct SawadaStates {
  static constexpr int q1 = 0, q2 = 1, q3 = 2, q4 = 3, q1p = 4, q2p = 5, q3p = 6, q4p = 7;
};

/// Six-state automaton for (-xy)* shuffle (xy)* x^2, or the eight-state one
/// for (-xy)* shuffle (xy)* x^2 (xy)* when `tail` is set.
Automaton sawada_automaton(bool tail);

}  // namespace mzv
