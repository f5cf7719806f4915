#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mzv/operators.hpp"
#include "mzv/report.hpp"
#include "mzv/zeta.hpp"

namespace mzv {

inline constexpr long kDefaultCutoff = 100000;
inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// (xy)* shuffle (-xy)* = (-4x^2y^2)*, by automaton and by series algebra.
Report verify_waldschmidt(int max_weight);
/// zeta({3,1}_n) = 2 pi^(4n) / (4n+2)!.
Report verify_zagier_broadhurst(int n, long cutoff);
/// m-fold harmonic product of (w^j z_k)* against ((-1)^(m-1) z_{mk})*.
Report verify_harmonic_closures(int m, int k, int max_weight);
/// Z(w1 * w2) = Z(w1 shuffle w2) on random admissible pairs.
Report verify_double_shuffle(int samples, int max_weight, long cutoff, std::uint64_t seed);
/// The zeta({k}_p) product sums coming from the harmonic closures, exactly in
/// pi-coefficients. k must be even and m*k <= 14.
Report verify_closure_zeta_sums(int m, int k, int n);
/// Alternating harmonic identity between z_4 z_2 z_4 words and z_2 powers.
Report verify_stuffle_alternating(int n);

enum class SawadaPart { Prop42i, Prop42ii, Thm41i, Thm41ii, Lemma };
SawadaPart parse_sawada_part(const std::string& s);
const char* sawada_part_name(SawadaPart p);
/// Prop parts are exact up to `max_weight`; theorem and lemma parts are
/// numeric at `cutoff`.
Report verify_sawada(SawadaPart part, int n, long cutoff, int max_weight);

/// Shuffle automaton of (x^2y)* and (-x^2y)*: p_n by three routes and the
/// zeta({6}_n) evaluation of the theorem's index sum.
Report verify_x2y(int n, long cutoff);
/// Three-factor machine with cube roots of unity, same structure.
Report verify_dim3(int n, long cutoff);

/// a_11^(n) = 0 off the lattice 2l Z (arity 2, factors +-w) or 3l Z (arity 3,
/// factors w, omega w, omega^2 w).
Report verify_vanishing(Word base, int arity, int n_max);

/// Sign-sum coefficients against the closed forms.
Report verify_appendix(int k_lo, int k_hi, int n_lo, int n_hi);

struct SuiteOptions {
  long cutoff = kDefaultCutoff;
  std::uint64_t seed = kDefaultSeed;
};

/// Every identity with its default parameters, sorted by identity name.
std::vector<Report> verify_all(const SuiteOptions& opts);

/// Names accepted by the CLI `verify` verb, besides "all".
const std::vector<std::string>& verifier_names();

}  // namespace mzv
