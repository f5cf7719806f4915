#pragma once

#include <random>

#include "mzv/automaton.hpp"
#include "mzv/error.hpp"
#include "mzv/ncpoly.hpp"

namespace testing {

/// Error code raised by `f`, or nullopt when it returns normally.
template <class F>
std::optional<mzv::ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const mzv::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline mzv::Word random_word(std::mt19937_64& rng, int len) {
  std::string s;
  for (int i = 0; i < len; ++i) s += (rng() & 1U) ? 'y' : 'x';
  return mzv::Word(s);
}

/// Random polynomial with small integer coefficients and words of length in [lo, hi].
inline mzv::NCPoly random_poly(std::mt19937_64& rng, int terms, int lo, int hi) {
  mzv::NCPoly p;
  std::uniform_int_distribution<int> len(lo, hi), coeff(-3, 3);
  for (int i = 0; i < terms; ++i) p.add_term(random_word(rng, len(rng)), mzv::CycloNum(static_cast<long>(coeff(rng))));
  return p;
}

/// Random automaton with two transitions per state and small integer weights.
inline mzv::Automaton random_automaton(std::mt19937_64& rng, int states) {
  mzv::Automaton m(states);
  for (int s = 0; s < states; ++s) {
    if (rng() % 3 == 0) m.set_final(s);
    for (int e = 0; e < 2; ++e) {
      const int to = static_cast<int>(rng() % states);
      m.add_transition(s, mzv::Label::of(rng() & 1U ? mzv::Letter::Y : mzv::Letter::X),
                       mzv::CycloNum(static_cast<long>(rng() % 5) - 2), to);
    }
  }
  return m;
}

}  // namespace testing
