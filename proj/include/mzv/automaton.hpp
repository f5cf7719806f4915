#pragma once

#include <span>
#include <string>
#include <vector>

#include "mzv/ncpoly.hpp"
#include "mzv/series.hpp"

namespace mzv {

/// Transition letter: x, y, or the composite block z_k = x^(k-1) y.
struct Label {
  enum class Kind : std::uint8_t { X, Y, Z };
  Kind kind = Kind::X;
  int k = 0;

  static Label x() { return {Kind::X, 0}; }
  static Label y() { return {Kind::Y, 0}; }
  static Label z(int k) { return {Kind::Z, k}; }
  static Label of(Letter l) { return l == Letter::X ? x() : y(); }
  static Label parse(std::string_view text);

  Word word() const;
  int weight() const noexcept { return kind == Kind::Z ? k : 1; }
  std::string str() const;

  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;
};

struct Transition {
  int from;
  Label label;
  CycloNum coeff;
  int to;
};

/// Weighted nondeterministic automaton. States are 0-based here; state 0 is
/// the initial state. Text and JSON output use the 1-based q_i numbering.
class Automaton {
 public:
  explicit Automaton(int states = 1);

  int state_count() const noexcept { return states_; }
  const std::vector<Transition>& transitions() const noexcept { return transitions_; }

  /// Zero coefficients are dropped. Throws InvalidState for out-of-range states.
  void add_transition(int from, Label label, const CycloNum& coeff, int to);
  void set_final(int state, bool final = true);
  bool is_final(int state) const;
  std::vector<int> finals() const;

 private:
  void check_state(int s) const;

  int states_;
  std::vector<Transition> transitions_;
  std::vector<bool> finals_;
};

// Basic constructions. Sum, concatenation and scaling add a fresh initial
// state and drop states that become unreachable.
Automaton word_automaton(Word w);
Automaton sum_automaton(const Automaton& a, const Automaton& b);
Automaton concat_automaton(const Automaton& a, const Automaton& b);
/// Throws InvalidState when the initial state is final and c != 1, since the
/// constant term cannot be carried by a transition.
Automaton scalar_automaton(const CycloNum& c, const Automaton& m);
/// Closure of a chain (an automaton built by word_automaton, possibly scaled).
Automaton star_automaton(const Automaton& chain);

struct Factor {
  CycloNum coeff;
  Word word;
};

/// Shuffle automaton of up to four scaled words. Starred gives the product of
/// cycles with q1 initial and final; otherwise the grid with the final last.
Automaton shuffle_automaton(std::span<const Factor> factors, bool starred);

/// Harmonic automaton of two scaled z-words, with composite z-letters and
/// diagonal transitions z_{p+q}.
Automaton harmonic_automaton(const Factor& a, const Factor& b, bool starred);
/// Pair construction accepting the harmonic product of two z-letter automata.
Automaton harmonic_product(const Automaton& a, const Automaton& b);
/// Merges parallel transitions and weighted-bisimilar states.
Automaton collapse_identical_states(const Automaton& m);

/// Square matrix of word polynomials.
class Matrix {
 public:
  explicit Matrix(int dim = 0);
  static Matrix identity(int dim);

  int dim() const noexcept { return dim_; }
  NCPoly& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }
  const NCPoly& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }
  /// Rows [r0, r1) by columns [c0, c1).
  Matrix block(int r0, int r1, int c0, int c1) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int dim_;
  std::vector<NCPoly> entries_;
};

Matrix adjacency(const Automaton& m);
Matrix matrix_power(const Matrix& a, unsigned n);
/// Row `row` of a^n for n = 0..n_max, by repeated row-vector products.
std::vector<std::vector<NCPoly>> row_powers(const Matrix& a, int row, int n_max);

/// Sum of accepted words up to weight n_max.
GradedSeries accepted(const Automaton& m, int n_max);
/// Same, with `state` in place of the initial state.
GradedSeries accepted_from(const Automaton& m, int state, int n_max);
/// Sum over paths from `from` to `to` whose interior vertices avoid `avoid`.
/// The endpoints themselves are exempt from the restriction.
GradedSeries restricted_accepted(const Automaton& m, int from, int to, std::span<const int> avoid, int n_max);

}  // namespace mzv
