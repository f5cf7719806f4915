#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mzv/format.hpp"
#include "mzv/operators.hpp"
#include "test_support.hpp"

using namespace mzv;

namespace {

NCPoly P(const char* text, int m = 1) { return parse_poly(text, m); }

Matrix from_rows(std::initializer_list<std::initializer_list<const char*>> rows, int m = 1) {
  Matrix a(static_cast<int>(rows.size()));
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (const char* e : row) a.at(i, j++) = P(e, m);
    ++i;
  }
  return a;
}

Automaton waldschmidt_machine() {
  const Factor fs[] = {{CycloNum(1L), Word("xy")}, {CycloNum(-1L), Word("xy")}};
  return shuffle_automaton(fs, true);
}

}  // namespace

TEST_CASE("basic constructions") {
  const Automaton w = word_automaton(Word("xy"));
  CHECK(w.state_count() == 3);
  CHECK(accepted(w, 8).to_poly() == P("xy"));
  CHECK(testing::error_of([] { word_automaton(Word()); }) == ErrorCode::EmptyWord);

  const Automaton s = star_automaton(w);
  CHECK(s.state_count() == 2);
  CHECK(s.is_final(0));
  CHECK(accepted(s, 6).to_poly() == P("1 + xy + xyxy + xyxyxy"));

  const Automaton neg = scalar_automaton(CycloNum(-1L), w);
  CHECK(accepted(neg, 6).to_poly() == P("-xy"));
  CHECK(accepted(star_automaton(neg), 4).to_poly() == P("1 - xy + xyxy"));

  const Automaton a = word_automaton(Word("xx")), b = word_automaton(Word("yxy"));
  CHECK(accepted(sum_automaton(a, b), 6).to_poly() == P("xx + yxy"));
  CHECK(accepted(concat_automaton(a, b), 6).to_poly() == P("xxyxy"));
  CHECK(accepted(scalar_automaton(CycloNum(3L), sum_automaton(a, b)), 6).to_poly() == P("3*xx + 3*yxy"));
  CHECK(testing::error_of([&] { star_automaton(sum_automaton(a, b)); }) == ErrorCode::NotAChain);
  CHECK(testing::error_of([&] { scalar_automaton(CycloNum(2L), s); }) == ErrorCode::InvalidState);
  CHECK(testing::error_of([&] { Automaton(2).add_transition(0, Label::x(), CycloNum(1L), 5); }) ==
        ErrorCode::InvalidState);
}

TEST_CASE("adjacency of the two-factor shuffle machine") {
  const Automaton m = waldschmidt_machine();
  CHECK(m.state_count() == 4);
  const Matrix a = adjacency(m);
  // Row 2 follows the transition diagram: the feedback edges are -y to q3 and y to q4.
  CHECK(a == from_rows({{"0", "0", "x", "x"}, {"0", "0", "-y", "y"}, {"y", "x", "0", "0"}, {"-y", "x", "0", "0"}}));
  const Matrix a2 = matrix_power(a, 2);
  CHECK(a2.at(0, 0).is_zero());
  CHECK(a2.at(0, 1) == P("2*x^2"));
  CHECK(a2.at(1, 0) == P("-2*y^2"));
  CHECK(matrix_power(a, 4).at(0, 0) == P("-4*x^2y^2"));
  CHECK(matrix_power(a, 0) == Matrix::identity(4));
  CHECK(adjacency(Automaton(3)) == Matrix(3));
}

TEST_CASE("the adjacency matrix as printed breaks the closure identity") {
  const Matrix printed =
      from_rows({{"0", "0", "x", "x"}, {"0", "0", "y", "-y"}, {"y", "x", "0", "0"}, {"-y", "x", "0", "0"}});
  CHECK(matrix_power(printed, 4).at(0, 0) == P("4*x^2y^2"));
}

TEST_CASE("accepted elements") {
  CHECK(accepted(waldschmidt_machine(), 8).to_poly() == P("1 - 4*x^2y^2 + 16*x^2y^2x^2y^2"));
  const Factor fs[] = {{CycloNum(1L), Word("xxy")}, {CycloNum(-1L), Word("xxy")}};
  const Automaton m = shuffle_automaton(fs, true);
  CHECK(m.state_count() == 9);
  CHECK(accepted(m, 6).part(6) == P("-12*x^4y^2 - 6*x^3yxy"));
}

TEST_CASE("shuffle automata agree with the series engine") {
  const std::vector<std::vector<Factor>> cases = {
      {{CycloNum(1L), Word("xy")}, {CycloNum(-1L), Word("xy")}},
      {{CycloNum(2L), Word("x")}, {CycloNum(1L), Word("yxy")}},
      {{CycloNum(1L), Word("xxy")}, {CycloNum(-1L), Word("xy")}},
      {{CycloNum(1L), Word("xy")}, {CycloNum::root_power(3, 1), Word("xy")}, {CycloNum::root_power(3, 2), Word("xy")}},
      {{CycloNum(1L), Word("xy")}, {CycloNum(-1L), Word("y")}, {CycloNum(1L), Word("x")}, {CycloNum(3L), Word("xx")}},
  };
  for (const auto& fs : cases) {
    GradedSeries series = star(NCPoly::monomial(fs[0].coeff, fs[0].word), 12);
    NCPoly plain = NCPoly::monomial(fs[0].coeff, fs[0].word);
    for (std::size_t i = 1; i < fs.size(); ++i) {
      series = shuffle(series, star(NCPoly::monomial(fs[i].coeff, fs[i].word), 12));
      plain = shuffle(plain, NCPoly::monomial(fs[i].coeff, fs[i].word));
    }
    CHECK(accepted(shuffle_automaton(fs, true), 12) == series);
    CHECK(accepted(shuffle_automaton(fs, false), 12).to_poly() == plain);
  }
  const std::vector<Factor> five(5, Factor{CycloNum(1L), Word("x")});
  CHECK(testing::error_of([&] { shuffle_automaton(five, true); }) == ErrorCode::TooManyFactors);
  const Factor empty[] = {{CycloNum(1L), Word()}};
  CHECK(testing::error_of([&] { shuffle_automaton(empty, true); }) == ErrorCode::EmptyWord);
}

TEST_CASE("the three-factor machine") {
  const CycloNum w = CycloNum::root_power(3, 1);
  const Factor fs[] = {{CycloNum(1L), Word("xy")}, {w, Word("xy")}, {w * w, Word("xy")}};
  const Automaton m = shuffle_automaton(fs, true);
  CHECK(m.state_count() == 8);
  CHECK(adjacency(m) == adjacency(family_automaton(Family::X3Y3)));
  const Automaton j = automaton_from_json(automaton_json(m));
  CHECK(adjacency(j) == adjacency(m));
  CHECK(j.finals() == m.finals());
}

TEST_CASE("harmonic automata") {
  const Automaton g = harmonic_automaton({CycloNum(1L), Word::z(2)}, {CycloNum(1L), Word::z(3)}, false);
  CHECK(g.state_count() == 4);
  const auto diagonal = std::count_if(g.transitions().begin(), g.transitions().end(),
                                      [](const Transition& t) { return t.label == Label::z(5); });
  CHECK(diagonal == 1);
  CHECK(accepted(g, 10).to_poly() == harmonic(NCPoly(Word::z(2)), NCPoly(Word::z(3))));

  const Word z21 = Word::z(2) * Word::z(1);
  const Automaton g2 = harmonic_automaton({CycloNum(1L), z21}, {CycloNum(1L), Word::z(3)}, false);
  CHECK(accepted(g2, 10).to_poly() == harmonic(NCPoly(z21), NCPoly(Word::z(3))));

  for (int m : {2, 3, 4}) {
    const CycloNum w = CycloNum::root_power(m, 1);
    const Automaton c = collapse_identical_states(harmonic_automaton({CycloNum(1L), Word::z(2)}, {w, Word::z(2)}, true));
    CHECK(c.state_count() == 1);
    CHECK(adjacency(c).at(0, 0) == NCPoly::monomial(CycloNum(1L) + w, Word::z(2)) + NCPoly::monomial(w, Word::z(4)));
  }
  CHECK(testing::error_of([] {
          harmonic_automaton({CycloNum(1L), Word("xyx")}, {CycloNum(1L), Word::z(2)}, false);
        }) == ErrorCode::NotInH1);

  const Automaton t = harmonic_automaton({CycloNum(1L), z21}, {CycloNum(-1L), Word::z(2)}, true);
  CHECK(accepted(t, 12) == harmonic(star(NCPoly(z21), 12), star(-NCPoly(Word::z(2)), 12)));
}

TEST_CASE("collapse preserves the accepted element") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const Automaton m = testing::random_automaton(rng, 2 + static_cast<int>(rng() % 5));
    CHECK(accepted(collapse_identical_states(m), 8) == accepted(m, 8));
  }
}

TEST_CASE("matrix powers are additive") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 12; ++trial) {
    const Matrix a = adjacency(testing::random_automaton(rng, 6));
    const unsigned m = static_cast<unsigned>(rng() % 5), n = static_cast<unsigned>(rng() % 4);
    CHECK(matrix_power(a, m + n) == matrix_power(a, m) * matrix_power(a, n));
  }
  const Matrix a = adjacency(waldschmidt_machine());
  const auto rows = row_powers(a, 0, 8);
  for (unsigned n = 0; n <= 8; ++n) {
    const Matrix an = matrix_power(a, n);
    for (int j = 0; j < 4; ++j) CHECK(rows[n][static_cast<std::size_t>(j)] == an.at(0, j));
  }
}

TEST_CASE("state series satisfy the linear recursive equations") {
  std::mt19937_64 rng(23);
  std::vector<Automaton> machines = {waldschmidt_machine()};
  for (int i = 0; i < 6; ++i) machines.push_back(testing::random_automaton(rng, 5));
  const int n = 8;
  for (const Automaton& m : machines) {
    for (int k = 0; k < m.state_count(); ++k) {
      GradedSeries rhs(n);
      if (m.is_final(k)) rhs += GradedSeries(NCPoly(1L), n);
      for (const Transition& t : m.transitions()) {
        if (t.from != k) continue;
        rhs += GradedSeries(NCPoly::monomial(t.coeff, t.label.word()), n) * accepted_from(m, t.to, n);
      }
      CHECK(accepted_from(m, k, n) == rhs);
    }
  }
}

TEST_CASE("restricted path sums in the Prop 4.2 automata") {
  using S = SawadaStates;
  const Automaton m = sawada_automaton(false);
  CHECK(m.state_count() == 6);
  CHECK(sawada_automaton(true).state_count() == 8);
  const int q1[] = {S::q1};
  const int left[] = {S::q1, S::q2, S::q3, S::q4};
  CHECK(restricted_accepted(m, S::q1, S::q2, q1, 10).to_poly() == P("2*x^2"));
  CHECK(restricted_accepted(m, S::q2, S::q3, q1, 10).to_poly() == P("-y"));
  CHECK(restricted_accepted(m, S::q2p, S::q1p, left, 10) == GradedSeries(P("-y"), 10) * star(P("-xy"), 10));
  CHECK(restricted_accepted(m, S::q1, S::q1, {}, 12) == star(P("-4*x^2y^2"), 12));
  CHECK(restricted_accepted(m, S::q3, S::q3, {}, 0).to_poly() == NCPoly(1L));
  CHECK(testing::error_of([&] { restricted_accepted(m, 0, 9, {}, 4); }) == ErrorCode::InvalidState);
}

TEST_CASE("vanishing off the lattice") {
  for (const char* base : {"xy", "xxy", "xxxyy"}) {
    CAPTURE(base);
    const Word w(base);
    const Factor fs[] = {{CycloNum(1L), w}, {CycloNum(-1L), w}};
    const auto rows = row_powers(adjacency(shuffle_automaton(fs, true)), 0, 24);
    for (int n = 0; n <= 24; ++n) {
      if (n % (2 * w.size()) != 0) CHECK(rows[static_cast<std::size_t>(n)][0].is_zero());
    }
  }
  const auto rows = row_powers(adjacency(family_automaton(Family::X3Y3)), 0, 24);
  for (int n = 0; n <= 24; ++n) {
    CAPTURE(n);
    CHECK(rows[static_cast<std::size_t>(n)][0].is_zero() == (n % 6 != 0));
  }
}
