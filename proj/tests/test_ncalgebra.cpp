#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mzv/composition.hpp"
#include "mzv/format.hpp"
#include "mzv/series.hpp"
#include "test_support.hpp"

using namespace mzv;

namespace {

NCPoly P(const char* text, int m = 1) { return parse_poly(text, m); }

Word z_word(std::initializer_list<int> parts) { return composition_to_word(Composition(parts)); }

Word word_power(Word w, int n) {
  Word out;
  for (int i = 0; i < n; ++i) out = out * w;
  return out;
}

}  // namespace

TEST_CASE("word literals and predicates") {
  CHECK(parse_word("x^2y^2") == Word("xxyy"));
  CHECK(parse_word("1").empty());
  CHECK(Word("xxyy").str() == "x^2y^2");
  CHECK(Word("xy").admissible());
  CHECK_FALSE(Word("yx").admissible());
  CHECK(Word().admissible());
  CHECK(Word("yxy").in_h1());
  CHECK_FALSE(Word("xyx").in_h1());
  CHECK(Word::z(3) == Word("xxy"));
  CHECK(Word("xy") < Word("yy"));
  CHECK(Word("yy") < Word("xxx"));
  CHECK(Word("xyxy").swap_adjacent(1) == Word("xxyy"));
  CHECK(testing::error_of([] { (void)Word("xy").swap_adjacent(1); }) == ErrorCode::IndexOutOfRange);
  CHECK(testing::error_of([] { parse_word("xz"); }) == ErrorCode::ParseError);
  CHECK(testing::error_of([] { (void)(Word::power(Letter::X, 40) * Word::power(Letter::Y, 30)); }) ==
        ErrorCode::LengthGuard);
}

TEST_CASE("text round trip of words") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Word w = testing::random_word(rng, static_cast<int>(rng() % 20));
    CHECK(parse_word(w.str()) == w);
  }
}

TEST_CASE("compositions") {
  CHECK(word_to_composition(Word("xxyxy")) == Composition({3, 2}));
  CHECK(composition_to_word(Composition({3, 1})) == Word("xxyy"));
  CHECK(testing::error_of([] { word_to_composition(Word("yx")); }) == ErrorCode::NotInH1);
  CHECK(parse_composition("3,1") == Composition({3, 1}));
  CHECK(Composition({3, 1}).weight() == 4);
  CHECK(Composition({3, 1}).depth() == 2);
  CHECK(Composition({2, 5}).admissible());
  CHECK_FALSE(Composition({1, 2}).admissible());
  CHECK(parse_composition(Composition({4, 1, 1}).str()) == Composition({4, 1, 1}));
  for (const char* w : {"xy", "xxyxy", "yyy", "xxxyxyy"}) {
    CHECK(composition_to_word(word_to_composition(Word(w))) == Word(w));
    CHECK(word_to_composition(Word(w)).admissible() == Word(w).admissible());
  }
}

TEST_CASE("polynomial arithmetic") {
  CHECK(NCPoly(Word("x")) * NCPoly(Word("y")) == NCPoly(Word("xy")));
  CHECK(NCPoly(Word("xxyy")) * CycloNum(-4L) == P("-4*x^2y^2"));
  const NCPoly p = P("2*xy - yx + 3");
  CHECK(p + NCPoly() == p);
  CHECK((p - p).is_zero());
  CHECK(p.homogeneous(2) + p.homogeneous(0) == p);
  CHECK(p.max_weight() == 2);
  CHECK(p.min_weight() == 0);
  CHECK(parse_poly(poly_text(p), 1) == p);
  const NCPoly q = P("(1+w)*xy - (w^2)*y", 3);
  CHECK(parse_poly(poly_text(q, 3), 3) == q);
}

TEST_CASE("shuffle examples") {
  CHECK(shuffle(NCPoly(Word("x")), NCPoly(Word("y"))) == P("xy + yx"));
  CHECK(shuffle(NCPoly(Word("xy")), NCPoly(Word("xy"))) == P("2*xyxy + 4*x^2y^2"));
  const NCPoly xy(Word("xy"));
  const NCPoly weight4 = shuffle(xy, -xy) + NCPoly(Word("xyxy")) + NCPoly(Word("xyxy"));
  CHECK(weight4 == P("-4*x^2y^2"));
  CHECK(shuffle(xy, NCPoly(1L)) == xy);
}

TEST_CASE("shuffle oracle") {
  CHECK(shuffle_oracle(Word("x"), Word("y")) == P("xy + yx"));
  CHECK(shuffle_oracle(Word("xy"), Word("xy")) == P("2*xyxy + 4*x^2y^2"));
  CHECK(shuffle_oracle(Word("xy"), Word()) == NCPoly(Word("xy")));
  CHECK(testing::error_of([] { shuffle_oracle(Word::power(Letter::X, 9), Word::power(Letter::Y, 8)); }) ==
        ErrorCode::LengthGuard);
}

TEST_CASE("recursive shuffle equals interleaving enumeration up to combined length 10") {
  long pairs = 0;
  for (int total = 0; total <= 10; ++total) {
    for (int a = 0; a <= total; ++a) {
      const int b = total - a;
      for (std::uint64_t u = 0; u < (1ULL << a); ++u) {
        for (std::uint64_t v = 0; v < (1ULL << b); ++v) {
          std::string s1, s2;
          for (int i = a - 1; i >= 0; --i) s1 += (u >> i) & 1U ? 'y' : 'x';
          for (int i = b - 1; i >= 0; --i) s2 += (v >> i) & 1U ? 'y' : 'x';
          const Word w1(s1), w2(s2);
          if (shuffle(NCPoly(w1), NCPoly(w2)) != shuffle_oracle(w1, w2)) FAIL("mismatch at " << s1 << ", " << s2);
          ++pairs;
        }
      }
    }
  }
  CHECK(pairs == 20481);
}

TEST_CASE("shuffle is commutative, associative and weight preserving") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    const NCPoly a = testing::random_poly(rng, 3, 1, 3);
    const NCPoly b = testing::random_poly(rng, 3, 1, 3);
    const NCPoly c = testing::random_poly(rng, 2, 1, 4);
    CHECK(shuffle(a, b) == shuffle(b, a));
    CHECK(shuffle(shuffle(a, b), c) == shuffle(a, shuffle(b, c)));
    const NCPoly ha = a.homogeneous(2), hb = b.homogeneous(3);
    const NCPoly s = shuffle(ha, hb);
    CHECK((s.is_zero() || s.is_homogeneous(5)));
  }
}

TEST_CASE("harmonic examples") {
  const NCPoly z2(Word::z(2)), z3(Word::z(3));
  CHECK(harmonic(z2, z3) == NCPoly(z_word({2, 3})) + NCPoly(z_word({3, 2})) + NCPoly(Word::z(5)));
  CHECK(harmonic(z2, z2) == NCPoly(z_word({2, 2})) * CycloNum(2L) + NCPoly(Word::z(4)));
  CHECK(harmonic(z2, NCPoly(1L)) == z2);
  CHECK(testing::error_of([&] { harmonic(NCPoly(Word("xyx")), z2); }) == ErrorCode::NotInH1);
}

TEST_CASE("harmonic is commutative, associative and weight preserving") {
  std::mt19937_64 rng(5);
  auto random_h1 = [&](int terms) {
    NCPoly p;
    for (int i = 0; i < terms; ++i) {
      const Word w = testing::random_word(rng, 1 + static_cast<int>(rng() % 3)) * Word::y();
      p.add_term(w, CycloNum(static_cast<long>(rng() % 5) - 2));
    }
    return p;
  };
  for (int trial = 0; trial < 15; ++trial) {
    const NCPoly a = random_h1(3), b = random_h1(3), c = random_h1(2);
    CHECK(harmonic(a, b) == harmonic(b, a));
    CHECK(harmonic(harmonic(a, b), c) == harmonic(a, harmonic(b, c)));
    const NCPoly s = harmonic(a.homogeneous(2), b.homogeneous(3));
    CHECK((s.is_zero() || s.is_homogeneous(5)));
  }
}

TEST_CASE("alternating harmonic identity between z_2 powers and z_4 z_2 z_4 words") {
  const Word z2 = Word::z(2), z4 = Word::z(4);
  SUBCASE("hand instance n = 1") {
    const NCPoly rhs = harmonic(NCPoly(1L), NCPoly(word_power(z2, 3))) * CycloNum(-3L) +
                       harmonic(NCPoly(z2), NCPoly(word_power(z2, 2)));
    CHECK(rhs == NCPoly(z2 * z4) + NCPoly(z4 * z2));
  }
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    NCPoly lhs;
    for (int p = 1; p <= n + 1; ++p) lhs.add_term(word_power(z4, p - 1) * z2 * word_power(z4, n + 1 - p), CycloNum(1L));
    if (n % 2 == 0) lhs = -lhs;
    NCPoly rhs;
    for (int p = 0; p <= n; ++p) {
      const long c = (p % 2 == 0 ? -1 : 1) * (2L * n + 1 - 2L * p);
      rhs += harmonic(NCPoly(word_power(z2, p)), NCPoly(word_power(z2, 2 * n + 1 - p))) * CycloNum(c);
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("Kleene closure") {
  CHECK(star(P("-4*x^2y^2"), 8).to_poly() == P("1 - 4*x^2y^2 + 16*x^2y^2x^2y^2"));
  CHECK(star(P("xy"), 4).to_poly() == P("1 + xy + xyxy"));
  CHECK(testing::error_of([] { star(P("1 + xy"), 4); }) == ErrorCode::NonzeroConstantTerm);
  // (w + w^2 + ...)* = 1 + w + 2w^2 + 4w^3 + ...
  CHECK(star(star(P("xy"), 8) - GradedSeries(NCPoly(1L), 8)).to_poly() ==
        P("1 + xy + 2*xyxy + 4*xyxyxy + 8*xyxyxyxy"));
}

TEST_CASE("series operations") {
  const GradedSeries inv = star(P("xy"), 8) * GradedSeries(P("1 - xy"), 8);
  CHECK(inv.to_poly() == NCPoly(1L));
  CHECK(shuffle(star(P("xy"), 8), star(P("-xy"), 8)).to_poly() == P("1 - 4*x^2y^2 + 16*x^2y^2x^2y^2"));
  CHECK(harmonic(star(P("xy"), 8), star(P("-xy"), 8)).to_poly() == P("1 - x^3y + x^3yx^3y"));
  const GradedSeries a = star(P("xy"), 10), b = star(P("x"), 6);
  CHECK((a * b).max_weight() == 6);
  CHECK(shuffle(a, b).max_weight() == 6);
  CHECK(a.truncated(4).to_poly() == P("1 + xy + xyxy"));
  CHECK(testing::error_of([] { GradedSeries(4).add_to_part(2, P("x")); }).has_value());
}

TEST_CASE("star inverse law on random constant-free polynomials") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const NCPoly p = testing::random_poly(rng, 3, 1, 4);
    const GradedSeries s = star(p, 12);
    const GradedSeries one_minus(NCPoly(1L) - p, 12);
    CHECK((s * one_minus).to_poly() == NCPoly(1L));
    CHECK((one_minus * s).to_poly() == NCPoly(1L));
  }
}
