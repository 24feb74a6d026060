#include <doctest.h>

#include "compactlab/boundary.hpp"
#include "test_support.hpp"

using namespace compactlab;

namespace {
BoundaryPoint pt(const char* text) { return BoundaryPoint::parse(text, 2); }
ReducedWord w(const char* text) { return ReducedWord::parse(text, 2); }
}  // namespace

TEST_CASE("normalization examples") {
  CHECK(BoundaryPoint::make(w("ab"), w("ab")) == pt("(ab)"));
  CHECK(BoundaryPoint::make(w(""), w("a")) == pt("(a)"));
  CHECK_THROWS_AS(BoundaryPoint::make(w("a"), w("A")), Error);
  CHECK_THROWS_AS(BoundaryPoint::make(w("a"), w("")), Error);
  // Primitive root and prefix shifting.
  CHECK(BoundaryPoint::make(w(""), w("abab")) == pt("(ab)"));
  CHECK(BoundaryPoint::make(w("a"), w("ba")) == pt("(ab)"));
  CHECK(pt("ab(ab)") == pt("(ab)"));
}

TEST_CASE("normalization is idempotent and canonical on random points") {
  testsupport::Gen gen(0xB0A701);
  for (int i = 0; i < 300; ++i) {
    const BoundaryPoint x = gen.point(6, 6);
    const BoundaryPoint again = BoundaryPoint::make(x.prefix(), x.period());
    CHECK(again == x);
    // No shorter prefix representation survives normalization.
    if (!x.prefix().is_identity()) {
      CHECK(!(x.prefix().last() == x.period().last()));
    }
  }
}

TEST_CASE("prefix unrolls the period") {
  CHECK(pt("(a)").prefix_word(3).str() == "aaa");
  CHECK(pt("b(aB)").prefix_word(4).str() == "baBa");
  CHECK(pt("(ab)").prefix_word(0).str() == "1");
}

TEST_CASE("action examples") {
  CHECK(pt("(a)").acted_by(w("A")) == pt("(a)"));
  CHECK(pt("(a)").acted_by(w("b")) == pt("b(a)"));
  CHECK(pt("(ab)").acted_by(w("")) == pt("(ab)"));
}

TEST_CASE("action respects the group law and prefix truncation") {
  testsupport::Gen gen(0xB0A702);
  for (int i = 0; i < 1000; ++i) {
    const ReducedWord g = gen.word(6);
    const ReducedWord h = gen.word(6);
    const BoundaryPoint x = gen.point(5, 5);
    CHECK(x.acted_by(multiply(g, h)) == x.acted_by(h).acted_by(g));
    // prefix(g.x, d) = reduce(g . prefix(x, d + |g|)) truncated to d letters.
    for (std::size_t d : {0u, 1u, 3u, 6u}) {
      const ReducedWord expected =
          multiply(g, x.prefix_word(d + g.length())).prefix(d);
      CHECK(x.acted_by(g).prefix_word(d) == expected);
    }
  }
}

TEST_CASE("points_equal matches canonical equality") {
  CHECK(points_equal(pt("(ab)"), pt("ab(ab)")));
  CHECK_FALSE(points_equal(pt("(a)"), pt("(A)")));
  CHECK(points_equal(BoundaryPoint::make(w("a"), w("ba")), pt("(ab)")));
  testsupport::Gen gen(0xB0A703);
  for (int i = 0; i < 300; ++i) {
    const BoundaryPoint x = gen.point(4, 4);
    const BoundaryPoint y = gen.point(4, 4);
    CHECK(points_equal(x, y) == (x == y));
  }
}

TEST_CASE("visual metric stabilizes for distinct points") {
  testsupport::Gen gen(0xB0A704);
  for (int i = 0; i < 200; ++i) {
    const BoundaryPoint x = gen.point(4, 4);
    const BoundaryPoint y = gen.point(4, 4);
    if (x == y) continue;
    const std::size_t d1 = common_prefix_length(x.prefix_word(40), y.prefix_word(40));
    const std::size_t d2 = common_prefix_length(x.prefix_word(80), y.prefix_word(80));
    CHECK(d1 == d2);  // the common prefix has stabilized well below depth 40
  }
}

TEST_CASE("powers limit strips conjugation") {
  CHECK(powers_limit(w("a")) == pt("(a)"));
  CHECK(powers_limit(w("A")) == pt("(A)"));
  CHECK(powers_limit(w("bAB")) == pt("b(A)"));
  CHECK(powers_limit(w("ab")) == pt("(ab)"));
  testsupport::Gen gen(0xB0A705);
  for (int i = 0; i < 200; ++i) {
    const ReducedWord g = gen.nonempty_word(6);
    const BoundaryPoint limit = powers_limit(g);
    // Powers approach their limit: common prefixes grow.
    ReducedWord p = g;
    std::size_t last = 0;
    for (int n = 1; n <= 6; ++n) {
      const std::size_t agree = common_prefix_length(p, limit);
      CHECK(agree >= last);
      last = agree;
      p = multiply(p, g);
    }
    CHECK(last >= 3 * g.length() / 2);
  }
}

TEST_CASE("point grammar round-trips") {
  for (const char* text : {"(a)", "(ab)", "b(aB)", "aaBAAAbbbbbab(aaaaaaab)"}) {
    const BoundaryPoint x = pt(text);
    CHECK(BoundaryPoint::parse(x.str(), 2) == x);
  }
  CHECK_THROWS_AS(BoundaryPoint::parse("ab", 2), Error);
  CHECK_THROWS_AS(BoundaryPoint::parse("ab()", 2), Error);
}
