#include <catch_amalgamated.hpp>

#include "kpnf/freealg.hpp"
#include "kpnf/ring.hpp"
#include "kpnf/sampling.hpp"
#include "kpnf/text.hpp"

using namespace kpnf;

namespace {
  Vertex V(std::initializer_list<Coord> c) {
    return Vertex(CoordVec(c));
  }

  Path P(std::initializer_list<Coord> r,
         std::initializer_list<Coord> s,
         std::initializer_list<int>   lv) {
    return Path(V(r), V(s), LevelVector::high_first(lv));
  }
}  // namespace

TEST_CASE("rings reduce coefficients canonically", "[ring]") {
  Ring z5 = Ring::zmod(5);
  CHECK(z5.reduce(-1) == 4);
  CHECK(z5.reduce(12) == 2);
  CHECK(z5.add(3, 4) == 2);
  CHECK(z5.negate(1) == 4);
  CHECK(z5.multiply(3, 4) == 2);
  CHECK(z5.is_zero(10));
  CHECK(z5.name() == "zmod:5");
  Ring z = Ring::integers();
  CHECK(z.reduce(-7) == -7);
  CHECK(z.name() == "int");
  CHECK_THROWS_AS(Ring::zmod(1), RingMismatch);
  CHECK_THROWS_AS(require_same_ring(z, z5), RingMismatch);
  Coeff huge("123456789012345678901234567890");
  CHECK(z.multiply(huge, huge) > huge);
}

TEST_CASE("generators", "[freealg]") {
  Path p = P({1, 1}, {0, 0}, {2, 1});
  CHECK(Generator::path(p).star() == Generator::ghost(p));
  CHECK(Generator::ghost(p).star() == Generator::path(p));
  Generator v = Generator::vertex(V({0, 0}));
  CHECK(v.star() == v);
  CHECK_THROWS_AS(Generator::path(Path::vertex(V({0, 0}))), StructuralError);
  CHECK(Generator::of(Path::vertex(V({0, 0}))) == v);
  CHECK(Generator::ghost_of(Path::vertex(V({0, 0}))) == v);
  CHECK(to_string(Generator::ghost(p)) == "p[(1,1)->(0,0);2,1]*");
}

TEST_CASE("words are ordered by length first", "[freealg]") {
  Generator a = Generator::vertex(V({5}));
  Generator b = Generator::vertex(V({0}));
  CHECK(Word{a} < Word{b, b});
  CHECK(Word{b} < Word{a});
  CHECK((Word{a} * Word{b}).size() == 2);
  CHECK_THROWS_AS(Word(Word::Letters{}), StructuralError);
}

TEST_CASE("element arithmetic", "[freealg]") {
  Ring      z = Ring::integers();
  Generator a = Generator::vertex(V({0}));
  Generator b = Generator::vertex(V({1}));
  Element   x = Element::monomial(z, Word{a}, 2);
  Element   y = Element::monomial(z, Word{b}, -1);
  Element   s = x + y;
  CHECK(s.size() == 2);
  CHECK((s - s).is_zero());
  CHECK(s.scaled(0).is_zero());
  Element prod = s * s;
  CHECK(prod.size() == 4);
  CHECK(prod.coefficient(Word{a, b}) == -2);
  CHECK(prod.coefficient(Word{b, b}) == 1);

  Ring    z3 = Ring::zmod(3);
  Element w  = Element::monomial(z3, Word{a}, 3);
  CHECK(w.is_zero());
  CHECK_THROWS_AS(x + Element::monomial(z3, Word{a}), RingMismatch);
  CHECK(change_ring(x, z3).coefficient(Word{a}) == 2);
  CHECK(change_ring(x.scaled(3), z3).is_zero());
}

TEST_CASE("star is an anti-involution on the free algebra", "[freealg][property]") {
  GraphConfig g{2, 2};
  Ring        z = Ring::integers();
  for (std::uint64_t i = 0; i < 200; ++i) {
    Sampler s(g, Window::uniform(2, -2, 2, 2), case_seed(7, i));
    Element x = s.element(z, 3, 3, 2);
    Element y = s.element(z, 3, 3, 2);
    CHECK(star(star(x)) == x);
    CHECK(star(x * y) == star(y) * star(x));
    CHECK(star(x + y) == star(x) + star(y));
  }
}

TEST_CASE("extract_greatest removes the largest word", "[freealg]") {
  Ring      z = Ring::integers();
  Generator a = Generator::vertex(V({0}));
  Element   x = Element::monomial(z, Word{a, a}, 4) + Element::monomial(z, Word{a}, 1);
  auto [w, c] = x.extract_greatest();
  CHECK(w == Word{a, a});
  CHECK(c == 4);
  CHECK(x.size() == 1);
}
