#include <catch_amalgamated.hpp>

#include <limits>
#include <vector>

#include "kpnf/lattice.hpp"

using namespace kpnf;

TEST_CASE("join and meet are coordinatewise", "[lattice]") {
  Vertex a(CoordVec{1, -2});
  Vertex b(CoordVec{0, 3});
  CHECK(join(a, b) == Vertex(CoordVec{1, 3}));
  CHECK(meet(a, b) == Vertex(CoordVec{0, -2}));
  CHECK(meet(Degree{2, 0}, Degree{1, 1}) == Degree{1, 0});
  CHECK(join(Degree{2, 0}, Degree{1, 1}) == Degree{2, 1});
}

TEST_CASE("degree arithmetic", "[lattice]") {
  CHECK(Degree{2, 1} - Degree{1, 1} == Degree{1, 0});
  CHECK_THROWS_AS((Degree{1, 0} - Degree{0, 1}), StructuralError);
  CHECK_THROWS_AS(Degree({-1, 0}), StructuralError);
  CHECK(truncated_sub(Degree{1, 3}, Degree{2, 1}) == Degree{0, 2});
  CHECK(Degree{1, 2}.norm() == 3);
  CHECK(Degree::unit(3, 2) == Degree{0, 0, 1});
  CHECK(Degree::zero(2).is_zero());
  CHECK(difference(Vertex(CoordVec{1, 1}), Vertex(CoordVec{0, 1})) == Degree{1, 0});
  CHECK_THROWS_AS(difference(Vertex(CoordVec{0, 1}), Vertex(CoordVec{1, 1})),
                  StructuralError);
}

TEST_CASE("vertex translation and order", "[lattice]") {
  Vertex v(CoordVec{1, 1});
  CHECK(v - Degree{1, 0} == Vertex(CoordVec{0, 1}));
  CHECK(v + Degree{0, 2} == Vertex(CoordVec{1, 3}));
  CHECK(Vertex(CoordVec{1, -5}) > Vertex(CoordVec{0, 9}));
  CHECK(Vertex(CoordVec{0, 1}).leq(v));
  CHECK_FALSE(Vertex(CoordVec{2, 0}).leq(v));
  CHECK(to_string(Vertex(CoordVec{-1, 2})) == "(-1,2)");
}

TEST_CASE("coordinates never overflow silently", "[lattice]") {
  Coord  big = std::numeric_limits<Coord>::max();
  Vertex v(CoordVec{big});
  CHECK_THROWS_AS(v + Degree{1}, StructuralError);
  CHECK_THROWS_AS(Vertex(CoordVec{std::numeric_limits<Coord>::min()}) - Degree{1},
                  StructuralError);
}

TEST_CASE("rank mismatch is rejected", "[lattice]") {
  CHECK_THROWS_AS(join(Degree{1}, Degree{1, 0}), StructuralError);
}

TEST_CASE("degrees of a given norm are enumerated lexicographically", "[lattice]") {
  std::vector<Degree> seen;
  for_each_degree_with_norm(2, 2, [&](Degree const& d) { seen.push_back(d); });
  REQUIRE(seen.size() == 3);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  std::size_t count = 0;
  for_each_degree_with_norm(3, 3, [&](Degree const&) { ++count; });
  CHECK(count == 10);
  count = 0;
  for_each_degree_below(Degree{2, 1}, [&](Degree const&) { ++count; });
  CHECK(count == 6);
}
