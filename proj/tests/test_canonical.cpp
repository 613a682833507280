#include <catch_amalgamated.hpp>

#include <vector>

#include "kpnf/canonical.hpp"
#include "oracles.hpp"

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

  // Pairs of nonzero-degree paths with source s and |d| <= bound.
  std::vector<PathPair> pairs_at(GraphConfig const& g, Vertex const& s, Coord bound) {
    std::vector<Path> paths;
    for (Coord len = 1; len <= bound; ++len) {
      for_each_degree_with_norm(s.rank(), len, [&](Degree const& n) {
        for (Path& p : enumerate_paths(g, s + n, n)) {
          paths.push_back(std::move(p));
        }
      });
    }
    std::vector<PathPair> out;
    for (Path const& a : paths) {
      for (Path const& b : paths) {
        out.emplace_back(a, b);
      }
    }
    return out;
  }
}  // namespace

TEST_CASE("path pairs need nonzero degrees and a common source", "[canonical]") {
  CHECK_THROWS_AS(PathPair(Path::vertex(V({0, 0})), P({1, 0}, {0, 0}, {1})),
                  MembershipError);
  CHECK_THROWS_AS(PathPair(P({1, 1}, {0, 1}, {1}), P({1, 1}, {1, 0}, {1})),
                  MembershipError);
}

TEST_CASE("membership in A", "[canonical]") {
  Path lam = P({1, 1}, {1, 0}, {2});
  CHECK(in_A(lam, lam));
  Path ones = P({1, 1}, {0, 0}, {1, 1});
  CHECK_FALSE(in_A(ones, ones));
  CHECK(in_A(P({1, 1}, {0, 1}, {1}), P({1, 1}, {1, 0}, {1})));
  CHECK_THROWS_AS(class_key(PathPair(ones, ones)), MembershipError);
}

TEST_CASE("class keys and the lex-max representative", "[canonical]") {
  Path lam  = P({1, 1}, {1, 0}, {2});
  Path lam2 = P({1, 1}, {0, 1}, {2});
  ClassKey key = class_key(PathPair(lam, lam));
  CHECK(key == class_key(PathPair(lam2, lam2)));
  CHECK(key.levels_left == LevelVector::high_first({2}));
  CHECK(equivalent(PathPair(lam, lam), PathPair(lam2, lam2)));

  auto cands = source_candidates(key);
  REQUIRE(cands.size() == 2);
  CHECK(cands[0] == V({1, 0}));
  CHECK(cands[1] == V({0, 1}));
  CHECK(representative(key) == PathPair(lam, lam));
  CHECK(in_R(PathPair(lam, lam)));
  CHECK_FALSE(in_R(PathPair(lam2, lam2)));
  CHECK(in_A_not_R(lam2, lam2));

  ClassKey k2{V({1, 0}), V({1, 0}), LevelVector::high_first({2}),
              LevelVector::high_first({2})};
  CHECK(representative_source(k2) == V({1, -1}));
  auto c2 = source_candidates(k2);
  REQUIRE(c2.size() == 2);
  CHECK(c2[1] == V({0, 0}));

  // Different lv(mu): different classes.
  Path mu = P({1, 1}, {1, 0}, {1});
  CHECK_FALSE(equivalent(PathPair(lam, lam), PathPair(lam, mu)));
}

TEST_CASE("orthogonal degrees give singleton classes", "[canonical]") {
  GraphConfig g{2, 2};
  for (PathPair const& pair : pairs_at(g, V({0, 0}), 3)) {
    Degree d = meet(pair.left().degree(), pair.right().degree());
    if (!d.is_zero()) {
      continue;
    }
    auto members = class_members(class_key(pair));
    REQUIRE(members.size() == 1);
    CHECK(members[0] == pair);
    CHECK(in_R(pair));
  }
}

TEST_CASE("unrealizable keys", "[canonical]") {
  ClassKey bad{V({1, 1}), V({1, 1}), LevelVector::high_first({1, 1}),
               LevelVector::high_first({1, 1})};
  CHECK_FALSE(realizable(bad));
  CHECK(source_candidates(bad).empty());
  CHECK_THROWS_AS(representative(bad), MembershipError);
  ClassKey mismatch{V({1, 1}), V({1, 1}), LevelVector::high_first({2}),
                    LevelVector::high_first({2, 2})};
  CHECK_FALSE(realizable(mismatch));
}

TEST_CASE("class members lie in A and share the key", "[canonical][property]") {
  GraphConfig g{2, 2};
  for (PathPair const& pair : pairs_at(g, V({0, 0}), 3)) {
    if (!in_A(pair)) {
      continue;
    }
    ClassKey key     = class_key(pair);
    auto     members = class_members(key);
    CHECK(std::find(members.begin(), members.end(), pair) != members.end());
    CHECK(std::find(members.begin(), members.end(), representative(key))
          != members.end());
    for (PathPair const& m : members) {
      CHECK(in_A(m));
      CHECK(class_key(m) == key);
    }
  }
}

TEST_CASE("in_A and equivalent agree with the definitions", "[canonical][oracle]") {
  for (int level = 1; level <= 2; ++level) {
    GraphConfig           g{2, level};
    std::vector<PathPair> pairs;
    for (Coord x = -1; x <= 0; ++x) {
      for (PathPair const& p : pairs_at(g, V({x, 0}), 2)) {
        pairs.push_back(p);
      }
      for (PathPair const& p : pairs_at(g, V({x, -1}), 2)) {
        pairs.push_back(p);
      }
    }
    std::vector<PathPair> in;
    for (PathPair const& p : pairs) {
      bool lib = in_A(p);
      REQUIRE(lib == oracle::in_A(g, p.left(), p.right()));
      if (lib) {
        in.push_back(p);
      }
    }
    for (PathPair const& a : in) {
      for (PathPair const& b : in) {
        REQUIRE(equivalent(a, b)
                == oracle::equivalent(a.left(), a.right(), b.left(), b.right()));
      }
    }
  }
}
