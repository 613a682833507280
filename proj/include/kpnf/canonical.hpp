// kpnf - normal forms in Kumjian-Pask algebras of standard k-graphs
//
// Pairs (lambda, mu) of nonzero-degree paths with a common source, the
// subset A of pairs without a common trailing all-ones factor, the
// equivalence ~ on A, and a chosen representative for each class.
//
// A ~-class is determined by the ranges and level vectors of its members;
// ClassKey is that 4-tuple. The members of a class differ only in their
// common source s, which ranges over
//
//   { s in Z^k : s <= r(lambda) ^ r(mu), |s| = |r(lambda)| - |lv(lambda)| }.
//
// The representative is the member whose source is lexicographically
// greatest. Any other choice rule yields an equally valid basis; swapping
// it only requires changing representative_source() below.

#ifndef KPNF_CANONICAL_HPP_
#define KPNF_CANONICAL_HPP_

#include <algorithm>
#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "kgraph.hpp"
#include "lattice.hpp"

namespace kpnf {

  // An element of Â: both paths of nonzero degree, equal sources.
  class PathPair {
   public:
    PathPair(Path left, Path right)
        : _left(std::move(left)), _right(std::move(right)) {
      if (_left.is_vertex() || _right.is_vertex()) {
        throw MembershipError("path pairs need nonzero degree paths");
      }
      if (_left.source() != _right.source()) {
        throw MembershipError("path pairs need a common source");
      }
    }

    Path const& left() const noexcept {
      return _left;
    }

    Path const& right() const noexcept {
      return _right;
    }

    Vertex const& source() const noexcept {
      return _left.source();
    }

    friend bool operator==(PathPair const&, PathPair const&) = default;
    friend auto operator<=>(PathPair const&, PathPair const&) = default;

   private:
    Path _left;
    Path _right;
  };

  struct ClassKey {
    Vertex      range_left;
    Vertex      range_right;
    LevelVector levels_left;
    LevelVector levels_right;

    friend bool operator==(ClassKey const&, ClassKey const&) = default;
    friend auto operator<=>(ClassKey const&, ClassKey const&) = default;
  };

  // Whether (lambda, mu) lies in A, decided by the bottom level entries and
  // d(lambda) ^ d(mu).
  inline bool in_A(Path const& lambda, Path const& mu) {
    if (lambda.levels().at(1) != 1 || mu.levels().at(1) != 1) {
      return true;
    }
    return meet(lambda.degree(), mu.degree()).is_zero();
  }

  inline bool in_A(PathPair const& pair) {
    return in_A(pair.left(), pair.right());
  }

  inline ClassKey class_key(PathPair const& pair) {
    if (!in_A(pair)) {
      throw MembershipError("class keys are defined on A only");
    }
    return ClassKey{pair.left().range(),
                    pair.right().range(),
                    pair.left().levels(),
                    pair.right().levels()};
  }

  namespace detail {
    // |r(lambda) ^ r(mu)| - |s| for members of the class, or nullopt when
    // the key admits no source at all.
    inline std::optional<Coord> source_deficit(ClassKey const& key) {
      Coord target_l = key.range_left.norm()
                       - static_cast<Coord>(key.levels_left.size());
      Coord target_r = key.range_right.norm()
                       - static_cast<Coord>(key.levels_right.size());
      if (key.levels_left.empty() || key.levels_right.empty()
          || target_l != target_r) {
        return std::nullopt;
      }
      Coord deficit = meet(key.range_left, key.range_right).norm() - target_l;
      if (deficit < 0) {
        return std::nullopt;
      }
      return deficit;
    }

    inline PathPair member_with_source(ClassKey const& key, Vertex const& s) {
      return PathPair(Path(key.range_left, s, key.levels_left),
                      Path(key.range_right, s, key.levels_right));
    }

    // A key with at least one candidate source is the key of an A-pair iff
    // some bottom level entry differs from 1, or the only candidate source
    // is r(lambda) ^ r(mu).
    inline bool key_in_A(ClassKey const& key, Coord deficit) {
      return key.levels_left.at(1) != 1 || key.levels_right.at(1) != 1
             || deficit == 0;
    }
  }  // namespace detail

  // Every source vertex a member of the class can have, in decreasing
  // lexicographic order. Empty if the key is not realizable.
  inline std::vector<Vertex> source_candidates(ClassKey const& key) {
    std::vector<Vertex> out;
    auto                deficit = detail::source_deficit(key);
    if (!deficit || !detail::key_in_A(key, *deficit)) {
      return out;
    }
    Vertex top = meet(key.range_left, key.range_right);
    for_each_degree_with_norm(top.rank(), *deficit, [&](Degree const& t) {
      out.push_back(top - t);
    });
    std::sort(out.rbegin(), out.rend());
    return out;
  }

  inline bool realizable(ClassKey const& key) {
    auto deficit = detail::source_deficit(key);
    return deficit && detail::key_in_A(key, *deficit);
  }

  // The members of the class with this key.
  inline std::vector<PathPair> class_members(ClassKey const& key) {
    std::vector<PathPair> out;
    for (Vertex const& s : source_candidates(key)) {
      out.push_back(detail::member_with_source(key, s));
    }
    return out;
  }

  // Lexicographically greatest candidate source: r(lambda) ^ r(mu) with the
  // whole deficit taken from the last coordinate.
  inline Vertex representative_source(ClassKey const& key) {
    auto deficit = detail::source_deficit(key);
    if (!deficit || !detail::key_in_A(key, *deficit)) {
      throw MembershipError("class key has no member in A");
    }
    Vertex top = meet(key.range_left, key.range_right);
    CoordVec c = top.coords();
    c.back() = detail::checked_sub(c.back(), *deficit);
    return Vertex(std::move(c));
  }

  inline PathPair representative(ClassKey const& key) {
    return detail::member_with_source(key, representative_source(key));
  }

  inline bool equivalent(PathPair const& a, PathPair const& b) {
    return class_key(a) == class_key(b);
  }

  inline bool in_R(PathPair const& pair) {
    return representative_source(class_key(pair)) == pair.source();
  }

  // (lambda, mu) in A \ R, for arbitrary letters; false outside Â.
  inline bool in_A_not_R(Path const& lambda, Path const& mu) {
    if (lambda.is_vertex() || mu.is_vertex()
        || lambda.source() != mu.source() || !in_A(lambda, mu)) {
      return false;
    }
    return !in_R(PathPair(lambda, mu));
  }

}  // namespace kpnf

#endif  // KPNF_CANONICAL_HPP_
