// kpnf - normal forms in Kumjian-Pask algebras of standard k-graphs
//
// The quotient algebra KP_R(Lambda): products and the involution computed
// on normal forms, recognition of basis words, and enumeration of the basis
// inside a finite window of Z^k.

#ifndef KPNF_KPALG_HPP_
#define KPNF_KPALG_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "freealg.hpp"
#include "kgraph.hpp"
#include "rewrite.hpp"

namespace kpnf {

  inline Element kp_mul(GraphConfig const& g,
                        Element const&     x,
                        Element const&     y) {
    return normalize(g, x * y);
  }

  inline Element kp_star(GraphConfig const& g, Element const& x) {
    return normalize(g, star(x));
  }

  // v, lambda, lambda*, or lambda mu* with (lambda, mu) in R.
  inline bool is_basis_word(Word const& w) {
    if (w.size() == 1) {
      return true;
    }
    if (w.size() != 2 || !w[0].is_path() || !w[1].is_ghost()) {
      return false;
    }
    Path const& lambda = w[0].path();
    Path const& mu     = w[1].path();
    return lambda.source() == mu.source() && in_A(lambda, mu)
           && in_R(PathPair(lambda, mu));
  }

  struct BasisWord {
    enum class Shape { vertex, path, ghost, pair };

    Shape               shape;
    Path                left;
    std::optional<Path> right;

    Word word() const {
      switch (shape) {
        case Shape::vertex:
          return Word{Generator::vertex(left.range())};
        case Shape::path:
          return Word{Generator::path(left)};
        case Shape::ghost:
          return Word{Generator::ghost(left)};
        case Shape::pair:
          break;
      }
      return Word{Generator::path(left), Generator::ghost(*right)};
    }
  };

  inline std::string to_string(BasisWord::Shape s) {
    switch (s) {
      case BasisWord::Shape::vertex:
        return "vertex";
      case BasisWord::Shape::path:
        return "path";
      case BasisWord::Shape::ghost:
        return "ghost";
      case BasisWord::Shape::pair:
        return "pair";
    }
    return "?";
  }

  // The box lo <= v <= hi of Z^k, and a bound on |d| of every path used.
  struct Window {
    Vertex lo;
    Vertex hi;
    Coord  degree_bound = 0;

    static Window uniform(std::size_t k, Coord lo, Coord hi, Coord bound) {
      return Window{
          Vertex(CoordVec(k, lo)), Vertex(CoordVec(k, hi)), bound};
    }

    bool contains(Vertex const& v) const {
      return lo.leq(v) && v.leq(hi);
    }

    // Every vertex of the box in lexicographic order.
    template <typename F>
    void for_each_vertex(F&& f) const {
      if (!lo.leq(hi)) {
        return;
      }
      CoordVec cur = lo.coords();
      while (true) {
        f(Vertex(cur));
        std::size_t i = cur.size();
        while (i > 0 && cur[i - 1] == hi[i - 1]) {
          cur[i - 1] = lo[i - 1];
          --i;
        }
        if (i == 0) {
          return;
        }
        ++cur[i - 1];
      }
    }

    std::vector<Vertex> vertices() const {
      std::vector<Vertex> out;
      for_each_vertex([&](Vertex v) { out.push_back(std::move(v)); });
      return out;
    }
  };

  // Paths with range and source in the window and 1 <= |d| <= bound, by
  // range, then |d|, then degree, then level vector.
  inline std::vector<Path> window_paths(GraphConfig const& g,
                                        Window const&      win) {
    std::vector<Path> out;
    win.for_each_vertex([&](Vertex const& v) {
      for (Coord len = 1; len <= win.degree_bound; ++len) {
        for_each_degree_with_norm(v.rank(), len, [&](Degree const& n) {
          if (!win.contains(v - n)) {
            return;
          }
          for (Path& p : enumerate_paths(g, v, n)) {
            out.push_back(std::move(p));
          }
        });
      }
    });
    return out;
  }

  // The class keys whose representative lies inside the window, one
  // BasisWord per key. The count is relative to the window: classes whose
  // representative source leaves the box are skipped.
  inline std::vector<BasisWord> window_pair_words(GraphConfig const& g,
                                                  Window const&      win) {
    std::vector<BasisWord> out;
    auto                   ranges = win.vertices();
    auto const             bound  = static_cast<std::size_t>(
        std::max<Coord>(win.degree_bound, 0));
    for (Vertex const& rl : ranges) {
      for (Vertex const& rr : ranges) {
        for (std::size_t a = 1; a <= bound; ++a) {
          for (std::size_t b = 1; b <= bound; ++b) {
            for_each_level_vector(a, g.level, [&](LevelVector const& pl) {
              for_each_level_vector(b, g.level, [&](LevelVector const& pr) {
                ClassKey key{rl, rr, pl, pr};
                if (!realizable(key)) {
                  return;
                }
                Vertex s = representative_source(key);
                if (!win.contains(s)) {
                  return;
                }
                out.push_back(BasisWord{BasisWord::Shape::pair,
                                        Path(rl, s, pl),
                                        Path(rr, s, pr)});
              });
            });
          }
        }
      }
    }
    return out;
  }

  // Vertices, then paths, then ghosts, then pair words.
  inline std::vector<BasisWord> enumerate_basis(GraphConfig const& g,
                                                Window const&      win) {
    std::vector<BasisWord> out;
    win.for_each_vertex([&](Vertex const& v) {
      out.push_back(BasisWord{BasisWord::Shape::vertex, Path::vertex(v), {}});
    });
    auto paths = window_paths(g, win);
    for (Path const& p : paths) {
      out.push_back(BasisWord{BasisWord::Shape::path, p, {}});
    }
    for (Path const& p : paths) {
      out.push_back(BasisWord{BasisWord::Shape::ghost, p, {}});
    }
    for (BasisWord& b : window_pair_words(g, win)) {
      out.push_back(std::move(b));
    }
    return out;
  }

}  // namespace kpnf

#endif  // KPNF_KPALG_HPP_
