// kpnf - normal forms in Kumjian-Pask algebras of standard k-graphs
//
// Seeded random generation of vertices, paths, words and elements. One
// master seed is split into independent per-case seeds so that any single
// case can be replayed on its own.

#ifndef KPNF_SAMPLING_HPP_
#define KPNF_SAMPLING_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "freealg.hpp"
#include "kgraph.hpp"
#include "kpalg.hpp"

namespace kpnf {

  // splitmix64 finalizer applied to seed and case index.
  inline std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z               = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z               = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  class Sampler {
   public:
    Sampler(GraphConfig const& g, Window win, std::uint64_t seed)
        : _graph(g), _window(std::move(win)), _rng(seed) {}

    GraphConfig const& graph() const noexcept {
      return _graph;
    }

    Window const& window() const noexcept {
      return _window;
    }

    std::mt19937_64& rng() noexcept {
      return _rng;
    }

    // Uniform integer in [lo, hi].
    Coord uniform(Coord lo, Coord hi) {
      return std::uniform_int_distribution<Coord>(lo, hi)(_rng);
    }

    bool chance(double p) {
      return std::bernoulli_distribution(p)(_rng);
    }

    template <typename T>
    T const& pick(std::vector<T> const& xs) {
      return xs[static_cast<std::size_t>(
          uniform(0, static_cast<Coord>(xs.size()) - 1))];
    }

    Vertex vertex() {
      CoordVec c(_window.lo.rank());
      for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = uniform(_window.lo[i], _window.hi[i]);
      }
      return Vertex(std::move(c));
    }

    // A degree with |n| = norm, each unit placed in a uniform coordinate.
    Degree degree_with_norm(Coord norm) {
      CoordVec c(static_cast<std::size_t>(_graph.k), 0);
      for (Coord i = 0; i < norm; ++i) {
        ++c[static_cast<std::size_t>(uniform(0, _graph.k - 1))];
      }
      return Degree(std::move(c));
    }

    // |n| uniform in [lo, hi].
    Degree degree(Coord lo, Coord hi) {
      return degree_with_norm(uniform(lo, hi));
    }

    LevelVector levels(std::size_t len) {
      LevelVector::Storage s(len);
      for (auto& x : s) {
        x = static_cast<int>(uniform(1, _graph.level));
      }
      return LevelVector::from_low_first(std::move(s));
    }

    Path path_from(Vertex const& range, Degree const& n) {
      return Path(range, range - n, levels(static_cast<std::size_t>(n.norm())));
    }

    Path path_to(Vertex const& source, Degree const& n) {
      return Path(source + n, source, levels(static_cast<std::size_t>(n.norm())));
    }

    // Range in the window and lo <= |d| <= hi.
    Path path(Coord lo, Coord hi) {
      return path_from(vertex(), degree(lo, hi));
    }

    // A letter whose left end is the given vertex: a path with that range,
    // a ghost with that source, or the vertex itself.
    Generator letter_from(Vertex const& left, Coord max_norm) {
      switch (uniform(0, 2)) {
        case 0:
          return Generator::vertex(left);
        case 1:
          return Generator::path(path_from(left, degree(1, max_norm)));
        default:
          return Generator::ghost(path_to(left, degree(1, max_norm)));
      }
    }

    // A word of up to max_len letters; each letter after the first matches
    // the right end of its predecessor with probability p_chain.
    Word word(std::size_t max_len, Coord max_norm, double p_chain = 0.8) {
      auto          len = static_cast<std::size_t>(
          uniform(1, static_cast<Coord>(max_len)));
      Word::Letters out;
      out.push_back(letter_from(vertex(), max_norm));
      while (out.size() < len) {
        Vertex left = chance(p_chain) ? right_end(out.back()) : vertex();
        out.push_back(letter_from(left, max_norm));
      }
      return Word(std::move(out));
    }

    Element element(Ring const& ring,
                    std::size_t max_terms,
                    std::size_t max_len,
                    Coord       max_norm) {
      Element x(ring);
      auto    terms = uniform(1, static_cast<Coord>(max_terms));
      for (Coord i = 0; i < terms; ++i) {
        Coord c = uniform(1, 3) * (chance(0.5) ? 1 : -1);
        x.add_term(word(max_len, max_norm), c);
      }
      return x;
    }

    // The vertex a following letter must start at to avoid rule R2.
    static Vertex right_end(Generator const& x) {
      return x.is_ghost() ? x.path().range() : x.path().source();
    }

    static Vertex left_end(Generator const& x) {
      return x.is_ghost() ? x.path().source() : x.path().range();
    }

   private:
    GraphConfig     _graph;
    Window          _window;
    std::mt19937_64 _rng;
  };

}  // namespace kpnf

#endif  // KPNF_SAMPLING_HPP_
