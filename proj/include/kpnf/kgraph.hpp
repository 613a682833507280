// kpnf - normal forms in Kumjian-Pask algebras of standard k-graphs
//
// The standard k-graph of level l: vertices Z^k, and a path (v, w, p) from
// w to v for every v >= w and every level vector p in {1,...,l}^{|v-w|}.
// Composition concatenates level vectors, the left factor taking the high
// indices.

#ifndef KPNF_KGRAPH_HPP_
#define KPNF_KGRAPH_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "errors.hpp"
#include "lattice.hpp"

namespace kpnf {

  struct GraphConfig {
    int k     = 1;
    int level = 1;

    void validate() const {
      if (k < 1) {
        throw StructuralError("rank k must be at least 1");
      }
      if (level < 1) {
        throw StructuralError("level must be at least 1");
      }
    }

    bool operator==(GraphConfig const&) const = default;
  };

  // Entries are stored low index first: entry 0 is lv_1, the entry at the
  // source end of the path. Printing is high index first.
  class LevelVector {
   public:
    using Storage = boost::container::small_vector<int, 8>;

    LevelVector() = default;

    static LevelVector from_low_first(Storage entries) {
      LevelVector lv;
      lv._entries = std::move(entries);
      return lv;
    }

    static LevelVector from_high_first(std::vector<int> const& entries) {
      return from_low_first(Storage(entries.rbegin(), entries.rend()));
    }

    static LevelVector high_first(std::initializer_list<int> entries) {
      return from_low_first(Storage(std::rbegin(entries), std::rend(entries)));
    }

    static LevelVector all_ones(std::size_t n) {
      return from_low_first(Storage(n, 1));
    }

    std::size_t size() const noexcept {
      return _entries.size();
    }

    bool empty() const noexcept {
      return _entries.empty();
    }

    // lv_i, 1 <= i <= size()
    int at(std::size_t i) const {
      return _entries.at(i - 1);
    }

    Storage const& low_first() const noexcept {
      return _entries;
    }

    std::vector<int> high_first() const {
      return std::vector<int>(_entries.rbegin(), _entries.rend());
    }

    // (lv_n, ..., lv_1)
    LevelVector bottom(std::size_t n) const {
      n = std::min(n, size());
      return from_low_first(Storage(_entries.begin(), _entries.begin() + n));
    }

    // (lv_size, ..., lv_{size-n+1})
    LevelVector top(std::size_t n) const {
      n = std::min(n, size());
      return from_low_first(Storage(_entries.end() - n, _entries.end()));
    }

    std::size_t count_ones() const {
      return static_cast<std::size_t>(
          std::count(_entries.begin(), _entries.end(), 1));
    }

    // Number of consecutive 1 entries starting at lv_1.
    std::size_t trailing_ones() const {
      std::size_t n = 0;
      while (n < size() && _entries[n] == 1) {
        ++n;
      }
      return n;
    }

    // p x q: p occupies the high indices.
    friend LevelVector operator*(LevelVector const& p, LevelVector const& q) {
      Storage out(q._entries.begin(), q._entries.end());
      out.insert(out.end(), p._entries.begin(), p._entries.end());
      return from_low_first(std::move(out));
    }

    friend bool operator==(LevelVector const& a, LevelVector const& b) {
      return a._entries == b._entries;
    }

    // Lexicographic in printed (high index first) order.
    friend std::strong_ordering operator<=>(LevelVector const& a,
                                            LevelVector const& b) {
      return std::lexicographical_compare_three_way(a._entries.rbegin(),
                                                    a._entries.rend(),
                                                    b._entries.rbegin(),
                                                    b._entries.rend());
    }

   private:
    Storage _entries;
  };

  inline std::string to_string(LevelVector const& lv) {
    std::string out = "(";
    bool        first = true;
    for (int x : lv.high_first()) {
      if (!first) {
        out += ',';
      }
      first = false;
      out += std::to_string(x);
    }
    return out + ")";
  }

  // A morphism (range, source, levels). Degree zero paths are the vertices.
  class Path {
   public:
    Path() = default;

    Path(Vertex range, Vertex source, LevelVector levels)
        : _range(std::move(range)),
          _source(std::move(source)),
          _levels(std::move(levels)) {
      Degree d = difference(_range, _source);
      if (static_cast<Coord>(_levels.size()) != d.norm()) {
        throw StructuralError("level vector length " +
                              std::to_string(_levels.size()) +
                              " does not match |d| = " +
                              std::to_string(d.norm()));
      }
    }

    static Path vertex(Vertex v) {
      Vertex w = v;
      return Path(std::move(v), std::move(w), LevelVector());
    }

    Vertex const& range() const noexcept {
      return _range;
    }

    Vertex const& source() const noexcept {
      return _source;
    }

    LevelVector const& levels() const noexcept {
      return _levels;
    }

    Degree degree() const {
      return difference(_range, _source);
    }

    // |d(lambda)|, the number of level entries.
    std::size_t length() const noexcept {
      return _levels.size();
    }

    bool is_vertex() const noexcept {
      return _levels.empty();
    }

    std::size_t rank() const noexcept {
      return _range.rank();
    }

    friend bool operator==(Path const&, Path const&) = default;

    friend std::strong_ordering operator<=>(Path const& a, Path const& b) {
      if (auto c = a._range <=> b._range; c != 0) {
        return c;
      }
      if (auto c = a._source <=> b._source; c != 0) {
        return c;
      }
      return a._levels <=> b._levels;
    }

   private:
    Vertex      _range;
    Vertex      _source;
    LevelVector _levels;
  };

  using PathPairs = std::vector<std::pair<Path, Path>>;

  // Throws StructuralError if p does not belong to the standard k-graph of
  // the given rank and level.
  inline void check_path(GraphConfig const& g, Path const& p) {
    if (p.rank() != static_cast<std::size_t>(g.k)) {
      throw StructuralError("expected " + std::to_string(g.k)
                            + " coordinates, got "
                            + std::to_string(p.rank()));
    }
    for (int x : p.levels().low_first()) {
      if (x < 1 || x > g.level) {
        throw StructuralError("level entry " + std::to_string(x)
                              + " outside 1.." + std::to_string(g.level));
      }
    }
  }

  inline std::string to_string(Path const& p) {
    if (p.is_vertex()) {
      return "v" + to_string(p.range());
    }
    std::string out = "p[" + to_string(p.range()) + "->" + to_string(p.source())
                      + ";";
    bool first = true;
    for (int x : p.levels().high_first()) {
      if (!first) {
        out += ',';
      }
      first = false;
      out += std::to_string(x);
    }
    return out + "]";
  }

  inline Path compose(Path const& a, Path const& b) {
    if (a.source() != b.range()) {
      throw CompositionError("cannot compose " + to_string(a) + " with "
                             + to_string(b) + ": source/range mismatch");
    }
    return Path(a.range(), b.source(), a.levels() * b.levels());
  }

  // The unique (mu, nu) with mu o nu = lambda, d(mu) = m, d(nu) = n.
  inline std::pair<Path, Path> factorize(Path const&   lambda,
                                         Degree const& m,
                                         Degree const& n) {
    if (m + n != lambda.degree()) {
      throw DegreeSplitError("degrees " + to_string(m) + " + " + to_string(n)
                             + " do not sum to " + to_string(lambda.degree()));
    }
    auto  hi  = static_cast<std::size_t>(m.norm());
    auto  lo  = static_cast<std::size_t>(n.norm());
    Vertex mid = lambda.range() - m;
    Path   mu(lambda.range(), mid, lambda.levels().top(hi));
    Path   nu(std::move(mid), lambda.source(), lambda.levels().bottom(lo));
    return {std::move(mu), std::move(nu)};
  }

  // Calls f on every level vector in {1,...,level}^len, lv_1 varying fastest.
  template <typename F>
  void for_each_level_vector(std::size_t len, int level, F&& f) {
    LevelVector::Storage cur(len, 1);
    while (true) {
      f(LevelVector::from_low_first(cur));
      std::size_t i = 0;
      while (i < len && cur[i] == level) {
        cur[i] = 1;
        ++i;
      }
      if (i == len) {
        return;
      }
      ++cur[i];
    }
  }

  // v Lambda^n in lexicographic order of level vectors.
  inline std::vector<Path> enumerate_paths(GraphConfig const& g,
                                           Vertex const&      v,
                                           Degree const&      n) {
    std::vector<Path> out;
    Vertex            w = v - n;
    for_each_level_vector(
        static_cast<std::size_t>(n.norm()), g.level, [&](LevelVector lv) {
          out.emplace_back(v, w, std::move(lv));
        });
    return out;
  }

  // lambda^{v,n} = (v, v - n, (1,...,1))
  inline Path all_ones_path(Vertex const& v, Degree const& n) {
    return Path(
        v, v - n, LevelVector::all_ones(static_cast<std::size_t>(n.norm())));
  }

  // p ~ q: the top min(|p|,|q|) entries agree.
  inline bool levelvec_compatible(LevelVector const& p, LevelVector const& q) {
    std::size_t n = std::min(p.size(), q.size());
    return p.top(n) == q.top(n);
  }

  // S(v,w,m,n,p,q): pairs (alpha, beta) in v Lambda^m x w Lambda^n with
  // lv(alpha) = p x r, lv(beta) = q x r for a shared r.
  inline PathPairs s_set(GraphConfig const& g,
                         Vertex const&      v,
                         Vertex const&      w,
                         Degree const&      m,
                         Degree const&      n,
                         LevelVector const& p,
                         LevelVector const& q) {
    Coord free_m = m.norm() - static_cast<Coord>(p.size());
    Coord free_n = n.norm() - static_cast<Coord>(q.size());
    if (free_m != free_n || free_m < 0) {
      throw ShapeError("S-set requires |m| - |p| = |n| - |q| >= 0");
    }
    PathPairs out;
    Vertex    sa = v - m;
    Vertex    sb = w - n;
    for_each_level_vector(
        static_cast<std::size_t>(free_m), g.level, [&](LevelVector const& r) {
          out.emplace_back(Path(v, sa, p * r), Path(w, sb, q * r));
        });
    return out;
  }

  // S(lambda, mu) computed through the S-set formula: empty when the level
  // vectors are incompatible.
  inline PathPairs s_of(GraphConfig const& g,
                        Path const&        lambda,
                        Path const&        mu) {
    if (lambda.range() != mu.range()) {
      throw CompositionError("S(lambda, mu) needs r(lambda) = r(mu)");
    }
    if (!levelvec_compatible(lambda.levels(), mu.levels())) {
      return {};
    }
    Degree const dl = lambda.degree();
    Degree const dm = mu.degree();
    std::size_t  a  = lambda.length();
    std::size_t  b  = mu.length();
    LevelVector  p  = b > a ? mu.levels().bottom(b - a) : LevelVector();
    LevelVector  q  = a > b ? lambda.levels().bottom(a - b) : LevelVector();
    return s_set(g,
                 lambda.source(),
                 mu.source(),
                 truncated_sub(dm, dl),
                 truncated_sub(dl, dm),
                 p,
                 q);
  }

}  // namespace kpnf

#endif  // KPNF_KGRAPH_HPP_
