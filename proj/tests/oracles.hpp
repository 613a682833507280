// Brute-force reference implementations. These follow the definitions
// directly (enumerate everything, compare compositions) and share nothing
// with the closed forms in the library beyond Path, compose and
// enumerate_paths.

#ifndef KPNF_TESTS_ORACLES_HPP_
#define KPNF_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "kpnf/kgraph.hpp"
#include "kpnf/lattice.hpp"

namespace oracle {

  using namespace kpnf;

  // The path v -> v - n with every level 1.
  inline Path ones(Vertex const& v, Degree const& n) {
    return Path(v, v - n, LevelVector::all_ones(static_cast<std::size_t>(n.norm())));
  }

  inline std::vector<Degree> degrees_up_to(int k, Coord lo, Coord hi) {
    std::vector<Degree> out;
    for (Coord len = lo; len <= hi; ++len) {
      for_each_degree_with_norm(k, len, [&](Degree const& d) { out.push_back(d); });
    }
    return out;
  }

  inline bool leq(Degree const& a, Degree const& b) {
    for (std::size_t i = 0; i < a.rank(); ++i) {
      if (a[i] > b[i]) {
        return false;
      }
    }
    return true;
  }

  // No n != 0 with lambda = lambda' o 1^n and mu = mu' o 1^n.
  inline bool in_A(GraphConfig const& g, Path const& lambda, Path const& mu) {
    int const k = static_cast<int>(lambda.rank());
    for (Degree const& n :
         degrees_up_to(k, 1, static_cast<Coord>(std::min(lambda.length(), mu.length())))) {
      if (!leq(n, lambda.degree()) || !leq(n, mu.degree())) {
        continue;
      }
      Path tail = ones(lambda.source() + n, n);
      auto factors = [&](Path const& p) {
        for (Path const& head :
             enumerate_paths(g, p.range(), p.degree() - n)) {
          if (compose(head, tail) == p) {
            return true;
          }
        }
        return false;
      };
      if (factors(lambda) && factors(mu)) {
        return false;
      }
    }
    return true;
  }

  // m, n != 0 with |m|, |n| <= bound, lambda o 1^m = lambda' o 1^n and
  // mu o 1^m = mu' o 1^n.
  inline bool equivalent(Path const& lambda,
                         Path const& mu,
                         Path const& lambda2,
                         Path const& mu2,
                         Coord       bound = 3) {
    if (lambda.range() != lambda2.range() || mu.range() != mu2.range()) {
      return false;
    }
    int const k   = static_cast<int>(lambda.rank());
    auto      dms = degrees_up_to(k, 1, bound);
    for (Degree const& m : dms) {
      Path a = compose(lambda, ones(lambda.source(), m));
      Path b = compose(mu, ones(mu.source(), m));
      for (Degree const& n : dms) {
        if (compose(lambda2, ones(lambda2.source(), n)) == a
            && compose(mu2, ones(mu2.source(), n)) == b) {
          return true;
        }
      }
    }
    return false;
  }

  // {(alpha, beta) : lambda o alpha = mu o beta, d(lambda o alpha) =
  // d(lambda) v d(mu)}, sorted.
  inline PathPairs s_of(GraphConfig const& g, Path const& lambda, Path const& mu) {
    PathPairs out;
    if (lambda.range() != mu.range()) {
      return out;
    }
    Degree top = join(lambda.degree(), mu.degree());
    for (Path const& a : enumerate_paths(g, lambda.source(), top - lambda.degree())) {
      for (Path const& b : enumerate_paths(g, mu.source(), top - mu.degree())) {
        if (compose(lambda, a) == compose(mu, b)) {
          out.emplace_back(a, b);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Pairs in v Lambda^m x w Lambda^n whose level vectors, printed high
  // index first, are p then r and q then r for a common r. Sorted.
  inline PathPairs s_set(GraphConfig const& g,
                         Vertex const&      v,
                         Vertex const&      w,
                         Degree const&      m,
                         Degree const&      n,
                         LevelVector const& p,
                         LevelVector const& q) {
    PathPairs out;
    auto      ph = p.high_first();
    auto      qh = q.high_first();
    for (Path const& a : enumerate_paths(g, v, m)) {
      auto ah = a.levels().high_first();
      if (!std::equal(ph.begin(), ph.end(), ah.begin())) {
        continue;
      }
      for (Path const& b : enumerate_paths(g, w, n)) {
        auto bh = b.levels().high_first();
        if (!std::equal(qh.begin(), qh.end(), bh.begin())) {
          continue;
        }
        if (std::equal(ah.begin() + static_cast<std::ptrdiff_t>(ph.size()),
                       ah.end(),
                       bh.begin() + static_cast<std::ptrdiff_t>(qh.size()),
                       bh.end())) {
          out.emplace_back(a, b);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Number of ~-classes among the pairs, by union-find over the witness
  // search.
  inline std::size_t count_classes(std::vector<std::pair<Path, Path>> const& pairs) {
    std::vector<std::size_t> parent(pairs.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        if (equivalent(pairs[i].first, pairs[i].second, pairs[j].first,
                       pairs[j].second)) {
          parent[find(i)] = find(j);
        }
      }
    }
    std::size_t count = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      count += find(i) == i ? 1 : 0;
    }
    return count;
  }

}  // namespace oracle

#endif  // KPNF_TESTS_ORACLES_HPP_
