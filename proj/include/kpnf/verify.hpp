// kpnf - normal forms in Kumjian-Pask algebras of standard k-graphs
//
// Executable checks: the defining relations, the lemmas the normal form
// rests on, and empirical confluence of the reduction system. Every check
// is a loop over seeded cases; case i draws from case_seed(seed, i) only,
// so a failing case can be replayed alone.

#ifndef KPNF_VERIFY_HPP_
#define KPNF_VERIFY_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "canonical.hpp"
#include "errors.hpp"
#include "freealg.hpp"
#include "kgraph.hpp"
#include "kpalg.hpp"
#include "rewrite.hpp"
#include "sampling.hpp"
#include "text.hpp"

namespace kpnf {

  struct CheckFailure {
    std::size_t   index = 0;
    std::uint64_t seed  = 0;
    std::string   input;
    std::string   detail;
  };

  struct CheckReport {
    std::string               name;
    GraphConfig               graph;
    std::uint64_t             seed  = 0;
    std::size_t               cases = 0;
    std::vector<CheckFailure> failures;
    // Total single-term rewrites, where the check counts them.
    std::size_t steps        = 0;
    double      wall_seconds = 0;

    bool passed() const noexcept {
      return failures.empty();
    }
  };

  struct CheckParams {
    GraphConfig   graph;
    std::uint64_t seed  = 0;
    std::size_t   cases = 500;
    Window        window;
    Ring          ring;
    // Run only this case index.
    std::optional<std::size_t> only_case;

    static CheckParams defaults(GraphConfig const& g,
                                std::uint64_t      seed,
                                std::size_t        cases) {
      return CheckParams{
          g, seed, cases, Window::uniform(g.k, -3, 3, 3), Ring::integers(), {}};
    }
  };

  namespace detail {
    // Sum of alpha beta* over the given pairs.
    inline Element pair_sum(Ring const& ring, PathPairs const& pairs) {
      Element out(ring);
      for (auto const& [alpha, beta] : pairs) {
        out.add_term(
            Word{Generator::of(alpha), Generator::ghost_of(beta)}, 1);
      }
      return out;
    }

    inline Element word_element(Ring const&                   ring,
                                std::vector<Generator> const& letters) {
      return Element::monomial(ring, Word(letters));
    }

    using CaseBody
        = std::function<std::optional<CheckFailure>(std::size_t, Sampler&)>;

    // Runs body for each case, turning kpnf exceptions into failures.
    inline CheckReport run_cases(std::string const& name,
                                 CheckParams const& p,
                                 CaseBody const&    body) {
      auto        start = std::chrono::steady_clock::now();
      CheckReport report;
      report.name  = name;
      report.graph = p.graph;
      report.seed  = p.seed;
      std::size_t first = p.only_case ? *p.only_case : 0;
      std::size_t last  = p.only_case ? *p.only_case + 1 : p.cases;
      for (std::size_t i = first; i < last; ++i) {
        std::uint64_t cs = case_seed(p.seed, i);
        Sampler       s(p.graph, p.window, cs);
        ++report.cases;
        try {
          if (auto f = body(i, s)) {
            f->index = i;
            f->seed  = cs;
            report.failures.push_back(std::move(*f));
          }
        } catch (Error const& e) {
          report.failures.push_back(CheckFailure{i, cs, "", e.what()});
        }
      }
      report.wall_seconds = std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - start)
                                .count();
      return report;
    }

    inline std::optional<CheckFailure> compare(GraphConfig const& g,
                                               Element const&     lhs,
                                               Element const&     rhs,
                                               std::string        input) {
      Element a = normalize(g, lhs);
      Element b = normalize(g, rhs);
      if (a == b) {
        return std::nullopt;
      }
      return CheckFailure{0,
                          0,
                          std::move(input),
                          "lhs -> " + format_element(a) + " but rhs -> "
                              + format_element(b)};
    }

    // Vertex different from v.
    inline Vertex other_vertex(Sampler& s, Vertex const& v) {
      Vertex w = s.vertex();
      if (w == v) {
        w = w + Degree::unit(w.rank(), 0);
      }
      return w;
    }

    // Nonzero-degree pair in A \ R, or nullopt when none was found (always
    // the case for k = 1, where every class is a singleton).
    inline std::optional<std::pair<Path, Path>> sample_a_not_r(Sampler& s,
                                                               Coord bound) {
      for (int attempt = 0; attempt < 200; ++attempt) {
        Vertex v      = s.vertex();
        Path   lambda = s.path_to(v, s.degree(1, bound));
        Path   mu     = s.path_to(v, s.degree(1, bound));
        if (in_A_not_R(lambda, mu)) {
          return std::make_pair(std::move(lambda), std::move(mu));
        }
      }
      return std::nullopt;
    }

    // (lambda o 1^n, mu o 1^n) with s(lambda) = s(mu).
    inline std::pair<Path, Path> sample_expandable(Sampler& s,
                                                   Coord    bound,
                                                   Coord    tail_lo,
                                                   Coord    tail_hi) {
      Vertex v      = s.vertex();
      Path   lambda = s.path_to(v, s.degree(0, bound));
      Path   mu     = s.path_to(v, s.degree(0, bound));
      Path   ones   = all_ones_path(v, s.degree(tail_lo, tail_hi));
      return {compose(lambda, ones), compose(mu, ones)};
    }
  }  // namespace detail

  // lambda* mu against the brute-force sum over all (alpha, beta) with
  // lambda o alpha = mu o beta of degree q, for d(lambda) v d(mu) <= q <=
  // d(lambda) v d(mu) + (1,...,1).
  inline CheckReport check_lemma3(CheckParams const& p) {
    GraphConfig const& g     = p.graph;
    Coord const        bound = p.window.degree_bound;
    return detail::run_cases(
        "lemma3", p, [&](std::size_t, Sampler& s) -> std::optional<CheckFailure> {
          Vertex r      = s.vertex();
          Path   lambda = s.path_from(r, s.degree(0, bound));
          Path   mu     = s.path_from(s.chance(0.9) ? r : s.vertex(),
                                      s.degree(0, bound));
          CoordVec q    = join(lambda.degree(), mu.degree()).coords();
          for (auto& x : q) {
            x += s.uniform(0, 1);
          }
          Degree  top(q);
          Element rhs(p.ring);
          if (lambda.range() == mu.range()) {
            auto alphas
                = enumerate_paths(g, lambda.source(), top - lambda.degree());
            auto betas = enumerate_paths(g, mu.source(), top - mu.degree());
            for (Path const& alpha : alphas) {
              for (Path const& beta : betas) {
                if (compose(lambda, alpha) == compose(mu, beta)) {
                  rhs.add_term(Word{Generator::of(alpha),
                                    Generator::ghost_of(beta)},
                               1);
                }
              }
            }
          }
          Element lhs = detail::word_element(
              p.ring, {Generator::ghost_of(lambda), Generator::of(mu)});
          return detail::compare(g,
                                 lhs,
                                 rhs,
                                 to_string(Generator::ghost_of(lambda)) + " . "
                                     + to_string(mu) + " with q = "
                                     + to_string(top));
        });
  }

  // Two members of one ~-class give the same element.
  inline CheckReport check_lemma8(CheckParams const& p) {
    GraphConfig const& g     = p.graph;
    Coord const        bound = p.window.degree_bound;
    return detail::run_cases(
        "lemma8", p, [&](std::size_t, Sampler& s) -> std::optional<CheckFailure> {
          // With k = 1 and level 1 no pair of nonzero degree lies in A.
          if (g.k == 1 && g.level == 1) {
            return std::nullopt;
          }
          std::optional<PathPair> pair;
          while (!pair) {
            Vertex v      = s.vertex();
            Path   lambda = s.path_to(v, s.degree(1, bound));
            Path   mu     = s.path_to(v, s.degree(1, bound));
            if (in_A(lambda, mu)) {
              pair.emplace(std::move(lambda), std::move(mu));
            }
          }
          auto     members = class_members(class_key(*pair));
          PathPair a       = s.pick(members);
          PathPair b       = s.pick(members);
          Element  lhs     = detail::word_element(
              p.ring, {Generator::path(a.left()), Generator::ghost(a.right())});
          Element rhs = detail::word_element(
              p.ring, {Generator::path(b.left()), Generator::ghost(b.right())});
          return detail::compare(g,
                                 lhs,
                                 rhs,
                                 format_element(lhs) + " vs "
                                     + format_element(rhs));
        });
  }

  // Sum over S(v,w,m,n,p,q) against the sum over S(v,w,m-h,n-h,p,q) for
  // h <= m ^ n with |h| <= |m| - |p|.
  inline CheckReport check_lemma12(CheckParams const& p) {
    GraphConfig const& g     = p.graph;
    Coord const        bound = p.window.degree_bound;
    return detail::run_cases(
        "lemma12", p, [&](std::size_t, Sampler& s) -> std::optional<CheckFailure> {
          Vertex      v = s.vertex();
          Degree      m = s.degree(0, bound);
          auto        plen = static_cast<std::size_t>(s.uniform(0, m.norm()));
          Coord       free = m.norm() - static_cast<Coord>(plen);
          Degree      n    = s.degree(free, free + bound);
          auto        qlen = static_cast<std::size_t>(n.norm() - free);
          LevelVector pl   = s.levels(plen);
          LevelVector ql   = s.levels(qlen);
          // Matching sources unless we deliberately test the zero case.
          Vertex w = s.chance(0.85) ? (v - m) + n : s.vertex();
          // h <= m ^ n with |h| <= free, grown one unit at a time.
          Degree   cap    = meet(m, n);
          Coord    target = s.uniform(0, std::min(free, cap.norm()));
          CoordVec h(cap.rank(), 0);
          for (Coord i = 0; i < target; ++i) {
            std::vector<std::size_t> open;
            for (std::size_t j = 0; j < h.size(); ++j) {
              if (h[j] < cap[j]) {
                open.push_back(j);
              }
            }
            ++h[s.pick(open)];
          }
          Degree  hat(h);
          Element lhs
              = detail::pair_sum(p.ring, s_set(g, v, w, m, n, pl, ql));
          Element rhs = detail::pair_sum(
              p.ring, s_set(g, v, w, m - hat, n - hat, pl, ql));
          return detail::compare(
              g,
              lhs,
              rhs,
              "S(" + to_string(v) + "," + to_string(w) + "," + to_string(m)
                  + "," + to_string(n) + "," + to_string(pl) + ","
                  + to_string(ql) + ") with hat n = " + to_string(hat));
        });
  }

  // The sum over xi in v Lambda^n, xi != 1^n, against the sum over the
  // paths xi_{p,q} of degree e_{i_|n|} + ... + e_{i_{|n|-p+1}} and level
  // vector (1,...,1,q).
  inline CheckReport check_lemma13(CheckParams const& p) {
    GraphConfig const& g     = p.graph;
    Coord const        bound = p.window.degree_bound;
    return detail::run_cases(
        "lemma13", p, [&](std::size_t, Sampler& s) -> std::optional<CheckFailure> {
          Vertex v      = s.vertex();
          Degree n      = s.degree(1, bound);
          Path   lambda = s.path_to(v, s.degree(0, bound));
          Path   mu     = s.path_to(v, s.degree(0, bound));
          Path   ones   = all_ones_path(v, n);
          Element lhs(p.ring);
          for (Path const& xi : enumerate_paths(g, v, n)) {
            if (xi != ones) {
              lhs.add_term(Word{Generator::of(compose(lambda, xi)),
                                Generator::ghost_of(compose(mu, xi))},
                           1);
            }
          }
          // i_1 <= ... <= i_|n|
          std::vector<std::size_t> idx;
          for (std::size_t i = 0; i < n.rank(); ++i) {
            for (Coord j = 0; j < n[i]; ++j) {
              idx.push_back(i);
            }
          }
          Element rhs(p.ring);
          for (std::size_t len = 1; len <= idx.size(); ++len) {
            CoordVec d(n.rank(), 0);
            for (std::size_t j = 0; j < len; ++j) {
              ++d[idx[idx.size() - 1 - j]];
            }
            Degree dd(d);
            for (int q = 2; q <= g.level; ++q) {
              LevelVector::Storage lv(len, 1);
              lv[0] = q;
              Path xi(v, v - dd, LevelVector::from_low_first(lv));
              rhs.add_term(Word{Generator::of(compose(lambda, xi)),
                                Generator::ghost_of(compose(mu, xi))},
                           1);
            }
          }
          return detail::compare(g,
                                 lhs,
                                 rhs,
                                 "n = " + to_string(n) + ", lambda = "
                                     + to_string(lambda) + ", mu = "
                                     + to_string(mu));
        });
  }

  enum class Ambiguity {
    compose_compose,
    compose_ortho,
    compose_ghost_path,
    compose_expand,
    compose_representative,
    ortho_ortho,
    ortho_ghost_path,
    ortho_expand,
    ortho_representative,
    ghost_path_expand,
    ghost_path_representative,
    expand_expand
  };

  inline std::string to_string(Ambiguity a) {
    switch (a) {
      case Ambiguity::compose_compose:
        return "(1),(1)";
      case Ambiguity::compose_ortho:
        return "(1),(2)";
      case Ambiguity::compose_ghost_path:
        return "(1),(3)";
      case Ambiguity::compose_expand:
        return "(1),(4)";
      case Ambiguity::compose_representative:
        return "(1),(5)";
      case Ambiguity::ortho_ortho:
        return "(2),(2)";
      case Ambiguity::ortho_ghost_path:
        return "(2),(3)";
      case Ambiguity::ortho_expand:
        return "(2),(4)";
      case Ambiguity::ortho_representative:
        return "(2),(5)";
      case Ambiguity::ghost_path_expand:
        return "(3),(4)";
      case Ambiguity::ghost_path_representative:
        return "(3),(5)";
      case Ambiguity::expand_expand:
        return "(4),(4)";
    }
    return "?";
  }

  // The families that have instances for g. Those involving rule R5 are
  // empty when k = 1 (every class is a singleton) or level = 1 (A \ R
  // needs a bottom level other than 1).
  inline std::vector<Ambiguity> ambiguity_families(GraphConfig const& g) {
    std::vector<Ambiguity> out;
    for (int i = 0; i <= static_cast<int>(Ambiguity::expand_expand); ++i) {
      auto a = static_cast<Ambiguity>(i);
      if ((g.k == 1 || g.level == 1)
          && (a == Ambiguity::compose_representative
              || a == Ambiguity::ortho_representative
              || a == Ambiguity::ghost_path_representative)) {
        continue;
      }
      out.push_back(a);
    }
    return out;
  }

  // A word with at least two overlapping redexes from the given family, or
  // nullopt if sampling failed. Half of the instances are starred, which
  // covers the mirrored variants of each family.
  inline std::optional<Word> ambiguity_instance(Ambiguity family,
                                                Sampler&  s) {
    Coord const   b = s.window().degree_bound;
    Word::Letters w;
    auto any_path_from = [&](Vertex const& r) {
      return s.path_from(r, s.degree(0, b));
    };
    auto any_path_to = [&](Vertex const& src) {
      return s.path_to(src, s.degree(0, b));
    };
    switch (family) {
      case Ambiguity::compose_compose: {
        Path lambda = s.path(0, b);
        Path mu     = any_path_from(lambda.source());
        Path xi     = any_path_from(mu.source());
        w = {Generator::of(lambda), Generator::of(mu), Generator::of(xi)};
        break;
      }
      case Ambiguity::compose_ortho: {
        Path lambda = s.path(0, b);
        Path mu     = any_path_from(lambda.source());
        if (s.chance(0.5)) {
          Path xi = any_path_from(detail::other_vertex(s, mu.source()));
          w = {Generator::of(lambda), Generator::of(mu), Generator::of(xi)};
        } else {
          Path zeta = s.path_to(detail::other_vertex(s, mu.source()),
                                s.degree(1, b));
          w = {Generator::of(lambda), Generator::of(mu), Generator::ghost(zeta)};
        }
        break;
      }
      case Ambiguity::compose_ghost_path: {
        Vertex r      = s.vertex();
        Path   lambda = s.path_from(r, s.degree(1, b));
        Path   mu     = s.path_from(r, s.degree(1, b));
        if (s.chance(0.5)) {
          Path xi = any_path_from(mu.source());
          w = {Generator::ghost(lambda), Generator::path(mu), Generator::of(xi)};
        } else {
          Path zeta = any_path_from(lambda.source());
          w         = {Generator::ghost_of(zeta),
                       Generator::ghost(lambda),
                       Generator::path(mu)};
        }
        break;
      }
      case Ambiguity::compose_expand: {
        auto [lam, mu] = detail::sample_expandable(s, b, 1, 2);
        if (s.chance(0.5)) {
          Path xi = any_path_to(lam.range());
          w = {Generator::of(xi), Generator::path(lam), Generator::ghost(mu)};
        } else {
          Path zeta = any_path_to(mu.range());
          w         = {Generator::path(lam),
                       Generator::ghost(mu),
                       Generator::ghost_of(zeta)};
        }
        break;
      }
      case Ambiguity::compose_representative: {
        auto pair = detail::sample_a_not_r(s, b);
        if (!pair) {
          return std::nullopt;
        }
        auto const& [lam, mu] = *pair;
        if (s.chance(0.5)) {
          Path xi = any_path_to(lam.range());
          w = {Generator::of(xi), Generator::path(lam), Generator::ghost(mu)};
        } else {
          Path zeta = any_path_to(mu.range());
          w         = {Generator::path(lam),
                       Generator::ghost(mu),
                       Generator::ghost_of(zeta)};
        }
        break;
      }
      case Ambiguity::ortho_ortho: {
        Path lambda = s.path(0, b);
        Path mu     = any_path_from(detail::other_vertex(s, lambda.source()));
        if (s.chance(0.5)) {
          Path xi = any_path_from(detail::other_vertex(s, mu.source()));
          w = {Generator::of(lambda), Generator::of(mu), Generator::of(xi)};
        } else {
          Path zeta = s.path_to(detail::other_vertex(s, mu.source()),
                                s.degree(1, b));
          w = {Generator::of(lambda), Generator::of(mu), Generator::ghost(zeta)};
        }
        break;
      }
      case Ambiguity::ortho_ghost_path: {
        Vertex r      = s.vertex();
        Path   lambda = s.path_from(r, s.degree(1, b));
        Path   mu     = s.path_from(r, s.degree(1, b));
        if (s.chance(0.5)) {
          Path xi = any_path_from(detail::other_vertex(s, mu.source()));
          w = {Generator::ghost(lambda), Generator::path(mu), Generator::of(xi)};
        } else {
          Path zeta = s.path_to(detail::other_vertex(s, mu.source()),
                                s.degree(1, b));
          w         = {Generator::ghost(lambda),
                       Generator::path(mu),
                       Generator::ghost(zeta)};
        }
        break;
      }
      case Ambiguity::ortho_expand: {
        auto [lam, mu] = detail::sample_expandable(s, b, 1, 2);
        if (s.chance(0.5)) {
          Path xi = s.path_from(detail::other_vertex(s, mu.range()),
                                s.degree(1, b));
          w = {Generator::path(lam), Generator::ghost(mu), Generator::path(xi)};
        } else {
          Path zeta = s.path_to(detail::other_vertex(s, mu.range()),
                                s.degree(1, b));
          w = {Generator::path(lam), Generator::ghost(mu), Generator::ghost(zeta)};
        }
        break;
      }
      case Ambiguity::ortho_representative: {
        auto pair = detail::sample_a_not_r(s, b);
        if (!pair) {
          return std::nullopt;
        }
        auto const& [lam, mu] = *pair;
        if (s.chance(0.5)) {
          Path xi = s.path_from(detail::other_vertex(s, mu.range()),
                                s.degree(1, b));
          w = {Generator::path(lam), Generator::ghost(mu), Generator::path(xi)};
        } else {
          Path zeta = s.path_to(detail::other_vertex(s, mu.range()),
                                s.degree(1, b));
          w = {Generator::path(lam), Generator::ghost(mu), Generator::ghost(zeta)};
        }
        break;
      }
      case Ambiguity::ghost_path_expand: {
        auto [lam, mu] = detail::sample_expandable(s, b, 1, 2);
        if (s.chance(0.5)) {
          Path xi = s.path_from(lam.range(), s.degree(1, b));
          w = {Generator::ghost(xi), Generator::path(lam), Generator::ghost(mu)};
        } else {
          Path zeta = s.path_from(mu.range(), s.degree(1, b));
          w = {Generator::path(lam), Generator::ghost(mu), Generator::path(zeta)};
        }
        break;
      }
      case Ambiguity::ghost_path_representative: {
        auto pair = detail::sample_a_not_r(s, b);
        if (!pair) {
          return std::nullopt;
        }
        auto const& [lam, mu] = *pair;
        if (s.chance(0.5)) {
          Path xi = s.path_from(lam.range(), s.degree(1, b));
          w = {Generator::ghost(xi), Generator::path(lam), Generator::ghost(mu)};
        } else {
          Path zeta = s.path_from(mu.range(), s.degree(1, b));
          w = {Generator::path(lam), Generator::ghost(mu), Generator::path(zeta)};
        }
        break;
      }
      case Ambiguity::expand_expand: {
        auto [lam, mu] = detail::sample_expandable(s, b, 2, 3);
        w              = {Generator::path(lam), Generator::ghost(mu)};
        break;
      }
    }
    Word out(std::move(w));
    if (s.chance(0.5)) {
      out = out.star();
    }
    if (all_redexes(out).size() < 2) {
      return std::nullopt;
    }
    return out;
  }

  // Every first rewrite of w leads to the same normal form.
  inline std::optional<std::string> resolve_ambiguity(GraphConfig const& g,
                                                      Word const&        w,
                                                      Ring const&        ring) {
    auto                   redexes = all_redexes(w);
    std::optional<Element> first;
    for (RedexMatch const& m : redexes) {
      Element nf = normalize(g, apply_rule(g, w, m, ring));
      if (!first) {
        first = std::move(nf);
      } else if (nf != *first) {
        return "via " + to_string(redexes.front().rule) + " at "
               + std::to_string(redexes.front().position + 1) + ": "
               + format_element(*first) + "; via " + to_string(m.rule)
               + " at " + std::to_string(m.position + 1) + ": "
               + format_element(nf);
      }
    }
    return std::nullopt;
  }

  // Case i draws from family i mod (number of families).
  inline CheckReport check_confluence(CheckParams const& p) {
    GraphConfig const& g        = p.graph;
    auto const         families = ambiguity_families(g);
    return detail::run_cases(
        "confluence",
        p,
        [&](std::size_t i, Sampler& s) -> std::optional<CheckFailure> {
          Ambiguity          family = families[i % families.size()];
          std::optional<Word> w;
          for (int attempt = 0; attempt < 100 && !w; ++attempt) {
            w = ambiguity_instance(family, s);
          }
          if (!w) {
            return CheckFailure{
                0, 0, to_string(family), "could not sample an instance"};
          }
          if (auto bad = resolve_ambiguity(g, *w, p.ring)) {
            return CheckFailure{
                0, 0, to_string(family) + " " + to_string(*w), *bad};
          }
          return std::nullopt;
        });
  }

  // Every instance of the four defining relation families with range in
  // the window and |d| <= 2, each normalized as LHS - RHS.
  inline CheckReport check_kp_relations(GraphConfig const& g,
                                        Window const&      win,
                                        Ring const&        ring = {}) {
    auto        start = std::chrono::steady_clock::now();
    CheckReport report;
    report.name  = "kp";
    report.graph = g;
    auto verts   = win.vertices();
    std::vector<Path> paths;
    for (Vertex const& v : verts) {
      for (Coord len = 1; len <= 2; ++len) {
        for_each_degree_with_norm(g.k, len, [&](Degree const& n) {
          for (Path& p : enumerate_paths(g, v, n)) {
            paths.push_back(std::move(p));
          }
        });
      }
    }
    auto check   = [&](Element const& lhs, Element const& rhs,
                     std::string const& label) {
      ++report.cases;
      Element d = normalize(g, lhs - rhs);
      if (!d.is_zero()) {
        report.failures.push_back(CheckFailure{report.cases - 1,
                                               0,
                                               label + ": " + format_element(lhs)
                                                   + " = " + format_element(rhs),
                                               "difference normalizes to "
                                                   + format_element(d)});
      }
    };
    auto mono = [&](std::vector<Generator> letters) {
      return Element::monomial(ring, Word(std::move(letters)));
    };
    Element zero(ring);
    // KP1
    for (Vertex const& v : verts) {
      for (Vertex const& u : verts) {
        Element lhs = mono({Generator::vertex(v), Generator::vertex(u)});
        check(lhs, v == u ? mono({Generator::vertex(v)}) : zero, "KP1");
      }
    }
    // KP2
    for (Path const& lambda : paths) {
      Generator r = Generator::vertex(lambda.range());
      Generator s = Generator::vertex(lambda.source());
      Generator l = Generator::path(lambda);
      Generator ls = Generator::ghost(lambda);
      check(mono({r, l}), mono({l}), "KP2 r(l)l");
      check(mono({l, s}), mono({l}), "KP2 l s(l)");
      check(mono({s, ls}), mono({ls}), "KP2 s(l)l*");
      check(mono({ls, r}), mono({ls}), "KP2 l*r(l)");
      for (Coord len = 1; len <= 2; ++len) {
        for_each_degree_with_norm(g.k, len, [&](Degree const& n) {
          for (Path const& mu : enumerate_paths(g, lambda.source(), n)) {
            Path lm = compose(lambda, mu);
            check(mono({l, Generator::path(mu)}), mono({Generator::path(lm)}),
                  "KP2 lm");
            check(mono({Generator::ghost(mu), ls}),
                  mono({Generator::ghost(lm)}),
                  "KP2 m*l*");
          }
        });
      }
    }
    // KP3, including pairs with different ranges.
    for (Path const& lambda : paths) {
      for (Path const& mu : paths) {
        if (lambda.degree() != mu.degree()) {
          continue;
        }
        Element lhs = mono({Generator::ghost(lambda), Generator::path(mu)});
        check(lhs,
              lambda == mu ? mono({Generator::vertex(lambda.source())}) : zero,
              "KP3");
      }
    }
    // KP4
    for (Vertex const& v : verts) {
      for (Coord len = 1; len <= 2; ++len) {
        for_each_degree_with_norm(g.k, len, [&](Degree const& n) {
          Element rhs(ring);
          for (Path const& lambda : enumerate_paths(g, v, n)) {
            rhs.add_term(
                Word{Generator::path(lambda), Generator::ghost(lambda)}, 1);
          }
          check(mono({Generator::vertex(v)}), rhs, "KP4 n=" + to_string(n));
        });
      }
    }
    report.wall_seconds = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    return report;
  }

  // Random elements normalize to basis words, every rewrite decreases the
  // measure, and normalizing twice changes nothing.
  inline CheckReport check_normal_forms(CheckParams const& p) {
    GraphConfig const& g     = p.graph;
    Coord const        bound = p.window.degree_bound;
    std::size_t        steps = 0;
    CheckReport        report = detail::run_cases(
        "normal-forms",
        p,
        [&](std::size_t, Sampler& s) -> std::optional<CheckFailure> {
          Element          x = s.element(p.ring, 3, 4, bound);
          std::string      bad;
          NormalizeOptions opts;
          opts.observer = [&](RewriteStep const& st) {
            ++steps;
            for (auto const& [u, c] : st.result.terms()) {
              if (!(word_measure(u) < st.before) && bad.empty()) {
                bad = "measure did not decrease: " + to_string(st.word)
                      + " -> " + to_string(u);
              }
            }
          };
          Element nf = normalize(g, x, opts);
          for (auto const& [w, c] : nf.terms()) {
            if (!is_basis_word(w) && bad.empty()) {
              bad = "not a basis word: " + to_string(w);
            }
          }
          if (bad.empty() && normalize(g, nf) != nf) {
            bad = "normal form is not a fixed point";
          }
          if (bad.empty()) {
            return std::nullopt;
          }
          return CheckFailure{0, 0, format_element(x), bad};
        });
    report.steps = steps;
    return report;
  }

  // The leftmost strategy and a uniformly random choice of redex agree on
  // the same corpus as check_normal_forms.
  inline CheckReport check_strategies(CheckParams const& p) {
    GraphConfig const& g     = p.graph;
    Coord const        bound = p.window.degree_bound;
    return detail::run_cases(
        "strategies",
        p,
        [&](std::size_t i, Sampler& s) -> std::optional<CheckFailure> {
          Element          x = s.element(p.ring, 3, 4, bound);
          NormalizeOptions random;
          random.strategy = NormalizeOptions::Strategy::random;
          random.seed     = case_seed(~p.seed, i);
          Element a       = normalize(g, x);
          Element b       = normalize(g, x, random);
          if (a == b) {
            return std::nullopt;
          }
          return CheckFailure{0,
                              0,
                              format_element(x),
                              "leftmost: " + format_element(a)
                                  + "; random: " + format_element(b)};
        });
  }

  // A basis word in the window with a random coefficient in [-3, 3] \ {0}.
  inline Element sample_basis_element(Sampler& s, Ring const& ring) {
    Coord const b = s.window().degree_bound;
    Coord       c = s.uniform(1, 3) * (s.chance(0.5) ? 1 : -1);
    switch (s.uniform(0, 3)) {
      case 0:
        return Element::monomial(ring, Word{Generator::vertex(s.vertex())}, c);
      case 1:
        return Element::monomial(ring, Word{Generator::path(s.path(1, b))}, c);
      case 2:
        return Element::monomial(ring, Word{Generator::ghost(s.path(1, b))}, c);
      default:
        break;
    }
    if (s.graph().k == 1 && s.graph().level == 1) {
      return Element::monomial(ring, Word{Generator::path(s.path(1, b))}, c);
    }
    while (true) {
      Vertex v      = s.vertex();
      Path   lambda = s.path_to(v, s.degree(1, b));
      Path   mu     = s.path_to(v, s.degree(1, b));
      if (in_A(lambda, mu)) {
        PathPair rep = representative(class_key(PathPair(lambda, mu)));
        return Element::monomial(
            ring,
            Word{Generator::path(rep.left()), Generator::ghost(rep.right())},
            c);
      }
    }
  }

  // Associativity and the star anti-homomorphism law in the quotient, over
  // Z and over Z/5 (results compared after reducing the integer ones).
  inline CheckReport check_quotient_laws(CheckParams const& p) {
    GraphConfig const& g    = p.graph;
    Ring const         z    = Ring::integers();
    Ring const         z5   = Ring::zmod(5);
    return detail::run_cases(
        "laws", p, [&](std::size_t, Sampler& s) -> std::optional<CheckFailure> {
          Element x = sample_basis_element(s, z);
          Element y = sample_basis_element(s, z);
          Element w = sample_basis_element(s, z);
          std::string input = format_element(x) + " | " + format_element(y)
                              + " | " + format_element(w);
          Element left  = kp_mul(g, kp_mul(g, x, y), w);
          Element right = kp_mul(g, x, kp_mul(g, y, w));
          if (left != right) {
            return CheckFailure{0,
                                0,
                                input,
                                "(xy)z = " + format_element(left)
                                    + " but x(yz) = " + format_element(right)};
          }
          Element st  = kp_star(g, kp_mul(g, x, y));
          Element ts  = kp_mul(g, kp_star(g, y), kp_star(g, x));
          if (st != ts) {
            return CheckFailure{0,
                                0,
                                input,
                                "(xy)* = " + format_element(st)
                                    + " but y*x* = " + format_element(ts)};
          }
          Element left5 = kp_mul(g,
                                 kp_mul(g, change_ring(x, z5), change_ring(y, z5)),
                                 change_ring(w, z5));
          Element st5   = kp_star(
              g, kp_mul(g, change_ring(x, z5), change_ring(y, z5)));
          if (left5 != change_ring(left, z5) || st5 != change_ring(st, z5)) {
            return CheckFailure{0,
                                0,
                                input,
                                "results over Z/5 differ from reduced results "
                                "over Z"};
          }
          return std::nullopt;
        });
  }

  inline std::vector<std::string> check_names() {
    return {"lemma3",
            "lemma8",
            "lemma12",
            "lemma13",
            "confluence",
            "kp",
            "normal-forms",
            "strategies",
            "laws"};
  }

  // Dispatch by name; kp ignores seed and case count and uses the window
  // with |n| <= 2.
  inline CheckReport run_check(std::string const& name, CheckParams const& p) {
    if (name == "lemma3") {
      return check_lemma3(p);
    }
    if (name == "lemma8") {
      return check_lemma8(p);
    }
    if (name == "lemma12") {
      return check_lemma12(p);
    }
    if (name == "lemma13") {
      return check_lemma13(p);
    }
    if (name == "confluence") {
      return check_confluence(p);
    }
    if (name == "kp") {
      return check_kp_relations(p.graph, p.window, p.ring);
    }
    if (name == "normal-forms") {
      return check_normal_forms(p);
    }
    if (name == "strategies") {
      return check_strategies(p);
    }
    if (name == "laws") {
      return check_quotient_laws(p);
    }
    throw Error("unknown check '" + name + "'");
  }

  inline std::string format_report(CheckReport const& r) {
    std::string out = "check " + r.name + ": "
                      + (r.passed() ? "PASS" : "FAIL") + " (k="
                      + std::to_string(r.graph.k)
                      + " level=" + std::to_string(r.graph.level)
                      + " seed=" + std::to_string(r.seed)
                      + " cases=" + std::to_string(r.cases)
                      + " failures=" + std::to_string(r.failures.size())
                      + ")\n";
    for (CheckFailure const& f : r.failures) {
      out += "  case " + std::to_string(f.index) + " (case seed "
             + std::to_string(f.seed) + "): " + f.input + "\n    " + f.detail
             + "\n";
    }
    return out;
  }

  inline nlohmann::json report_json(CheckReport const& r) {
    nlohmann::json failures = nlohmann::json::array();
    for (CheckFailure const& f : r.failures) {
      failures.push_back({{"case", f.index},
                          {"case_seed", f.seed},
                          {"input", f.input},
                          {"detail", f.detail}});
    }
    return {{"name", r.name},
            {"k", r.graph.k},
            {"level", r.graph.level},
            {"seed", r.seed},
            {"cases", r.cases},
            {"passed", r.passed()},
            {"failures", failures}};
  }

}  // namespace kpnf

#endif  // KPNF_VERIFY_HPP_
