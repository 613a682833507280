// kpnf - normal forms in Kumjian-Pask algebras of standard k-graphs
//
// The reduction system on R<X> whose irreducible words are the basis
// v, lambda, lambda*, lambda mu* ((lambda, mu) in R). Every rule rewrites an
// adjacent pair of letters x y:
//
//   R1  lambda mu -> lambda o mu, and mu* lambda* -> (lambda o mu)*, for
//       lambda, mu in Lambda (vertices included, v* = v) when composable
//   R2  the same shapes, and lambda* mu, lambda mu*, when the endpoints do not
//       match -> 0
//   R3  lambda* mu -> sum over S(lambda, mu) of alpha beta*
//   R4  (lambda o 1^n)(mu o 1^n)* -> lambda mu*
//                                    - sum_{xi != 1^n} (lambda o xi)(mu o xi)*
//       where 1^n is the all-ones path of degree n at s(lambda) = s(mu)
//   R5  lambda mu* -> representative of [(lambda, mu)], for (lambda, mu) in
//       A \ R
//
// Each rewrite strictly decreases the measure (l, e, f, g, h) of the whole
// word in lexicographic order; apply_rule() checks this at run time.

#ifndef KPNF_REWRITE_HPP_
#define KPNF_REWRITE_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "errors.hpp"
#include "freealg.hpp"
#include "kgraph.hpp"
#include "ring.hpp"

namespace kpnf {

  enum class RuleId { compose, ortho, ghost_path, expand, representative };

  inline std::string to_string(RuleId r) {
    switch (r) {
      case RuleId::compose:
        return "R1";
      case RuleId::ortho:
        return "R2";
      case RuleId::ghost_path:
        return "R3";
      case RuleId::expand:
        return "R4";
      case RuleId::representative:
        return "R5";
    }
    return "R?";
  }

  struct RedexMatch {
    RuleId rule;
    // Zero based index of the first of the two rewritten letters.
    std::size_t position = 0;
    // R4: the degree n of the removed all-ones tail.
    std::optional<Degree> tail;
    // R5: the class of the pair.
    std::optional<ClassKey> key;

    friend bool operator==(RedexMatch const&, RedexMatch const&) = default;
  };

  struct WordMeasure {
    std::uint64_t len             = 0;
    std::uint64_t entropy         = 0;
    std::uint64_t degree_value    = 0;
    std::uint64_t one_level_value = 0;
    std::uint64_t ar_value        = 0;

    friend auto operator<=>(WordMeasure const&, WordMeasure const&) = default;
  };

  inline std::string to_string(WordMeasure const& m) {
    return "(" + std::to_string(m.len) + "," + std::to_string(m.entropy) + ","
           + std::to_string(m.degree_value) + ","
           + std::to_string(m.one_level_value) + ","
           + std::to_string(m.ar_value) + ")";
  }

  // Only path letters of nonzero degree count towards e, f and g; ghosts and
  // vertices do not.
  inline WordMeasure word_measure(Word const& w) {
    WordMeasure m;
    m.len = w.size();
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!w[i].is_path()) {
        continue;
      }
      Path const& p = w[i].path();
      m.entropy += i + 1;
      m.degree_value += p.length();
      m.one_level_value += p.levels().count_ones();
    }
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].is_path() && w[i + 1].is_ghost()
          && in_A_not_R(w[i].path(), w[i + 1].path())) {
        ++m.ar_value;
      }
    }
    return m;
  }

  namespace detail {
    // Every n != 0 such that lambda = lambda' o 1^n and mu = mu' o 1^n, in
    // increasing lexicographic order.
    inline std::vector<Degree> expand_tails(Path const& lambda,
                                            Path const& mu) {
      std::vector<Degree> out;
      std::size_t ones = std::min(lambda.levels().trailing_ones(),
                                  mu.levels().trailing_ones());
      if (ones == 0) {
        return out;
      }
      for_each_degree_below(meet(lambda.degree(), mu.degree()),
                            [&](Degree const& n) {
                              auto len = static_cast<std::size_t>(n.norm());
                              if (len != 0 && len <= ones) {
                                out.push_back(n);
                              }
                            });
      return out;
    }

    // The instance used by the deterministic strategy: n = e_i with i the
    // first coordinate where d(lambda) ^ d(mu) is positive.
    inline Degree default_tail(Path const& lambda, Path const& mu) {
      Degree m = meet(lambda.degree(), mu.degree());
      for (std::size_t i = 0; i < m.rank(); ++i) {
        if (m[i] > 0) {
          return Degree::unit(m.rank(), i);
        }
      }
      throw MembershipError("no all-ones tail to expand");
    }

    // All matches at position i (R4 contributes one match per instance).
    inline std::vector<RedexMatch> redexes_at(Word const& w, std::size_t i) {
      std::vector<RedexMatch> out;
      Generator const&        x = w[i];
      Generator const&        y = w[i + 1];
      Path const&             a = x.path();
      Path const&             b = y.path();
      auto                    one = [&](RuleId r) {
        out.push_back(RedexMatch{r, i, std::nullopt, std::nullopt});
      };
      if (!x.is_ghost() && !y.is_ghost()) {
        one(a.source() == b.range() ? RuleId::compose : RuleId::ortho);
      } else if (!x.is_path() && !y.is_path()) {
        // x = mu*, y = lambda*: composable when s(lambda) = r(mu).
        one(b.source() == a.range() ? RuleId::compose : RuleId::ortho);
      } else if (x.is_ghost()) {
        one(a.range() == b.range() ? RuleId::ghost_path : RuleId::ortho);
      } else if (a.source() != b.source()) {
        one(RuleId::ortho);
      } else if (!in_A(a, b)) {
        for (Degree& n : expand_tails(a, b)) {
          out.push_back(RedexMatch{RuleId::expand, i, std::move(n), std::nullopt});
        }
      } else {
        PathPair pair(a, b);
        if (!in_R(pair)) {
          out.push_back(RedexMatch{
              RuleId::representative, i, std::nullopt, class_key(pair)});
        }
      }
      return out;
    }
  }  // namespace detail

  // Every rewrite that applies to w, by position.
  inline std::vector<RedexMatch> all_redexes(Word const& w) {
    std::vector<RedexMatch> out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      auto here = detail::redexes_at(w, i);
      out.insert(out.end(), here.begin(), here.end());
    }
    return out;
  }

  // The leftmost redex. At one position at most one rule applies, except
  // that R4 may have several instances; the minimal-coordinate unit tail is
  // chosen.
  inline std::optional<RedexMatch> find_redex(Word const& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      auto here = detail::redexes_at(w, i);
      if (here.empty()) {
        continue;
      }
      if (here.front().rule == RuleId::expand) {
        RedexMatch m = here.front();
        m.tail       = detail::default_tail(w[i].path(), w[i + 1].path());
        return m;
      }
      return here.front();
    }
    return std::nullopt;
  }

  inline bool is_irreducible(Word const& w) {
    return !find_redex(w).has_value();
  }

  namespace detail {
    inline Word splice(Word const&                 w,
                       std::size_t                 pos,
                       std::vector<Generator>      middle) {
      Word::Letters out(w.begin(), w.begin() + pos);
      out.insert(out.end(),
                 std::make_move_iterator(middle.begin()),
                 std::make_move_iterator(middle.end()));
      out.insert(out.end(), w.begin() + pos + 2, w.end());
      return Word(std::move(out));
    }

    // alpha beta* as two letters.
    inline std::vector<Generator> path_ghost(Path alpha, Path beta) {
      return {Generator::of(std::move(alpha)),
              Generator::ghost_of(std::move(beta))};
    }
  }  // namespace detail

  // The right hand side of the rule substituted into w. Throws
  // MembershipError if m is not a redex of w, and OrderingViolation if some
  // produced word is not strictly smaller than w.
  inline Element apply_rule(GraphConfig const& g,
                            Word const&        w,
                            RedexMatch const&  m,
                            Ring const&        ring = Ring::integers()) {
    if (m.position + 1 >= w.size()) {
      throw MembershipError("redex position out of range");
    }
    auto here = detail::redexes_at(w, m.position);
    if (std::find(here.begin(), here.end(), m) == here.end()) {
      throw MembershipError("rule " + to_string(m.rule)
                            + " does not apply at position "
                            + std::to_string(m.position + 1));
    }
    Generator const& x   = w[m.position];
    Generator const& y   = w[m.position + 1];
    Element          out(ring);
    switch (m.rule) {
      case RuleId::compose: {
        Generator z = x.is_ghost() || y.is_ghost()
                          ? Generator::ghost_of(compose(y.path(), x.path()))
                          : Generator::of(compose(x.path(), y.path()));
        out.add_term(detail::splice(w, m.position, {std::move(z)}), 1);
        break;
      }
      case RuleId::ortho:
        break;
      case RuleId::ghost_path:
        for (auto& [alpha, beta] : s_of(g, x.path(), y.path())) {
          out.add_term(detail::splice(w,
                                      m.position,
                                      detail::path_ghost(std::move(alpha),
                                                         std::move(beta))),
                       1);
        }
        break;
      case RuleId::expand: {
        Degree const& n = *m.tail;
        Path lambda = factorize(x.path(), x.path().degree() - n, n).first;
        Path mu     = factorize(y.path(), y.path().degree() - n, n).first;
        Path ones   = all_ones_path(lambda.source(), n);
        out.add_term(
            detail::splice(w, m.position, detail::path_ghost(lambda, mu)), 1);
        for (Path const& xi : enumerate_paths(g, lambda.source(), n)) {
          if (xi == ones) {
            continue;
          }
          out.add_term(detail::splice(w,
                                      m.position,
                                      detail::path_ghost(compose(lambda, xi),
                                                         compose(mu, xi))),
                       ring.negate(1));
        }
        break;
      }
      case RuleId::representative: {
        PathPair rep = representative(*m.key);
        out.add_term(detail::splice(w,
                                    m.position,
                                    {Generator::path(rep.left()),
                                     Generator::ghost(rep.right())}),
                     1);
        break;
      }
    }
    WordMeasure before = word_measure(w);
    for (auto const& [u, c] : out.terms()) {
      if (!(word_measure(u) < before)) {
        throw OrderingViolation(to_string(m.rule) + " rewrote " + to_string(w)
                                + " " + to_string(before) + " into "
                                + to_string(u) + " "
                                + to_string(word_measure(u)));
      }
    }
    return out;
  }

  struct RewriteStep {
    Word const&        word;
    RedexMatch const&  match;
    WordMeasure        before;
    Element const&     result;
  };

  struct NormalizeOptions {
    enum class Strategy { leftmost, random };

    std::size_t step_guard = 1'000'000;
    Strategy    strategy   = Strategy::leftmost;
    // Used by the random strategy only.
    std::uint64_t seed = 0;
    // Called after every single-term rewrite.
    std::function<void(RewriteStep const&)> observer;
  };

  // Rewrites terms, greatest word first, until every word is irreducible.
  inline Element normalize(GraphConfig const&      g,
                           Element const&          x,
                           NormalizeOptions const& opts = {}) {
    Ring const&     ring = x.ring();
    Element         pending(x);
    Element         result(ring);
    std::size_t     steps = 0;
    std::mt19937_64 rng(opts.seed);
    while (!pending.is_zero()) {
      auto [w, c] = pending.extract_greatest();
      std::optional<RedexMatch> m;
      if (opts.strategy == NormalizeOptions::Strategy::leftmost) {
        m = find_redex(w);
      } else {
        auto all = all_redexes(w);
        if (!all.empty()) {
          std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
          m = all[pick(rng)];
        }
      }
      if (!m) {
        result.add_term(std::move(w), c);
        continue;
      }
      if (++steps > opts.step_guard) {
        throw TerminationFault("step guard of "
                               + std::to_string(opts.step_guard)
                               + " rewrites exhausted");
      }
      Element rhs = apply_rule(g, w, *m, ring);
      if (opts.observer) {
        opts.observer(RewriteStep{w, *m, word_measure(w), rhs});
      }
      for (auto const& [u, a] : rhs.terms()) {
        pending.add_term(u, ring.multiply(c, a));
      }
    }
    return result;
  }

  // One trace line: the rewritten word's measure and those of the words it
  // produced.
  inline std::string format_step(RewriteStep const& s) {
    std::string out = "rule=" + to_string(s.match.rule)
                      + " pos=" + std::to_string(s.match.position + 1)
                      + " measure=" + to_string(s.before) + " out=[";
    bool first = true;
    for (auto const& [u, c] : s.result.terms()) {
      if (!first) {
        out += ',';
      }
      first = false;
      out += to_string(word_measure(u));
    }
    return out + "]";
  }

}  // namespace kpnf

#endif  // KPNF_REWRITE_HPP_
