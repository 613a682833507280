#include <catch_amalgamated.hpp>

#include <string>

#include "kpnf/rewrite.hpp"
#include "kpnf/sampling.hpp"
#include "kpnf/text.hpp"

using namespace kpnf;

namespace {
  GraphConfig const k2l2{2, 2};

  Word W(std::string const& text, GraphConfig const& g = k2l2) {
    return parse_word(text, g);
  }

  Element E(std::string const& text, GraphConfig const& g = k2l2) {
    return parse_element(text, g);
  }

  std::string nf(std::string const& text, GraphConfig const& g = k2l2) {
    return format_element(normalize(g, E(text, g)));
  }
}  // namespace

TEST_CASE("word measure", "[rewrite]") {
  CHECK(to_string(word_measure(W("p[(1,1)->(1,0);2] . p[(1,1)->(1,0);2]*")))
        == "(2,1,1,0,0)");
  CHECK(to_string(word_measure(W("p[(1,1)->(0,1);2] . p[(1,1)->(0,1);2]*")))
        == "(2,1,1,0,1)");
  CHECK(to_string(word_measure(W("v(0,0)"))) == "(1,0,0,0,0)");
  // Ghosts do not count towards e, f, g.
  CHECK(to_string(word_measure(W("p[(1,1)->(0,0);1,1]* . p[(1,1)->(0,0);2,1]")))
        == "(2,2,2,1,0)");
}

TEST_CASE("redex detection", "[rewrite]") {
  auto r1 = find_redex(W("p[(2,0)->(1,0);1] . p[(1,0)->(0,0);1]"));
  REQUIRE(r1);
  CHECK(r1->rule == RuleId::compose);
  CHECK(r1->position == 0);
  auto r3 = find_redex(W("p[(1,1)->(0,1);2]* . p[(1,1)->(1,0);2]"));
  REQUIRE(r3);
  CHECK(r3->rule == RuleId::ghost_path);
  auto r4 = find_redex(W("p[(1,0)->(0,0);1] . p[(1,0)->(0,0);1]*"));
  REQUIRE(r4);
  CHECK(r4->rule == RuleId::expand);
  CHECK(*r4->tail == Degree{1, 0});
  auto r5 = find_redex(W("p[(1,1)->(0,1);2] . p[(1,1)->(0,1);2]*"));
  REQUIRE(r5);
  CHECK(r5->rule == RuleId::representative);
  auto r2 = find_redex(W("v(0,0) . p[(1,0)->(0,0);1]"));
  REQUIRE(r2);
  CHECK(r2->rule == RuleId::ortho);
  CHECK(is_irreducible(W("p[(1,1)->(1,0);2] . p[(1,1)->(1,0);2]*")));
  CHECK(is_irreducible(W("p[(1,1)->(0,0);1,2]*")));
  // Several R4 instances: n in {e1, e2, e1+e2}.
  auto all = all_redexes(W("p[(1,1)->(0,0);1,1] . p[(1,1)->(0,0);1,1]*"));
  CHECK(all.size() == 3);
}

TEST_CASE("single rewrites", "[rewrite]") {
  Word vv = W("v(0,0) . v(0,0)");
  CHECK(format_element(apply_rule(k2l2, vv, *find_redex(vv))) == "1 * v(0,0)");
  Word vw = W("v(0,0) . v(1,0)");
  CHECK(apply_rule(k2l2, vw, *find_redex(vw)).is_zero());
  Word ghosts = W("p[(1,0)->(0,0);2]* . p[(2,0)->(1,0);1]*");
  CHECK(format_element(apply_rule(k2l2, ghosts, *find_redex(ghosts)))
        == "1 * p[(2,0)->(0,0);1,2]*");
  Word ctx = W("v(3,3) . p[(1,0)->(0,0);2] . p[(1,0)->(0,0);2]* . v(9,9)");
  auto m   = find_redex(ctx);
  REQUIRE(m);
  CHECK(m->position == 0);
  CHECK(apply_rule(k2l2, ctx, *m).is_zero());
}

TEST_CASE("apply_rule rejects non-matching redexes", "[rewrite]") {
  Word w = W("v(0,0) . v(0,0)");
  CHECK_THROWS_AS(apply_rule(k2l2, w, RedexMatch{RuleId::ortho, 0, {}, {}}),
                  MembershipError);
  CHECK_THROWS_AS(apply_rule(k2l2, w, RedexMatch{RuleId::compose, 1, {}, {}}),
                  MembershipError);
}

TEST_CASE("normal forms of worked examples", "[rewrite]") {
  CHECK(nf("p[(1)->(0);1] . p[(1)->(0);1]*", GraphConfig{1, 1}) == "1 * v(1)");
  CHECK(nf("p[(1,0)->(0,0);1] . p[(1,0)->(0,0);1]*")
        == "1 * v(1,0) - 1 * p[(1,0)->(1,-1);2] . p[(1,0)->(1,-1);2]*");
  CHECK(nf("p[(1,1)->(0,1);2] . p[(1,1)->(0,1);2]*")
        == "1 * p[(1,1)->(1,0);2] . p[(1,1)->(1,0);2]*");
  CHECK(nf("p[(1,1)->(0,1);2]* . p[(1,1)->(1,0);2]")
        == "1 * p[(0,1)->(0,0);1] . p[(1,0)->(0,0);1]* + 1 * p[(0,1)->(0,0);2] "
           ". p[(1,0)->(0,0);2]*");
  CHECK(nf("p[(1,1)->(0,0);2,1]* . p[(1,1)->(0,0);2,1]") == "1 * v(0,0)");
  CHECK(nf("p[(1,1)->(0,0);2,1]* . p[(1,1)->(0,0);1,1]") == "0");
  CHECK(nf("0") == "0");
}

TEST_CASE("the step guard stops runaway normalization", "[rewrite]") {
  NormalizeOptions opts;
  opts.step_guard = 1;
  CHECK_THROWS_AS(normalize(k2l2, E("v(0,0) . v(0,0) . v(0,0)"), opts),
                  TerminationFault);
  CHECK_NOTHROW(normalize(k2l2, E("v(0,0) . v(0,0)"), opts));
}

TEST_CASE("trace lines report strictly decreasing measures", "[rewrite]") {
  std::vector<std::string> lines;
  NormalizeOptions         opts;
  opts.observer = [&](RewriteStep const& s) {
    CHECK(word_measure(s.word) == s.before);
    for (auto const& [u, c] : s.result.terms()) {
      CHECK(word_measure(u) < s.before);
    }
    lines.push_back(format_step(s));
  };
  normalize(k2l2, E("p[(1,0)->(0,0);1] . p[(1,0)->(0,0);1]*"), opts);
  // R4 emits v(1,0) . v(1,0), which R1 merges after the greater R5 term.
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "rule=R4 pos=1 measure=(2,1,1,1,0) out=[(2,0,0,0,0),(2,1,1,0,1)]");
  CHECK(lines[1] == "rule=R5 pos=1 measure=(2,1,1,0,1) out=[(2,1,1,0,0)]");
  CHECK(lines[2] == "rule=R1 pos=1 measure=(2,0,0,0,0) out=[(1,0,0,0,0)]");
}

TEST_CASE("an R5 rewrite lowers h by exactly one in any context", "[rewrite][property]") {
  Window win = Window::uniform(2, -2, 2, 2);
  int    tried = 0;
  for (std::uint64_t i = 0; i < 3000 && tried < 300; ++i) {
    Sampler s(k2l2, win, case_seed(11, i));
    Vertex  v      = s.vertex();
    Path    lambda = s.path_to(v, s.degree(1, 2));
    Path    mu     = s.path_to(v, s.degree(1, 2));
    if (!in_A_not_R(lambda, mu)) {
      continue;
    }
    ++tried;
    PathPair rep = representative(class_key(PathPair(lambda, mu)));
    Word     c   = s.word(3, 2);
    Word     d   = s.word(3, 2);
    Word     before = c * Word{Generator::path(lambda), Generator::ghost(mu)} * d;
    Word     after
        = c * Word{Generator::path(rep.left()), Generator::ghost(rep.right())} * d;
    WordMeasure mb = word_measure(before);
    WordMeasure ma = word_measure(after);
    CHECK(mb.len == ma.len);
    CHECK(mb.entropy == ma.entropy);
    CHECK(mb.degree_value == ma.degree_value);
    CHECK(mb.one_level_value == ma.one_level_value);
    CHECK(mb.ar_value == ma.ar_value + 1);
  }
  CHECK(tried == 300);
}

TEST_CASE("random strategy agrees with leftmost", "[rewrite][property]") {
  Window win = Window::uniform(2, -3, 3, 3);
  for (std::uint64_t i = 0; i < 300; ++i) {
    Sampler          s(k2l2, win, case_seed(5, i));
    Element          x = s.element(Ring::integers(), 3, 4, 3);
    NormalizeOptions random;
    random.strategy = NormalizeOptions::Strategy::random;
    random.seed     = i;
    Element a       = normalize(k2l2, x);
    CHECK(normalize(k2l2, x, random) == a);
    CHECK(normalize(k2l2, a) == a);
  }
}
