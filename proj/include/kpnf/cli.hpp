// kpnf - normal forms in Kumjian-Pask algebras of standard k-graphs
//
// Command-line front end. run() takes the argument vector without the
// program name and writes to the given streams; it never touches the
// environment, so output depends only on the flags.
//
//   kpnf normalize --k K --level L [--ring R] [--trace] EXPR
//   kpnf mul       --k K --level L [--ring R] [--trace] EXPR EXPR...
//   kpnf star      --k K --level L [--ring R] [--trace] EXPR
//   kpnf basis     --k K --level L [--window W] [--degree-bound B]
//                  [--shape S] [--range-left V] [--range-right V]
//   kpnf check     NAME --k K --level L [--seed S] [--cases N] [--case I]
//                  [--window W] [--degree-bound B] [--ring R]
//
// An EXPR of the form @FILE is read from FILE.
//
// Exit status: 0 success, 1 check failure or internal fault, 2 usage error
// (bad flags or unparsable input).

#ifndef KPNF_CLI_HPP_
#define KPNF_CLI_HPP_

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "errors.hpp"
#include "freealg.hpp"
#include "kgraph.hpp"
#include "kpalg.hpp"
#include "rewrite.hpp"
#include "ring.hpp"
#include "text.hpp"
#include "verify.hpp"

namespace kpnf::cli {

  class UsageError : public Error {
   public:
    using Error::Error;
  };

  // "int" or "zmod:N".
  inline Ring parse_ring(std::string const& text) {
    if (text == "int") {
      return Ring::integers();
    }
    if (text.rfind("zmod:", 0) == 0) {
      std::string digits = text.substr(5);
      if (!digits.empty()
          && digits.find_first_not_of("0123456789") == std::string::npos
          && digits.size() <= 18) {
        return Ring::zmod(std::stoll(digits));
      }
    }
    throw UsageError("bad ring '" + text + "' (expected int or zmod:N)");
  }

  inline Coord parse_coord(std::string const& text) {
    std::size_t used = 0;
    long long   v    = 0;
    try {
      v = std::stoll(text, &used);
    } catch (std::exception const&) {
      used = 0;
    }
    if (used != text.size() || text.empty()) {
      throw UsageError("bad integer '" + text + "'");
    }
    return v;
  }

  // "lo..hi" for every coordinate, or "lo1..hi1,...,lok..hik".
  inline Window parse_window(std::string const& text, int k, Coord bound) {
    std::vector<std::string> parts;
    std::stringstream        ss(text);
    std::string              part;
    while (std::getline(ss, part, ',')) {
      parts.push_back(part);
    }
    if (parts.size() != 1 && parts.size() != static_cast<std::size_t>(k)) {
      throw UsageError("window '" + text + "' needs 1 or " + std::to_string(k)
                       + " ranges");
    }
    CoordVec lo;
    CoordVec hi;
    for (int i = 0; i < k; ++i) {
      std::string const& r   = parts[parts.size() == 1 ? 0 : i];
      auto               dot = r.find("..");
      if (dot == std::string::npos) {
        throw UsageError("bad window range '" + r + "' (expected lo..hi)");
      }
      lo.push_back(parse_coord(r.substr(0, dot)));
      hi.push_back(parse_coord(r.substr(dot + 2)));
      if (lo.back() > hi.back()) {
        throw UsageError("empty window range '" + r + "'");
      }
    }
    return Window{Vertex(lo), Vertex(hi), bound};
  }

  // "a", "a,b" or "(a,b)"; a single value is used for every coordinate.
  inline Vertex parse_vertex(std::string text, int k) {
    if (!text.empty() && text.front() == '(' && text.back() == ')') {
      text = text.substr(1, text.size() - 2);
    }
    std::vector<Coord> c;
    std::stringstream  ss(text);
    std::string        part;
    while (std::getline(ss, part, ',')) {
      c.push_back(parse_coord(part));
    }
    if (c.size() == 1) {
      c.assign(static_cast<std::size_t>(k), c.front());
    }
    if (c.size() != static_cast<std::size_t>(k)) {
      throw UsageError("vertex '" + text + "' needs " + std::to_string(k)
                       + " coordinates");
    }
    return Vertex(CoordVec(c.begin(), c.end()));
  }

  struct Options {
    int                      k     = 0;
    int                      level = 0;
    std::string              ring  = "int";
    std::optional<std::string> window;
    std::optional<Coord>     degree_bound;
    std::uint64_t            seed  = 0;
    std::size_t              cases = 500;
    std::optional<std::size_t> only_case;
    bool                     trace  = false;
    std::string              format = "text";
    std::vector<std::string> inputs;
    std::string              check_name;
    std::optional<std::string> shape;
    std::optional<std::string> range_left;
    std::optional<std::string> range_right;
  };

  namespace detail {
    inline void add_graph_options(CLI::App& app, Options& o) {
      app.add_option("--k", o.k, "rank of the k-graph")
          ->required()
          ->check(CLI::PositiveNumber);
      app.add_option("--level", o.level, "largest level")
          ->required()
          ->check(CLI::PositiveNumber);
      app.add_option("--format", o.format, "text or structured (JSON)")
          ->check(CLI::IsMember({"text", "structured"}))
          ->capture_default_str();
    }

    inline void add_ring_option(CLI::App& app, Options& o) {
      app.add_option("--ring", o.ring, "int or zmod:N")->capture_default_str();
    }

    inline void add_window_options(CLI::App&          app,
                                   Options&           o,
                                   std::string const& defaults) {
      app.add_option("--window", o.window, "lo..hi or lo1..hi1,...  " + defaults);
      app.add_option("--degree-bound", o.degree_bound, "largest |d(lambda)|");
    }

    // CLI11 reads "-2..2" as a short flag; glue such values to their option.
    inline std::vector<std::string> glue_negative_values(
        std::vector<std::string> const& args) {
      std::vector<std::string> out;
      for (std::size_t i = 0; i < args.size(); ++i) {
        bool takes_value = args[i] == "--window" || args[i] == "--range-left"
                           || args[i] == "--range-right";
        if (takes_value && i + 1 < args.size() && !args[i + 1].empty()
            && args[i + 1][0] == '-') {
          out.push_back(args[i] + "=" + args[i + 1]);
          ++i;
        } else {
          out.push_back(args[i]);
        }
      }
      return out;
    }

    inline std::string read_input(std::string const& arg) {
      if (arg.empty() || arg[0] != '@') {
        return arg;
      }
      std::ifstream in(arg.substr(1));
      if (!in) {
        throw UsageError("cannot read '" + arg.substr(1) + "'");
      }
      std::stringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    inline nlohmann::json element_json(Element const& x) {
      nlohmann::json terms = nlohmann::json::array();
      for (auto const& [w, c] : x.terms()) {
        terms.push_back({{"coeff", c.str()}, {"word", to_string(w)}});
      }
      return {{"text", format_element(x)}, {"terms", terms}};
    }

    inline nlohmann::json measure_json(WordMeasure const& m) {
      return nlohmann::json::array(
          {m.len, m.entropy, m.degree_value, m.one_level_value, m.ar_value});
    }

    struct Tracer {
      bool                     text;
      std::vector<std::string> lines;
      nlohmann::json           steps = nlohmann::json::array();

      NormalizeOptions options() {
        NormalizeOptions o;
        o.observer = [this](RewriteStep const& s) {
          if (text) {
            lines.push_back("step " + std::to_string(lines.size() + 1) + ": "
                            + to_string(s.word) + " | " + format_step(s));
            return;
          }
          nlohmann::json out = nlohmann::json::array();
          for (auto const& [u, c] : s.result.terms()) {
            out.push_back(measure_json(word_measure(u)));
          }
          steps.push_back({{"word", to_string(s.word)},
                           {"rule", to_string(s.match.rule)},
                           {"position", s.match.position + 1},
                           {"measure", measure_json(s.before)},
                           {"out", out}});
        };
        return o;
      }
    };

    inline std::string repro_command(Options const&     o,
                                     std::string const& name,
                                     std::size_t        index) {
      std::string cmd = "kpnf check " + name + " --k " + std::to_string(o.k)
                        + " --level " + std::to_string(o.level) + " --seed "
                        + std::to_string(o.seed) + " --case "
                        + std::to_string(index);
      if (o.ring != "int") {
        cmd += " --ring " + o.ring;
      }
      if (o.window) {
        cmd += " --window=" + *o.window;
      }
      if (o.degree_bound) {
        cmd += " --degree-bound " + std::to_string(*o.degree_bound);
      }
      return cmd;
    }

    inline int do_algebra(std::string const& command,
                          Options const&     o,
                          std::ostream&      out) {
      GraphConfig g{o.k, o.level};
      Ring        ring = parse_ring(o.ring);
      std::vector<Element> xs;
      for (std::string const& arg : o.inputs) {
        xs.push_back(parse_element(read_input(arg), g, ring));
      }
      std::size_t want = command == "mul" ? 2 : 1;
      if (xs.size() < want || (command != "mul" && xs.size() != 1)) {
        throw UsageError(command + " expects "
                         + (command == "mul" ? std::string("two or more")
                                             : std::string("one"))
                         + " element(s)");
      }
      Tracer  tracer{o.format == "text"};
      auto    opts = o.trace ? tracer.options() : NormalizeOptions{};
      Element input(ring);
      if (command == "mul") {
        input = xs.front();
        for (std::size_t i = 1; i < xs.size(); ++i) {
          input = input * xs[i];
        }
      } else if (command == "star") {
        input = star(xs.front());
      } else {
        input = xs.front();
      }
      Element result = normalize(g, input, opts);
      if (o.format == "text") {
        for (std::string const& line : tracer.lines) {
          out << line << '\n';
        }
        out << format_element(result) << '\n';
        return 0;
      }
      nlohmann::json j = {{"command", command},
                          {"k", o.k},
                          {"level", o.level},
                          {"ring", ring.name()},
                          {"input", element_json(input)},
                          {"result", element_json(result)}};
      if (o.trace) {
        j["trace"] = tracer.steps;
      }
      out << j.dump(2) << '\n';
      return 0;
    }

    inline int do_basis(Options const& o, std::ostream& out) {
      GraphConfig g{o.k, o.level};
      Window      win = parse_window(o.window.value_or("-1..1"),
                                o.k,
                                o.degree_bound.value_or(1));
      std::optional<Vertex> rl;
      std::optional<Vertex> rr;
      if (o.range_left) {
        rl = parse_vertex(*o.range_left, o.k);
      }
      if (o.range_right) {
        rr = parse_vertex(*o.range_right, o.k);
      }
      std::vector<BasisWord> words;
      for (BasisWord& b : enumerate_basis(g, win)) {
        if (o.shape && to_string(b.shape) != *o.shape) {
          continue;
        }
        if (rl && b.left.range() != *rl) {
          continue;
        }
        if (rr && (!b.right || b.right->range() != *rr)) {
          continue;
        }
        words.push_back(std::move(b));
      }
      if (o.format == "text") {
        for (BasisWord const& b : words) {
          out << to_string(b.shape) << ' ' << to_string(b.word()) << '\n';
        }
        out << words.size() << " words\n";
        return 0;
      }
      nlohmann::json list = nlohmann::json::array();
      for (BasisWord const& b : words) {
        list.push_back(
            {{"shape", to_string(b.shape)}, {"word", to_string(b.word())}});
      }
      out << nlohmann::json{{"command", "basis"},
                            {"k", o.k},
                            {"level", o.level},
                            {"count", words.size()},
                            {"words", list}}
                 .dump(2)
          << '\n';
      return 0;
    }

    inline int do_check(Options const& o, std::ostream& out) {
      GraphConfig g{o.k, o.level};
      CheckParams p = CheckParams::defaults(g, o.seed, o.cases);
      p.ring        = parse_ring(o.ring);
      p.window      = parse_window(
          o.window.value_or("-3..3"), o.k, o.degree_bound.value_or(3));
      p.only_case   = o.only_case;
      std::vector<std::string> names;
      if (o.check_name == "all") {
        names = check_names();
      } else {
        auto known = check_names();
        if (std::find(known.begin(), known.end(), o.check_name)
            == known.end()) {
          throw UsageError("unknown check '" + o.check_name + "'");
        }
        names = {o.check_name};
      }
      bool           ok = true;
      nlohmann::json reports = nlohmann::json::array();
      for (std::string const& name : names) {
        CheckReport r = run_check(name, p);
        ok            = ok && r.passed();
        if (o.format == "text") {
          out << format_report(r);
          for (CheckFailure const& f : r.failures) {
            out << "  reproduce: " << repro_command(o, name, f.index) << '\n';
          }
          continue;
        }
        nlohmann::json j = report_json(r);
        for (std::size_t i = 0; i < r.failures.size(); ++i) {
          j["failures"][i]["reproduce"]
              = repro_command(o, name, r.failures[i].index);
        }
        reports.push_back(j);
      }
      if (o.format == "structured") {
        out << nlohmann::json{{"command", "check"},
                              {"passed", ok},
                              {"reports", reports}}
                   .dump(2)
            << '\n';
      } else {
        out << (ok ? "all checks passed" : "some checks FAILED") << '\n';
      }
      return ok ? 0 : 1;
    }
  }  // namespace detail

  inline int run(std::vector<std::string> const& raw,
                 std::ostream&                   out,
                 std::ostream&                   err) {
    CLI::App app{"Normal forms in Kumjian-Pask algebras of standard k-graphs",
                 "kpnf"};
    app.require_subcommand(1);
    Options o;

    std::vector<CLI::App*> algebra;
    for (char const* name : {"normalize", "mul", "star"}) {
      CLI::App* sub = app.add_subcommand(
          name,
          std::string(name) == "normalize" ? "reduce an element to normal form"
          : std::string(name) == "mul"     ? "multiply elements in the quotient"
                                           : "apply the involution");
      detail::add_graph_options(*sub, o);
      detail::add_ring_option(*sub, o);
      sub->add_flag("--trace", o.trace, "print every rewrite step");
      sub->add_option("expr", o.inputs, "element, or @FILE")->required();
      algebra.push_back(sub);
    }

    CLI::App* basis = app.add_subcommand("basis", "list basis words in a window");
    detail::add_graph_options(*basis, o);
    detail::add_window_options(*basis, o, "(default -1..1, bound 1)");
    basis->add_option("--shape", o.shape, "vertex, path, ghost or pair")
        ->check(CLI::IsMember({"vertex", "path", "ghost", "pair"}));
    basis->add_option("--range-left", o.range_left, "range of the left path");
    basis->add_option("--range-right", o.range_right, "range of the ghost");

    CLI::App* check = app.add_subcommand("check", "run a verification suite");
    detail::add_graph_options(*check, o);
    detail::add_ring_option(*check, o);
    detail::add_window_options(*check, o, "(default -3..3, bound 3)");
    check->add_option("name", o.check_name, "lemma3, lemma8, lemma12, "
                                            "lemma13, confluence, kp, "
                                            "normal-forms, strategies, laws "
                                            "or all")
        ->required();
    check->add_option("--seed", o.seed, "master seed")->capture_default_str();
    check->add_option("--cases", o.cases, "cases per check")
        ->capture_default_str();
    check->add_option("--case", o.only_case, "run a single case index");

    std::vector<std::string> args = detail::glue_negative_values(raw);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, err, err);
      return 2;
    }

    try {
      if (basis->parsed()) {
        return detail::do_basis(o, out);
      }
      if (check->parsed()) {
        return detail::do_check(o, out);
      }
      for (CLI::App* sub : algebra) {
        if (sub->parsed()) {
          return detail::do_algebra(sub->get_name(), o, out);
        }
      }
    } catch (UsageError const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    } catch (ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    } catch (StructuralError const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    } catch (RingMismatch const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    }
    return 2;
  }

}  // namespace kpnf::cli

#endif  // KPNF_CLI_HPP_
