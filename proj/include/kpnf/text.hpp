// kpnf - normal forms in Kumjian-Pask algebras of standard k-graphs
//
// Text syntax for vertices, paths, words and elements:
//
//   vertex    v(a1,...,ak)
//   path      p[(r1,...,rk)->(s1,...,sk);L_n,...,L_1]
//   ghost     <path>*
//   word      gen . gen . ... . gen
//   element   c1 * w1 + c2 * w2 - c3 * w3 ...   or   0
//
// format_element() prints terms in storage order; parse_element() accepts
// everything format_element() prints, plus omitted unit coefficients.

#ifndef KPNF_TEXT_HPP_
#define KPNF_TEXT_HPP_

#include <cctype>
#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "freealg.hpp"
#include "kgraph.hpp"
#include "ring.hpp"

namespace kpnf {

  inline std::string format_element(Element const& x) {
    if (x.is_zero()) {
      return "0";
    }
    std::string out;
    bool        first = true;
    for (auto const& [w, c] : x.terms()) {
      if (first) {
        out += c.str();
      } else if (c < 0) {
        out += " - " + Coeff(-c).str();
      } else {
        out += " + " + c.str();
      }
      first = false;
      out += " * " + to_string(w);
    }
    return out;
  }

  class TextParser {
   public:
    TextParser(std::string_view text, GraphConfig const& g)
        : _text(text), _graph(g) {}

    Element element(Ring const& ring) {
      Element out(ring);
      skip_ws();
      bool first = true;
      while (true) {
        Coeff sign = 1;
        if (!first) {
          if (accept('+')) {
          } else if (accept('-')) {
            sign = -1;
          } else {
            break;
          }
        }
        std::size_t start = _pos;
        Coeff       c     = sign;
        if (at_digit_or_minus()) {
          c *= integer();
          if (!accept('*')) {
            if (first && c == 0 && at_end()) {
              return out;
            }
            fail("expected '*' after coefficient", start);
          }
        }
        out.add_term(word(), c);
        first = false;
      }
      if (!at_end()) {
        fail("unexpected character");
      }
      return out;
    }

    Word word() {
      Word::Letters letters;
      letters.push_back(generator());
      while (accept('.')) {
        letters.push_back(generator());
      }
      return Word(std::move(letters));
    }

    Generator generator() {
      skip_ws();
      std::size_t start = _pos;
      try {
        if (accept_raw('v')) {
          Vertex v = vertex();
          check_rank(v, start);
          accept('*');  // v* = v
          return Generator::vertex(std::move(v));
        }
        if (accept_raw('p')) {
          expect('[');
          Vertex r = vertex();
          expect('-');
          expect_raw('>');
          Vertex s = vertex();
          expect(';');
          std::vector<int> levels;
          skip_ws();
          if (peek() != ']') {
            levels.push_back(small_int());
            while (accept(',')) {
              levels.push_back(small_int());
            }
          }
          expect(']');
          Path p(std::move(r), std::move(s), LevelVector::from_high_first(levels));
          check_path(_graph, p);
          return accept('*') ? Generator::ghost_of(std::move(p))
                             : Generator::of(std::move(p));
        }
      } catch (StructuralError const& e) {
        fail(e.what(), start);
      }
      fail("expected a generator 'v(...)' or 'p[...]'", start);
    }

    bool at_end() {
      skip_ws();
      return _pos == _text.size();
    }

   private:
    [[noreturn]] void fail(std::string const& what) const {
      throw ParseError(what, _pos);
    }

    [[noreturn]] void fail(std::string const& what, std::size_t pos) const {
      throw ParseError(what, pos);
    }

    char peek() const {
      return _pos < _text.size() ? _text[_pos] : '\0';
    }

    void skip_ws() {
      while (_pos < _text.size()
             && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
        ++_pos;
      }
    }

    bool accept_raw(char c) {
      if (peek() == c) {
        ++_pos;
        return true;
      }
      return false;
    }

    bool accept(char c) {
      skip_ws();
      return accept_raw(c);
    }

    void expect_raw(char c) {
      if (!accept_raw(c)) {
        fail(std::string("expected '") + c + "'");
      }
    }

    void expect(char c) {
      skip_ws();
      expect_raw(c);
    }

    bool at_digit_or_minus() {
      skip_ws();
      char c = peek();
      return c == '-' || std::isdigit(static_cast<unsigned char>(c));
    }

    Coeff integer() {
      skip_ws();
      std::size_t start = _pos;
      bool        neg   = accept_raw('-');
      skip_ws();
      std::size_t digits = _pos;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        ++_pos;
      }
      if (digits == _pos) {
        fail("expected an integer", start);
      }
      Coeff v(std::string(_text.substr(digits, _pos - digits)));
      return neg ? Coeff(-v) : v;
    }

    Coord coordinate() {
      std::size_t start = _pos;
      Coeff       v     = integer();
      if (v > std::numeric_limits<Coord>::max()
          || v < std::numeric_limits<Coord>::min()) {
        fail("coordinate out of range", start);
      }
      return static_cast<Coord>(v);
    }

    int small_int() {
      std::size_t start = _pos;
      Coeff       v     = integer();
      if (v > 1'000'000 || v < -1'000'000) {
        fail("level entry out of range", start);
      }
      return static_cast<int>(v);
    }

    Vertex vertex() {
      expect('(');
      CoordVec c;
      c.push_back(coordinate());
      while (accept(',')) {
        c.push_back(coordinate());
      }
      expect(')');
      return Vertex(std::move(c));
    }

    void check_rank(Vertex const& v, std::size_t start) const {
      if (v.rank() != static_cast<std::size_t>(_graph.k)) {
        fail("expected " + std::to_string(_graph.k) + " coordinates, got "
                 + std::to_string(v.rank()),
             start);
      }
    }

    std::string_view _text;
    GraphConfig       _graph;
    std::size_t       _pos = 0;
  };

  inline Element parse_element(std::string_view   text,
                               GraphConfig const& g,
                               Ring const&        ring = Ring::integers()) {
    return TextParser(text, g).element(ring);
  }

  inline Word parse_word(std::string_view text, GraphConfig const& g) {
    TextParser p(text, g);
    Word       w = p.word();
    if (!p.at_end()) {
      throw ParseError("trailing characters after word", text.size());
    }
    return w;
  }

  inline Path parse_path(std::string_view text, GraphConfig const& g) {
    Word w = parse_word(text, g);
    if (w.size() != 1 || w[0].is_ghost()) {
      throw ParseError("expected a single path", 0);
    }
    return w[0].path();
  }

}  // namespace kpnf

#endif  // KPNF_TEXT_HPP_
