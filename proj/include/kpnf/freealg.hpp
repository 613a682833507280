// kpnf - normal forms in Kumjian-Pask algebras of standard k-graphs
//
// The free (non-unital) algebra R<X> on X = vertices, paths of nonzero
// degree and their ghosts. Elements are finite sums of nonempty words with
// nonzero coefficients, stored in a canonical order.

#ifndef KPNF_FREEALG_HPP_
#define KPNF_FREEALG_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "kgraph.hpp"
#include "ring.hpp"

namespace kpnf {

  class Generator {
   public:
    // Declaration order is the storage order of tags.
    enum class Kind { vertex, path, ghost };

    Generator() = default;

    static Generator vertex(Vertex v) {
      return Generator(Kind::vertex, Path::vertex(std::move(v)));
    }

    static Generator path(Path p) {
      if (p.is_vertex()) {
        throw StructuralError("a path generator needs nonzero degree");
      }
      return Generator(Kind::path, std::move(p));
    }

    static Generator ghost(Path p) {
      if (p.is_vertex()) {
        throw StructuralError("a ghost generator needs nonzero degree");
      }
      return Generator(Kind::ghost, std::move(p));
    }

    // lambda as a letter: a vertex letter when d(lambda) = 0.
    static Generator of(Path p) {
      return p.is_vertex() ? Generator(Kind::vertex, std::move(p))
                           : Generator(Kind::path, std::move(p));
    }

    // lambda* as a letter, using v* = v.
    static Generator ghost_of(Path p) {
      return p.is_vertex() ? Generator(Kind::vertex, std::move(p))
                           : Generator(Kind::ghost, std::move(p));
    }

    Kind kind() const noexcept {
      return _kind;
    }

    bool is_vertex() const noexcept {
      return _kind == Kind::vertex;
    }

    bool is_path() const noexcept {
      return _kind == Kind::path;
    }

    bool is_ghost() const noexcept {
      return _kind == Kind::ghost;
    }

    // The underlying path: lambda for both lambda and lambda*.
    Path const& path() const noexcept {
      return _path;
    }

    Generator star() const {
      switch (_kind) {
        case Kind::path:
          return Generator(Kind::ghost, _path);
        case Kind::ghost:
          return Generator(Kind::path, _path);
        default:
          return *this;
      }
    }

    friend bool operator==(Generator const&, Generator const&) = default;

    friend std::strong_ordering operator<=>(Generator const& a,
                                            Generator const& b) {
      if (a._kind != b._kind) {
        return a._kind <=> b._kind;
      }
      return a._path <=> b._path;
    }

   private:
    Generator(Kind k, Path p) : _kind(k), _path(std::move(p)) {}

    Kind _kind = Kind::vertex;
    Path _path;
  };

  inline std::string to_string(Generator const& x) {
    std::string s = to_string(x.path());
    return x.is_ghost() ? s + "*" : s;
  }

  // A nonempty word over X.
  class Word {
   public:
    using Letters = std::vector<Generator>;

    Word() = delete;

    explicit Word(Letters letters) : _letters(std::move(letters)) {
      if (_letters.empty()) {
        throw StructuralError("words are nonempty");
      }
    }

    Word(std::initializer_list<Generator> letters)
        : Word(Letters(letters)) {}

    std::size_t size() const noexcept {
      return _letters.size();
    }

    Generator const& operator[](std::size_t i) const {
      return _letters[i];
    }

    Letters const& letters() const noexcept {
      return _letters;
    }

    auto begin() const noexcept {
      return _letters.begin();
    }

    auto end() const noexcept {
      return _letters.end();
    }

    // Reverse the word and swap paths with ghosts.
    Word star() const {
      Letters out;
      out.reserve(_letters.size());
      for (auto it = _letters.rbegin(); it != _letters.rend(); ++it) {
        out.push_back(it->star());
      }
      return Word(std::move(out));
    }

    friend Word operator*(Word const& a, Word const& b) {
      Letters out(a._letters);
      out.insert(out.end(), b._letters.begin(), b._letters.end());
      return Word(std::move(out));
    }

    friend bool operator==(Word const&, Word const&) = default;

    // By length, then letter by letter.
    friend std::strong_ordering operator<=>(Word const& a, Word const& b) {
      if (a.size() != b.size()) {
        return a.size() <=> b.size();
      }
      return std::lexicographical_compare_three_way(
          a._letters.begin(), a._letters.end(),
          b._letters.begin(), b._letters.end());
    }

   private:
    Letters _letters;
  };

  inline std::string to_string(Word const& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += " . ";
      }
      out += to_string(w[i]);
    }
    return out;
  }

  // Finite R-linear combination of words.
  class Element {
   public:
    using Terms = std::map<Word, Coeff>;

    Element() = default;
    explicit Element(Ring ring) : _ring(std::move(ring)) {}

    static Element monomial(Ring ring, Word w, Coeff c = 1) {
      Element x(std::move(ring));
      x.add_term(std::move(w), std::move(c));
      return x;
    }

    Ring const& ring() const noexcept {
      return _ring;
    }

    Terms const& terms() const noexcept {
      return _terms;
    }

    bool is_zero() const noexcept {
      return _terms.empty();
    }

    std::size_t size() const noexcept {
      return _terms.size();
    }

    // Coefficient of w, zero if absent.
    Coeff coefficient(Word const& w) const {
      auto it = _terms.find(w);
      return it == _terms.end() ? Coeff(0) : it->second;
    }

    // Removes and returns the greatest term; the element must be nonzero.
    std::pair<Word, Coeff> extract_greatest() {
      auto node = _terms.extract(std::prev(_terms.end()));
      return {std::move(node.key()), std::move(node.mapped())};
    }

    void add_term(Word w, Coeff const& c) {
      Coeff r = _ring.reduce(c);
      if (r == 0) {
        return;
      }
      auto [it, inserted] = _terms.try_emplace(std::move(w), r);
      if (!inserted) {
        it->second = _ring.add(it->second, r);
        if (it->second == 0) {
          _terms.erase(it);
        }
      }
    }

    Element& operator+=(Element const& y) {
      require_same_ring(_ring, y._ring);
      for (auto const& [w, c] : y._terms) {
        add_term(w, c);
      }
      return *this;
    }

    Element& operator-=(Element const& y) {
      require_same_ring(_ring, y._ring);
      for (auto const& [w, c] : y._terms) {
        add_term(w, _ring.negate(c));
      }
      return *this;
    }

    friend Element operator+(Element x, Element const& y) {
      return x += y;
    }

    friend Element operator-(Element x, Element const& y) {
      return x -= y;
    }

    Element scaled(Coeff const& c) const {
      Element out(_ring);
      for (auto const& [w, a] : _terms) {
        out.add_term(w, _ring.multiply(a, c));
      }
      return out;
    }

    // Free product: bilinear extension of concatenation.
    friend Element operator*(Element const& x, Element const& y) {
      require_same_ring(x._ring, y._ring);
      Element out(x._ring);
      for (auto const& [u, a] : x._terms) {
        for (auto const& [v, b] : y._terms) {
          out.add_term(u * v, x._ring.multiply(a, b));
        }
      }
      return out;
    }

    // Same ring and same terms.
    friend bool operator==(Element const&, Element const&) = default;

   private:
    Ring  _ring;
    Terms _terms;
  };

  inline Element element_add(Element const& x, Element const& y) {
    return x + y;
  }

  inline Element element_mul(Element const& x, Element const& y) {
    return x * y;
  }

  // The anti-involution x -> x* on R<X>.
  inline Element star(Element const& x) {
    Element out(x.ring());
    for (auto const& [w, c] : x.terms()) {
      out.add_term(w.star(), c);
    }
    return out;
  }

  // Coefficients mapped into another ring.
  inline Element change_ring(Element const& x, Ring const& target) {
    Element out(target);
    for (auto const& [w, c] : x.terms()) {
      out.add_term(w, c);
    }
    return out;
  }

}  // namespace kpnf

#endif  // KPNF_FREEALG_HPP_
