// kpnf - normal forms in Kumjian-Pask algebras of standard k-graphs
//
// Points of Z^k (vertices) and N^k (degrees) with the lattice operations
// join (pointwise max), meet (pointwise min), |m| and the partial order <=.
// All coordinate arithmetic is overflow checked.

#ifndef KPNF_LATTICE_HPP_
#define KPNF_LATTICE_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <type_traits>

#include <boost/container/small_vector.hpp>

#include "errors.hpp"

namespace kpnf {

  using Coord    = std::int64_t;
  using CoordVec = boost::container::small_vector<Coord, 4>;

  namespace detail {
    inline Coord checked_add(Coord a, Coord b) {
      Coord r;
      if (__builtin_add_overflow(a, b, &r)) {
        throw StructuralError("coordinate overflow in addition");
      }
      return r;
    }

    inline Coord checked_sub(Coord a, Coord b) {
      Coord r;
      if (__builtin_sub_overflow(a, b, &r)) {
        throw StructuralError("coordinate overflow in subtraction");
      }
      return r;
    }

    inline void require_same_rank(std::size_t a, std::size_t b) {
      if (a != b) {
        throw StructuralError("rank mismatch: " + std::to_string(a)
                              + " vs " + std::to_string(b));
      }
    }
  }  // namespace detail

  template <typename Derived>
  class LatticePoint {
   public:
    LatticePoint() = default;
    explicit LatticePoint(CoordVec coords) : _coords(std::move(coords)) {}
    LatticePoint(std::initializer_list<Coord> coords)
        : _coords(coords.begin(), coords.end()) {}

    std::size_t rank() const noexcept {
      return _coords.size();
    }

    Coord operator[](std::size_t i) const {
      return _coords[i];
    }

    CoordVec const& coords() const noexcept {
      return _coords;
    }

    // |m| = m_1 + ... + m_k
    Coord norm() const {
      Coord s = 0;
      for (Coord c : _coords) {
        s = detail::checked_add(s, c);
      }
      return s;
    }

    bool leq(Derived const& that) const {
      detail::require_same_rank(rank(), that.rank());
      for (std::size_t i = 0; i < rank(); ++i) {
        if (_coords[i] > that._coords[i]) {
          return false;
        }
      }
      return true;
    }

    friend bool operator==(LatticePoint const& a, LatticePoint const& b) {
      return a._coords == b._coords;
    }

    friend std::strong_ordering operator<=>(LatticePoint const& a,
                                            LatticePoint const& b) {
      return std::lexicographical_compare_three_way(a._coords.begin(),
                                                    a._coords.end(),
                                                    b._coords.begin(),
                                                    b._coords.end());
    }

   protected:
    CoordVec _coords;
  };

  class Vertex : public LatticePoint<Vertex> {
   public:
    using LatticePoint::LatticePoint;

    static Vertex origin(std::size_t k) {
      return Vertex(CoordVec(k, 0));
    }
  };

  // A point of N^k.
  class Degree : public LatticePoint<Degree> {
   public:
    Degree() = default;

    explicit Degree(CoordVec coords) : LatticePoint(std::move(coords)) {
      validate();
    }

    Degree(std::initializer_list<Coord> coords) : LatticePoint(coords) {
      validate();
    }

    static Degree zero(std::size_t k) {
      return Degree(CoordVec(k, 0));
    }

    // e_i, with i zero based.
    static Degree unit(std::size_t k, std::size_t i) {
      if (i >= k) {
        throw StructuralError("unit vector index out of range");
      }
      CoordVec c(k, 0);
      c[i] = 1;
      return Degree(std::move(c));
    }

    bool is_zero() const noexcept {
      return std::all_of(
          _coords.begin(), _coords.end(), [](Coord c) { return c == 0; });
    }

   private:
    void validate() const {
      for (Coord c : _coords) {
        if (c < 0) {
          throw StructuralError("degree vector with negative entry");
        }
      }
    }
  };

  template <typename T>
  concept LatticeType = std::is_base_of_v<LatticePoint<T>, T>;

  template <LatticeType T>
  T join(T const& a, T const& b) {
    detail::require_same_rank(a.rank(), b.rank());
    CoordVec c(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) {
      c[i] = std::max(a[i], b[i]);
    }
    return T(std::move(c));
  }

  template <LatticeType T>
  T meet(T const& a, T const& b) {
    detail::require_same_rank(a.rank(), b.rank());
    CoordVec c(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) {
      c[i] = std::min(a[i], b[i]);
    }
    return T(std::move(c));
  }

  inline Degree operator+(Degree const& a, Degree const& b) {
    detail::require_same_rank(a.rank(), b.rank());
    CoordVec c(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) {
      c[i] = detail::checked_add(a[i], b[i]);
    }
    return Degree(std::move(c));
  }

  // Throws StructuralError unless b <= a.
  inline Degree operator-(Degree const& a, Degree const& b) {
    detail::require_same_rank(a.rank(), b.rank());
    CoordVec c(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) {
      c[i] = detail::checked_sub(a[i], b[i]);
    }
    return Degree(std::move(c));
  }

  // (a - b) v 0
  inline Degree truncated_sub(Degree const& a, Degree const& b) {
    detail::require_same_rank(a.rank(), b.rank());
    CoordVec c(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) {
      c[i] = std::max<Coord>(detail::checked_sub(a[i], b[i]), 0);
    }
    return Degree(std::move(c));
  }

  inline Vertex operator+(Vertex const& v, Degree const& n) {
    detail::require_same_rank(v.rank(), n.rank());
    CoordVec c(v.rank());
    for (std::size_t i = 0; i < v.rank(); ++i) {
      c[i] = detail::checked_add(v[i], n[i]);
    }
    return Vertex(std::move(c));
  }

  inline Vertex operator-(Vertex const& v, Degree const& n) {
    detail::require_same_rank(v.rank(), n.rank());
    CoordVec c(v.rank());
    for (std::size_t i = 0; i < v.rank(); ++i) {
      c[i] = detail::checked_sub(v[i], n[i]);
    }
    return Vertex(std::move(c));
  }

  // r - s as a degree; throws StructuralError unless s <= r.
  inline Degree difference(Vertex const& r, Vertex const& s) {
    detail::require_same_rank(r.rank(), s.rank());
    CoordVec c(r.rank());
    for (std::size_t i = 0; i < r.rank(); ++i) {
      c[i] = detail::checked_sub(r[i], s[i]);
    }
    return Degree(std::move(c));
  }

  namespace detail {
    template <typename F>
    void degrees_with_norm(CoordVec& cur, std::size_t i, Coord left, F& f) {
      if (i + 1 == cur.size()) {
        cur[i] = left;
        f(Degree(cur));
        return;
      }
      for (Coord x = 0; x <= left; ++x) {
        cur[i] = x;
        degrees_with_norm(cur, i + 1, left - x, f);
      }
    }
  }  // namespace detail

  // Calls f on every n in N^k with |n| = total, in increasing lexicographic
  // order.
  template <typename F>
  void for_each_degree_with_norm(std::size_t k, Coord total, F&& f) {
    if (k == 0 || total < 0) {
      return;
    }
    CoordVec cur(k, 0);
    detail::degrees_with_norm(cur, 0, total, f);
  }

  // Calls f on every n in N^k with n <= bound, in increasing lexicographic
  // order.
  template <typename F>
  void for_each_degree_below(Degree const& bound, F&& f) {
    CoordVec cur(bound.rank(), 0);
    while (true) {
      f(Degree(cur));
      std::size_t i = bound.rank();
      while (i > 0 && cur[i - 1] == bound[i - 1]) {
        cur[i - 1] = 0;
        --i;
      }
      if (i == 0) {
        return;
      }
      ++cur[i - 1];
    }
  }

  template <LatticeType T>
  std::string to_string(T const& x) {
    std::string out = "(";
    for (std::size_t i = 0; i < x.rank(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += std::to_string(x[i]);
    }
    out += ')';
    return out;
  }

}  // namespace kpnf

#endif  // KPNF_LATTICE_HPP_
