// kpnf - normal forms in Kumjian-Pask algebras of standard k-graphs
//
// Exact coefficient rings chosen at run time: the integers, or Z/nZ.

#ifndef KPNF_RING_HPP_
#define KPNF_RING_HPP_

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace kpnf {

  using Coeff = boost::multiprecision::cpp_int;

  class Ring {
   public:
    // The integers.
    Ring() = default;

    static Ring integers() {
      return Ring();
    }

    static Ring zmod(Coeff const& n) {
      if (n < 2) {
        throw RingMismatch("modulus must be at least 2");
      }
      Ring r;
      r._modulus = n;
      return r;
    }

    bool is_integers() const noexcept {
      return _modulus == 0;
    }

    // 0 for the integers.
    Coeff const& modulus() const noexcept {
      return _modulus;
    }

    // Canonical representative: residues in [0, n) for Z/nZ.
    Coeff reduce(Coeff x) const {
      if (_modulus != 0) {
        x %= _modulus;
        if (x < 0) {
          x += _modulus;
        }
      }
      return x;
    }

    Coeff zero() const {
      return 0;
    }

    Coeff one() const {
      return reduce(1);
    }

    Coeff add(Coeff const& a, Coeff const& b) const {
      return reduce(a + b);
    }

    Coeff negate(Coeff const& a) const {
      return reduce(-a);
    }

    Coeff multiply(Coeff const& a, Coeff const& b) const {
      return reduce(a * b);
    }

    bool is_zero(Coeff const& a) const {
      return reduce(a) == 0;
    }

    bool equal(Coeff const& a, Coeff const& b) const {
      return reduce(a - b) == 0;
    }

    std::string name() const {
      return is_integers() ? "int" : "zmod:" + _modulus.str();
    }

    bool operator==(Ring const&) const = default;

   private:
    Coeff _modulus = 0;
  };

  inline void require_same_ring(Ring const& a, Ring const& b) {
    if (!(a == b)) {
      throw RingMismatch("ring mismatch: " + a.name() + " vs " + b.name());
    }
  }

}  // namespace kpnf

#endif  // KPNF_RING_HPP_
