// kpnf - normal forms in Kumjian-Pask algebras of standard k-graphs
//
// Exception hierarchy shared by every module.

#ifndef KPNF_ERRORS_HPP_
#define KPNF_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kpnf {

  struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  // Mismatched dimensions, malformed paths, integer overflow.
  struct StructuralError : Error {
    using Error::Error;
  };

  struct CompositionError : Error {
    using Error::Error;
  };

  struct DegreeSplitError : Error {
    using Error::Error;
  };

  // Shape constraints of S(v,w,m,n,p,q) violated.
  struct ShapeError : Error {
    using Error::Error;
  };

  struct RingMismatch : Error {
    using Error::Error;
  };

  // A pair is not in the set the operation requires (Â, A), or a class key
  // has no member.
  struct MembershipError : Error {
    using Error::Error;
  };

  // A rewrite produced a word that is not strictly smaller than its source.
  struct OrderingViolation : Error {
    using Error::Error;
  };

  struct TerminationFault : Error {
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t pos)
        : Error("parse error at offset " + std::to_string(pos) + ": " + what),
          _pos(pos) {}

    std::size_t position() const noexcept {
      return _pos;
    }

   private:
    std::size_t _pos;
  };

}  // namespace kpnf

#endif  // KPNF_ERRORS_HPP_
