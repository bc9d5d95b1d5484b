#ifndef DUMONT_ERRORS_HPP
#define DUMONT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dumont {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// perm_core
struct NotABijection : Error { using Error::Error; };
struct EmptyToken : Error { using Error::Error; };
struct MixedFormat : Error { using Error::Error; };

// dumont families
struct LimitExceeded : Error { using Error::Error; };
struct OddInput : Error { using Error::Error; };

// sequences / series
struct DomainError : Error { using Error::Error; };
struct PrecisionExhausted : Error { using Error::Error; };
struct OrderMismatch : Error { using Error::Error; };
struct ZeroConstantTerm : Error { using Error::Error; };
struct ConstantTermNotOne : Error { using Error::Error; };
struct UnknownSeries : Error { using Error::Error; };
struct InternalInconsistency : Error { using Error::Error; };

// structure
struct NotInFamily : Error { using Error::Error; };
struct MalformedStructure : Error { using Error::Error; };
struct InvalidComposition : Error { using Error::Error; };
struct InvalidDyckPath : Error { using Error::Error; };
struct UnknownFamily : Error { using Error::Error; };
struct UnknownShape : Error { using Error::Error; };
struct UnknownTheorem : Error { using Error::Error; };

}  // namespace dumont

#endif
