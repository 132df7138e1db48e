#ifndef FTSPARE_ERRORS_HPP
#define FTSPARE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ftspare {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// graph-core
struct InvalidEdge : Error { using Error::Error; };
struct InvalidVertex : Error { using Error::Error; };
struct GraphTooLarge : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// perm
struct InvalidPermutation : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct InvalidPoint : Error { using Error::Error; };
struct InvalidTuple : Error { using Error::Error; };
struct InvalidRange : Error { using Error::Error; };

/// Common base of the two cap errors, for callers that treat an oversized
/// universe as "answer unknown" rather than a failure.
struct CapExceeded : Error { using Error::Error; };
struct OrbitTooLarge : CapExceeded { using CapExceeded::CapExceeded; };
struct UniverseTooLarge : CapExceeded { using CapExceeded::CapExceeded; };

// fault
struct OrderMismatch : Error { using Error::Error; };
struct SizeMismatch : Error { using Error::Error; };

} // namespace ftspare

#endif
