#ifndef YSYS_ERRORS_HPP
#define YSYS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ysys {

// Exit-code contract of the command line tool:
//   ValidationError -> 2, PropertyError -> 3, ResourceError -> 4.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: wrong shapes, support outside 0 < p < r_i, unknown labels.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A mathematical property the caller required does not hold
/// (non-symplectic pair, non sign-coherent c-vector, ...).
class PropertyError : public Error {
public:
    using Error::Error;
};

/// A configured bound was exceeded (monomial cap, integer overflow, search cap).
class ResourceError : public Error {
public:
    using Error::Error;
};

/// An invariant that the theory guarantees was observed to fail.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace ysys

#endif
