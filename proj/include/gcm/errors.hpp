#pragma once

#include <stdexcept>
#include <string>

namespace gcm {

// Error taxonomy shared by all modules. Each condition named in an
// operation contract throws the matching type; callers that want a
// catch-all can catch Error.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};
struct NotAGroup : Error {
    using Error::Error;
};
struct TooLarge : Error {
    using Error::Error;
};
struct NotAbelian : Error {
    using Error::Error;
};
struct BadParameters : Error {
    using Error::Error;
};
struct IdentityVertex : Error {
    using Error::Error;
};
struct IdentityElement : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct UnknownRow : Error {
    using Error::Error;
};
struct NotAClique : Error {
    using Error::Error;
};
struct NotAnAutomorphism : Error {
    using Error::Error;
};
struct NotAnIsomorphism : Error {
    using Error::Error;
};
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct NoConvergence : Error {
    using Error::Error;
};
struct ExceptionalCase : Error {
    using Error::Error;
};

} // namespace gcm
