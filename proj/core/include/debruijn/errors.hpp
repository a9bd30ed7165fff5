#pragma once

#include <stdexcept>

namespace debruijn {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An instance exceeds a size guard. Guards are configuration: callers can
/// raise them explicitly instead of editing code.
struct InstanceTooLarge : Error {
    using Error::Error;
};

/// Malformed input text (certificate, prefix-set or seed-table file).
struct ParseError : Error {
    using Error::Error;
};

/// An exact identity that the construction guarantees failed to hold.
/// This is never a user error; it falsifies the build or its data.
struct CheckFailed : Error {
    using Error::Error;
};

}  // namespace debruijn
