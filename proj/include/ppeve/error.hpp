#pragma once

#include <stdexcept>

namespace ppeve {

/// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (bad bit string, length mismatch, ...).
struct InputError : Error {
    using Error::Error;
};

/// A channel table that fails validation (negative weight, bad normalization).
struct ModelError : Error {
    using Error::Error;
};

/// Exhaustive enumeration would exceed the configured outcome cap.
struct CapacityError : Error {
    using Error::Error;
};

}  // namespace ppeve
