#pragma once

#include <stdexcept>
#include <string>

namespace brauer {

// Error taxonomy shared by every module.  The C API and the CLI map these to
// stable status codes: caller-input problems exit with 2, internal
// consistency failures with 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller-input problems (exit code 2).
struct UsageError : Error {
    using Error::Error;
};
struct OutOfRange : UsageError {
    using UsageError::UsageError;
};
struct DepthExceeded : UsageError {
    using UsageError::UsageError;
};
struct UnsupportedCase : UsageError {
    using UsageError::UsageError;
};
struct CapExceeded : UsageError {
    using UsageError::UsageError;
};

// Internal consistency failures (exit code 3).
struct InternalError : Error {
    using Error::Error;
};
struct NegativeMultiplicity : InternalError {
    using InternalError::InternalError;
};
struct NoConvergence : InternalError {
    using InternalError::InternalError;
};

} // namespace brauer
