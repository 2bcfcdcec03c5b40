#pragma once

#include <stdexcept>
#include <string>

namespace matfol {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownElementError : Error {
    using Error::Error;
};

// A brute-force enumeration would exceed its subset budget.
struct SizeBoundTooLargeError : Error {
    using Error::Error;
};

// An evaluation budget (assignment count, coloring count, ...) was exceeded.
struct BudgetExceededError : Error {
    using Error::Error;
};

struct SumPreconditionError : Error {
    using Error::Error;
};

struct ElementSharedError : Error {
    using Error::Error;
};

struct TreeNotNormalizedError : Error {
    using Error::Error;
};

struct MdwcFailureError : Error {
    using Error::Error;
};

struct NotGraphicError : Error {
    using Error::Error;
};

struct NotCographicError : Error {
    using Error::Error;
};

struct TTNotSimpleError : Error {
    using Error::Error;
};

struct KernelTooLargeError : Error {
    using Error::Error;
};

struct FormatError : Error {
    using Error::Error;
};

}  // namespace matfol
