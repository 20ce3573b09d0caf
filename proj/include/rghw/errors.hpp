#pragma once

#include <stdexcept>

namespace rghw {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrimePower : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct WidthMismatch : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct InvalidT : Error { using Error::Error; };
struct InvalidDims : Error { using Error::Error; };
struct InvalidParams : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct NonIntegralQuotient : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct DegeneratePair : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

} // namespace rghw
