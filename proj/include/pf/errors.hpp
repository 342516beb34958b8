#pragma once

#include <stdexcept>
#include <string>

namespace pf {

// Domain errors named by the contract they break. CLI maps them to exit 1,
// verification harnesses map internal failures to report entries instead.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroInput : Error { using Error::Error; };
struct SqrtOfNonSquare : Error { using Error::Error; };
struct PrecisionExhausted : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct EvenDegree : Error { using Error::Error; };
struct NoIrreduciblePolynomial : Error { using Error::Error; };
struct NoClassFound : Error { using Error::Error; };
struct NotEquivalent : Error { using Error::Error; };
struct SearchExhausted : Error { using Error::Error; };
struct InvalidInvariants : Error { using Error::Error; };
struct SingularTheta : Error { using Error::Error; };
struct NonIntegralResult : Error { using Error::Error; };
struct NotApplicable : Error { using Error::Error; };
struct UsageError : Error { using Error::Error; };

} // namespace pf
