#pragma once

#include <stdexcept>
#include <string>

namespace ssp4 {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroInversion : Error {
    ZeroInversion() : Error("inverse of zero field element") {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

// Raised when a splitting-field construction would exceed the configured
// extension-degree cap over the prime field.
struct DegreeCapExceeded : Error {
    explicit DegreeCapExceeded(const std::string& msg) : Error(msg) {}
};

struct ResourceBudgetExceeded : Error {
    explicit ResourceBudgetExceeded(const std::string& msg) : Error(msg) {}
};

struct NotZeroDimensional : Error {
    explicit NotZeroDimensional(const std::string& msg) : Error(msg) {}
};

struct EngineDisagreement : Error {
    explicit EngineDisagreement(const std::string& msg) : Error(msg) {}
};

struct SingularMatrix : Error {
    SingularMatrix() : Error("matrix is singular") {}
};

struct ClosureViolation : Error {
    explicit ClosureViolation(const std::string& msg) : Error(msg) {}
};

struct PartitionMismatch : Error {
    explicit PartitionMismatch(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace ssp4
