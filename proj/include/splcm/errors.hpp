#pragma once

#include <stdexcept>
#include <string>

namespace splcm {

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonTriangularLength : std::runtime_error {
    explicit NonTriangularLength(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotPositiveDefinite : std::runtime_error {
    explicit NotPositiveDefinite(const std::string& msg) : std::runtime_error(msg) {}
};

struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& msg) : std::runtime_error(msg) {}
};

struct MaxIterations : std::runtime_error {
    explicit MaxIterations(const std::string& msg) : std::runtime_error(msg) {}
};

struct Infeasible : std::runtime_error {
    explicit Infeasible(const std::string& msg) : std::runtime_error(msg) {}
};

struct Unbounded : std::runtime_error {
    explicit Unbounded(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionTooLarge : std::runtime_error {
    explicit DimensionTooLarge(const std::string& msg) : std::runtime_error(msg) {}
};

struct HubDivisibility : std::runtime_error {
    explicit HubDivisibility(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConditioningFailure : std::runtime_error {
    explicit ConditioningFailure(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonPositiveVariance : std::runtime_error {
    explicit NonPositiveVariance(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidCorrelation : std::runtime_error {
    explicit InvalidCorrelation(const std::string& msg) : std::runtime_error(msg) {}
};

struct ClassTooSmall : std::runtime_error {
    explicit ClassTooSmall(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace splcm
