#pragma once

#include <stdexcept>
#include <string>

namespace cascade {

/// A rate or option failed validation. `field()` names the offending input.
class InvalidParameter : public std::invalid_argument {
public:
    InvalidParameter(std::string field, const std::string& what)
        : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Bad configuration: unknown selector, dimension cap exceeded, malformed option.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An integration hit its time horizon before the residual dropped below tolerance.
class NonConvergence : public std::runtime_error {
public:
    NonConvergence(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// Too much population reached the highest retained Fock level.
class TruncationError : public std::runtime_error {
public:
    TruncationError(const std::string& what, double top_level_population)
        : std::runtime_error(what), top_level_population_(top_level_population) {}

    double top_level_population() const noexcept { return top_level_population_; }

private:
    double top_level_population_;
};

/// Should not happen for valid inputs (e.g. a singular steady-state system).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace cascade
