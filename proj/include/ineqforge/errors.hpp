#pragma once

#include <stdexcept>
#include <string>

namespace ineq {

/// Invalid parameter combination (dimension bounds, exponent ranges, ...).
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A computation could not meet its accuracy contract (truncation tails,
/// unresolved oscillation, solver non-convergence).
class accuracy_error : public std::runtime_error {
public:
    explicit accuracy_error(const std::string& what) : std::runtime_error(what) {}
};

/// Non-finite data where finite values are required.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}
