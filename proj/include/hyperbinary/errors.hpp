#pragma once

#include <stdexcept>

namespace hyperbinary {

/// Argument outside the domain of an operation (odd input to embed, c(0), bad digit...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A graph or enumeration would exceed the caller's vertex limit.
class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The isomorphism search ran out of node expansions.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A structural property that must hold for A(n) was observed to fail.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace hyperbinary
