#pragma once

#include <stdexcept>
#include <string>

namespace rpq {

/// Base for every recoverable math-domain failure raised by the library.
class MathError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DivisionByZero : public MathError {
public:
    explicit DivisionByZero(const std::string& what = "division by zero") : MathError(what) {}
};

/// An evaluation hit a pole, e.g. eps1 == eps2 in a deformed number.
class PoleError : public MathError {
public:
    using MathError::MathError;
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Numerical integration produced NaN/Inf or violated a stability guard.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace rpq
