#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace smae {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed expression, distribution or operator text.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& message)
        : Error("parse error at position " + std::to_string(position) + ": " + message),
          position_(position), detail_(message)
    {
    }

    std::size_t position() const noexcept { return position_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t position_;
    std::string detail_;
};

/// Input is well formed but outside the domain of an operation
/// (Lagrangian distribution, vanishing denominator, wrong degree, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The equation type is not handled by the requested path (parabolic, elliptic).
class UnsupportedTypeError : public DomainError {
public:
    using DomainError::DomainError;
};

/// An exact evaluation was impossible (denominator vanishes, radical not rational).
class EvaluationError : public Error {
public:
    using Error::Error;
};

} // namespace smae
