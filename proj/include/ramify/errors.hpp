#pragma once

#include <stdexcept>
#include <string>

namespace ramify {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Division by zero or inversion of an element that is zero to the known precision.
class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// A result would have no certain terms, or a needed coefficient lies beyond the known precision.
class PrecisionExhausted : public Error {
public:
    using Error::Error;
};

/// Malformed textual input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Internal cross-check failed; signals an implementation bug rather than bad input.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace ramify
