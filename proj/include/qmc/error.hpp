#pragma once

#include <stdexcept>
#include <string>

namespace qmc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A physically meaningless request: negative time, an invalid density
/// matrix, parameters outside their allowed range.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Parameters that would make the generated map not completely positive.
class CompletePositivityError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed channel configuration (unknown keys, wrong types, bad kind).
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace qmc
