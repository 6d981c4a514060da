// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace lamlab {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument value or malformed input (CLI exit code 2).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public ParameterError {
public:
    using ParameterError::ParameterError;
};

/// Domain shape the mesher cannot handle.
class UnsupportedDomainError : public ParameterError {
public:
    using ParameterError::ParameterError;
};

/// Mesh size / cell size combination is not admissible (CLI exit code 3).
class AdmissibilityError : public Error {
public:
    using Error::Error;
};

/// Lamination level is infinite within the cap, or hull data is unusable (CLI exit code 3).
class LevelError : public Error {
public:
    using Error::Error;
};

} // namespace lamlab
