#pragma once

#include <stdexcept>
#include <string>

namespace hexaform {

/// Base of every error the library raises. The CLI maps subclasses onto its
/// stable exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller broke an operation's precondition (mixed fields, bad parameters).
class UsageError : public Error {
public:
    using Error::Error;
};

class InvalidPrime : public UsageError {
public:
    using UsageError::UsageError;
};

/// Complex admits no coherent orientation, is disconnected, or carries no signs
/// where signs are required.
class OrientationError : public Error {
public:
    using Error::Error;
};

/// Exact enumeration would exceed the configured cap.
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, std::string required)
        : Error(what), required_(std::move(required)) {}

    /// Number of colorings the enumeration would have needed, in decimal.
    const std::string& required() const noexcept { return required_; }

private:
    std::string required_;
};

/// A Pachner move descriptor does not apply to the triangulation.
class MoveError : public Error {
public:
    using Error::Error;
};

/// No applicable move exists for a requested kind.
class MoveNotFound : public MoveError {
public:
    using MoveError::MoveError;
};

/// Input file or document is structurally invalid.
class MalformedInput : public Error {
public:
    using Error::Error;
};

} // namespace hexaform
