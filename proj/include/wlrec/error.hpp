#pragma once

#include <stdexcept>
#include <string>

namespace wlrec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller misuse: malformed input, mixed coefficient fields, empty samples.
class UsageError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Parameters the implemented formulas do not cover (e.g. non-integer alpha).
class UnsupportedParameter : public Error {
public:
    using Error::Error;
};

/// Two independent evaluation routes disagree.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// An iterative method failed to converge.
class NumericalError : public Error {
public:
    using Error::Error;
};

}  // namespace wlrec
