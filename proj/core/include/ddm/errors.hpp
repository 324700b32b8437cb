#pragma once

#include <stdexcept>

namespace ddm {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A type invariant or operation precondition was violated.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// The perpetuity diverges: required return does not exceed terminal growth.
class NonConvergent : public Error {
public:
    using Error::Error;
};

/// The solver bracket does not straddle the target price.
class BracketError : public Error {
public:
    using Error::Error;
};

/// The series oracle could not meet its remainder bound within the horizon cap.
class HorizonExceeded : public Error {
public:
    using Error::Error;
};

/// Syntactically malformed input document.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Well-formed document with a field value outside its valid domain.
class ValidationError : public Error {
public:
    using Error::Error;
};

} // namespace ddm
