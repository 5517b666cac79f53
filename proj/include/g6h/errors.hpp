#pragma once

#include <stdexcept>
#include <string>

namespace g6h {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Text could not be parsed (carries token and position in the message).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A configured resource budget (element cap, state cap, length cap) was exceeded.
class CapError : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A product / target mismatch (e.g. a tuple that does not multiply to the
/// expected element, or a standard factorization for an inadmissible signature).
class MismatchError : public Error {
public:
    using Error::Error;
};

} // namespace g6h
