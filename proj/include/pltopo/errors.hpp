#pragma once

#include <stdexcept>
#include <string>

namespace pltopo {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller passed data of the wrong shape (dimension mismatch, empty architecture).
class InputError : public Error {
public:
    using Error::Error;
};

/// An operation's documented precondition does not hold for its argument.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The input is valid but outside the class an analysis supports
/// (non-generic or deep network for Morse classification, non-transversal net).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    enum class Kind { MalformedJson, Shape, ZeroDenominator, BadNumber, BadField };

    ParseError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

} // namespace pltopo
