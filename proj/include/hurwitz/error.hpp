#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

// bad conductor, non-unit Galois index, mismatched fields, ...
struct DomainError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// invalid run configuration (unknown suite, bad precision)
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace hurwitz
