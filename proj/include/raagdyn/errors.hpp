#pragma once

#include <stdexcept>
#include <string>

namespace raagdyn {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text (JSON structure, word tokens).
class ParseError : public Error {
public:
    using Error::Error;
};

// Structurally valid input that breaks a contract (unknown vertex,
// relation violation, bad generator side condition, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

// A directed cycle where an acyclic diagram is required.
class CycleError : public Error {
public:
    using Error::Error;
};

// The complete-or-empty dichotomy failed; certifies the input was not a
// pure square map.
class ViolationError : public Error {
public:
    using Error::Error;
};

} // namespace raagdyn
