#pragma once

#include <stdexcept>
#include <string>

namespace causalgap {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A frequency band, delay or grid violates its construction invariants.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class NonRealInput : public Error {
public:
    using Error::Error;
};

class ZeroKernel : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

// Raised when a closed-form radicand is negative beyond rounding; this
// indicates a bug, never a property of the input.
class NegativeRadicand : public Error {
public:
    using Error::Error;
};

class GridMismatch : public Error {
public:
    using Error::Error;
};

class NonMonotoneLadder : public Error {
public:
    using Error::Error;
};

} // namespace causalgap
