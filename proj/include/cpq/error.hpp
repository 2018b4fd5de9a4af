#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace cpq {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter lies outside the curve domain (or an interval is degenerate).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An argument violates a precondition (zero direction, mismatched dimensions, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// The requested operation is not available for this object
/// (e.g. a custom curve without a declared antiderivative).
class CapabilityError : public Error {
public:
    using Error::Error;
};

/// A numerical procedure failed to converge within its budget.
/// Carries the best partial estimate and, where meaningful, certified bounds.
class NumericalError : public Error {
public:
    NumericalError(const std::string& what, double partial,
                   double lower = 0.0,
                   double upper = std::numeric_limits<double>::infinity())
        : Error(what), partial_(partial), lower_(lower), upper_(upper) {}

    double partial() const { return partial_; }
    double lower() const { return lower_; }
    double upper() const { return upper_; }

private:
    double partial_;
    double lower_;
    double upper_;
};

/// A predicate query ran out of iterations before either exit condition
/// triggered. Carries the certified bounds at the moment of failure.
class IndeterminateError : public Error {
public:
    IndeterminateError(const std::string& what, double lower, double upper)
        : Error(what), lower_(lower), upper_(upper) {}

    double lower() const { return lower_; }
    double upper() const { return upper_; }

private:
    double lower_;
    double upper_;
};

/// Input files (JSON scenes, curve specs, ...) failed validation.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An internal invariant broke; indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace cpq
