#pragma once

#include <stdexcept>
#include <string>

namespace lrb {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Non-square input, mismatched lengths, wrong shapes.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Argument outside its documented domain (bad rank, index out of range, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Rejection sampling ran out of attempts; carries the best values reached.
class GenerationError : public Error {
public:
    GenerationError(const std::string& msg, double last_cmin, double last_gap)
        : Error(msg), last_cmin(last_cmin), last_gap(last_gap) {}
    double last_cmin = 0.0;
    double last_gap = 0.0;
};

/// Subset enumeration would exceed the supported size.
class EnumerationLimitError : public Error {
public:
    using Error::Error;
};

/// Horizon too small for the requested algorithm.
class InsufficientHorizonError : public Error {
public:
    using Error::Error;
};

/// Too few data points for an aggregate report.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// Violated internal invariant (e.g. a cycle in an elimination chain).
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace lrb
