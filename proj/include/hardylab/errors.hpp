#pragma once

#include <stdexcept>
#include <string>

namespace hardylab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A grid or truncation order violates a size precondition (e.g. M < 2N+1).
class GridError : public Error {
public:
    using Error::Error;
};

/// Point evaluation or sampling requested outside the open unit disk.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Matrix/vector length mismatch.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A numerical computation cannot produce a trustworthy result
/// (non-real log-modulus, overflow, recombination failure, ...).
class NumericalError : public Error {
public:
    using Error::Error;
};

/// The symbol b is an extreme point of the unit ball of H-infinity:
/// log(1 - |b|^2) is not integrable on the circle, so no Pythagorean mate exists.
class ExtremePointError : public Error {
public:
    explicit ExtremePointError(double margin)
        : Error("symbol is extreme: integral of log(1-|b|^2) is below the extremality threshold"),
          margin_(margin) {}
    double margin() const noexcept { return margin_; }

private:
    double margin_;
};

} // namespace hardylab
