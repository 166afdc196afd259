#pragma once

#include <stdexcept>
#include <string>

namespace gw {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A coefficient beyond a series truncation bound was requested or stored.
/// Beyond the bound a coefficient is unknown, not zero.
struct TruncationError : Error {
  using Error::Error;
};

/// invert_unit applied to a series that is not 1 + (positive-degree terms).
struct NonUnitError : Error {
  using Error::Error;
};

/// An order-by-order solve hit a degenerate linear probe: either inconsistent
/// (no solution) or underdetermined (any value works).
struct SolverError : Error {
  using Error::Error;
};

/// Series support violates the expected (d, k) shape.
struct ShapeError : Error {
  using Error::Error;
};

/// Two independent computation routes disagree.
struct RouteMismatchError : Error {
  RouteMismatchError(const std::string& msg, int degree)
      : Error(msg), degree(degree) {}
  int degree;
};

/// Malformed embedded table, data file, or cache.
struct DataError : Error {
  using Error::Error;
};

}  // namespace gw
