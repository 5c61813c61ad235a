#pragma once

#include <stdexcept>
#include <string>

namespace norden {

/// Raised when an operation is called with arguments outside its contract
/// (bad slot, mismatched shapes, odd dimension, unknown check id, ...).
class ArgumentError : public std::invalid_argument {
 public:
  explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a computation cannot produce finite values (singular metric,
/// NaN/Inf produced by an operation).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a geometric precondition is not met, e.g. asking for the
/// torsion potential of a manifold outside the quasi-Kaehler class.
class GeometryError : public std::runtime_error {
 public:
  explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace norden
