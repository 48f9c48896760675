#pragma once

#include <stdexcept>
#include <string>

namespace hypertile {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Side/angle data whose turtle walk does not return to its start.
class ClosureError : public Error {
 public:
  ClosureError(const std::string& what, double position_residual,
               double heading_residual)
      : Error(what),
        position_residual_(position_residual),
        heading_residual_(heading_residual) {}

  double position_residual() const { return position_residual_; }
  double heading_residual() const { return heading_residual_; }

 private:
  double position_residual_;
  double heading_residual_;
};

/// A result that would self-intersect.
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// Root finding or sampling failed to produce a construction.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Caller violated a stated precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Reduction would leave fewer than three vertices.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent external data (JSON, tiling graphs).
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypertile
