#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sepout {

/// Base class for every error this library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violated a documented precondition (negative probability,
/// nonpositive mean, value outside [0,1], ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Quadrature refinement still moved by more than the requested tolerance
/// at the node-count cap. Reported instead of silently returning.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// A dependent interference group had neither a Monte Carlo configuration
/// nor a supplied partial outage.
class MissingOracle : public Error {
 public:
  using Error::Error;
};

/// The outage target is below the baseline outage: no secondary budget exists.
class InfeasibleBudget : public Error {
 public:
  using Error::Error;
};

/// eps_primary = 1: the primary link is always in outage and the budget
/// ratio is undefined.
class DegeneratePrimary : public Error {
 public:
  using Error::Error;
};

/// Scenario file violated the schema. `path()` names the offending key,
/// e.g. "groups[1].sources[0].mean_dbm".
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& message)
      : Error(path + ": " + message), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace sepout
