#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace sgswe {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Failure classes that end a simulation. Each maps to one CLI exit code.
enum class FailureKind {
  Hyperbolicity,  // P(h) lost positive definiteness or a node height went non-positive
  BlowUp,         // non-finite values in the state
  StepUnderflow,  // adaptive time step collapsed
  Numerical,      // eigensolver did not converge
};

class SolverError : public std::runtime_error {
 public:
  SolverError(FailureKind kind, const std::string& what, long cell = -1,
              double time = std::numeric_limits<double>::quiet_NaN())
      : std::runtime_error(what), kind_(kind), cell_(cell), time_(time) {}

  FailureKind kind() const noexcept { return kind_; }
  long cell() const noexcept { return cell_; }
  double time() const noexcept { return time_; }

  SolverError at_cell(long cell) const { return SolverError(kind_, what(), cell, time_); }
  SolverError at_time(double time) const { return SolverError(kind_, what(), cell_, time); }

 private:
  FailureKind kind_;
  long cell_;
  double time_;
};

/// Invalid user configuration; `field` names the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::runtime_error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace sgswe
