#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace slabshift {

/// Input outside the domain of an operation (non-positive distance, n < 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Request for a helper that only covers a subset of inputs (e.g. anisotropic atom
/// passed to the isotropic polarizability).
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluation at (or numerically on top of) a pole of a reflection coefficient.
class PoleError : public std::runtime_error {
 public:
  PoleError(const std::string& what, std::complex<double> k_z, double k_par)
      : std::runtime_error(what), k_z_(k_z), k_par_(k_par) {}

  std::complex<double> k_z() const noexcept { return k_z_; }
  double k_par() const noexcept { return k_par_; }

 private:
  std::complex<double> k_z_;
  double k_par_;
};

/// An iterative evaluation ran out of budget. Carries the best estimate so callers
/// can still report it.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_estimate, double error_bound)
      : std::runtime_error(what), best_(best_estimate), bound_(error_bound) {}

  double best_estimate() const noexcept { return best_; }
  double error_bound() const noexcept { return bound_; }

 private:
  double best_;
  double bound_;
};

}  // namespace slabshift
