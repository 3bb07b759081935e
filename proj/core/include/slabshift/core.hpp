#pragma once

// Domain types shared by every module, in natural units (hbar = c = eps0 = 1):
// energies and inverse lengths share one unit, dipole-moment squares carry
// whatever unit the caller uses and come back out linearly in the shift.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace slabshift {

/// Non-dispersive dielectric slab of refractive index n and thickness L.
/// An infinite thickness is accepted and denotes a dielectric half-space.
class Slab {
 public:
  Slab(double n, double thickness);

  double n() const noexcept { return n_; }
  double thickness() const noexcept { return thickness_; }
  double permittivity() const noexcept { return n_ * n_; }
  bool is_half_space() const noexcept;

 private:
  double n_;
  double thickness_;
};

/// One dipole transition i -> j of the ground-state atom.
class Transition {
 public:
  Transition(double energy, double mu_par_sq, double mu_perp_sq);

  /// E_ji > 0.
  double energy() const noexcept { return energy_; }
  /// |mu_par|^2 = |<j|mu_x|i>|^2 + |<j|mu_y|i>|^2.
  double mu_par_sq() const noexcept { return mu_par_sq_; }
  /// |mu_perp|^2 = |<j|mu_z|i>|^2.
  double mu_perp_sq() const noexcept { return mu_perp_sq_; }

 private:
  double energy_;
  double mu_par_sq_;
  double mu_perp_sq_;
};

class AtomSpec {
 public:
  explicit AtomSpec(std::vector<Transition> transitions);

  std::span<const Transition> transitions() const noexcept { return transitions_; }
  std::size_t size() const noexcept { return transitions_.size(); }

 private:
  std::vector<Transition> transitions_;
};

/// The dimensionless triple every kernel consumes: zeta = Z E_ji, lambda = L E_ji, n.
/// lambda = +inf selects the half-space reflection coefficients.
class ReducedParams {
 public:
  ReducedParams(double zeta, double lambda, double n);

  double zeta() const noexcept { return zeta_; }
  double lambda() const noexcept { return lambda_; }
  double n() const noexcept { return n_; }

 private:
  double zeta_;
  double lambda_;
  double n_;
};

struct EnergyShift {
  double value = 0.0;
  std::vector<double> per_transition;
};

/// Dimensionless shift functions, W = 1 for a perfect mirror in the retarded limit.
struct WPair {
  double w_par = 0.0;
  double w_z = 0.0;
  /// Quadrature error bound on either entry.
  double err_est = 0.0;
  /// Non-empty when the evaluation is outside its comfortable range.
  std::string warning;
};

ReducedParams reduce(const Slab& slab, const Transition& transition, double distance);

/// delta E = -(1/4pi) sum_j (W_par |mu_par|^2 + W_z |mu_perp|^2) / (4 pi E_ji Z^4).
EnergyShift assemble_shift(const AtomSpec& atom, double distance, std::span<const WPair> w);

/// |mu_sigma|^2 = 4 pi alpha |p_sigma|^2 / (m^2 E_ji^2).
double dipole_sq_from_momentum(double p_sq, double energy, double alpha_fs, double mass);
double momentum_sq_from_dipole(double mu_sq, double energy, double alpha_fs, double mass);

/// alpha(0) = 2 sum_j |mu_nu|^2 / E_ji for an isotropic atom (|mu_par|^2 = 2 |mu_perp|^2).
/// Throws UnsupportedError otherwise.
double static_polarizability(const AtomSpec& atom);

bool is_isotropic(const Transition& transition, double rel_tol = 1e-12);

}  // namespace slabshift
