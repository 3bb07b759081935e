#pragma once

// The exact double-integral form of the Casimir-Polder shift near a slab.
//
//   S_par  = 1/4 int_0^inf ds int_0^1 dt s^3/(s^2 t^2 + 1) (R_TM - t^2 R_TE) e^{-2 zeta s}
//   S_perp = 1/2 int_0^inf ds int_0^1 dt s^3/(s^2 t^2 + 1) (1 - t^2) R_TM   e^{-2 zeta s}
//
// with R_TE, R_TM from rtilde_pair(). Both are dimensionless functions of
// (zeta, lambda, n); W = 8 zeta^4 S, so that
//   delta E = -(1/2 pi^2) sum_j E_ji^3 (S_par |mu_par|^2 + S_perp |mu_perp|^2)
// and the W form assembled by assemble_shift() are the same number.

#include <cstddef>

#include "slabshift/core.hpp"

namespace slabshift {

struct QuadratureSpec {
  double rel_tol = 1e-8;
  double abs_tol = 1e-14;
  /// The outer s integral is cut at e^{-2 zeta s_max} = 10^{-s_cutoff_decades}.
  double s_cutoff_decades = 37.0;
  /// Panel budget per axis.
  std::size_t max_subdivisions = 2000;

  void validate() const;
};

struct IntegralValue {
  double value = 0.0;
  double err_est = 0.0;
};

struct SIntegrals {
  IntegralValue par;
  IntegralValue perp;
};

/// Below this zeta the evaluation still converges but the non-retarded image
/// series is the better tool; w_pair() attaches a warning.
inline constexpr double kSmallZetaWarning = 1e-6;

/// Both S integrals from one nested quadrature (they share every R evaluation).
/// Throws ConvergenceError when the panel budget runs out.
SIntegrals s_integrals(const ReducedParams& p, const QuadratureSpec& q = {});

IntegralValue s_parallel(const ReducedParams& p, const QuadratureSpec& q = {});
IntegralValue s_perp(const ReducedParams& p, const QuadratureSpec& q = {});

/// W_par = 8 zeta^4 S_par, W_z = 8 zeta^4 S_perp.
WPair w_pair(const ReducedParams& p, const QuadratureSpec& q = {});

/// Full shift of `atom` at distance Z from the surface of `slab`.
EnergyShift energy_shift(const AtomSpec& atom, const Slab& slab, double distance, const QuadratureSpec& q = {});

/// Same as energy_shift() but also returns the W pair of each transition.
struct ShiftReport {
  EnergyShift shift;
  std::vector<WPair> w;
};
ShiftReport energy_shift_report(const AtomSpec& atom, const Slab& slab, double distance,
                                const QuadratureSpec& q = {});

}  // namespace slabshift
