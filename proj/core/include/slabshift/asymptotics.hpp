#pragma once

// Limiting forms of the slab shift: dielectric half-space, thin slab in the
// retarded regime, the non-retarded (electrostatic) shift, the thin-slab
// non-retarded shift, and the magnetodielectric-plate formula used as a
// cross-check of the retarded thin-slab result.

#include <string_view>
#include <vector>

#include "slabshift/core.hpp"
#include "slabshift/electrostatics.hpp"
#include "slabshift/shift.hpp"

namespace slabshift {

enum class Regime { retarded, nonretarded, intermediate };

std::string_view to_string(Regime regime) noexcept;

/// Classification policy on 2 zeta = 2 Z E_ji (the photon round trip over the
/// atomic time scale). The thresholds are a convention, not physics.
struct RegimeThresholds {
  double retarded_min_two_zeta = 10.0;
  double nonretarded_max_two_zeta = 0.1;
};

struct RegimeReport {
  double two_zeta = 0.0;
  /// L / Z; +inf for a half-space.
  double lambda_over_zeta = 0.0;
  Regime regime = Regime::intermediate;
  RegimeThresholds thresholds;
};

RegimeReport classify_regime(const ReducedParams& p, const RegimeThresholds& thresholds = {});

/// A closed-form estimate together with the regime of each transition.
struct AsymptoticShift {
  EnergyShift shift;
  std::vector<RegimeReport> regimes;
};

/// S integrals with coth(Lambda) -> 1 (dielectric half-space).
SIntegrals halfspace_s(double zeta, double n, const QuadratureSpec& q = {});
WPair halfspace_w(double zeta, double n, const QuadratureSpec& q = {});
EnergyShift halfspace_shift(const AtomSpec& atom, double n, double distance, const QuadratureSpec& q = {});

/// Retarded thin-slab shift, valid for 2 Z E_ji >> 1 and Z >> L:
///   -(n^2-1) L / (160 pi^2 n^2 Z^5) sum_j [(5+9n^2)|mu_par|^2 + 2(4+5n^2)|mu_perp|^2] / E_ji
AsymptoticShift retarded_thin_shift(const AtomSpec& atom, const Slab& slab, double distance);

/// Plate formula with eps(0) = n^2, mu(0) = 1:
///   U = -alpha0/(160 pi^2) L/Z^5 [(14 eps^2 - 9)/eps - (6 mu^2 - 1)/mu]
double buhmann_u(double alpha0, double n, double thickness, double distance);

enum class NonretardedMethod { image_series, quadrature };

/// K(Z, L, beta) of image_series_kernel() by adaptive quadrature of the k integral.
IntegralValue nonretarded_kernel_quadrature(double distance, double thickness, double beta,
                                            const QuadratureSpec& q = {});

/// Delta E_es = -(1/16 pi) beta sum_j (2|mu_perp|^2 + |mu_par|^2) K(Z, L, beta).
EnergyShift nonretarded_shift(const AtomSpec& atom, const Slab& slab, double distance,
                              NonretardedMethod method = NonretardedMethod::image_series,
                              const QuadratureSpec& q = {}, const ImageSeriesSpec& series = {});

/// Thin slab, non-retarded: -3(n^4-1)/(256 pi n^2) L/Z^4 sum_j (2|mu_perp|^2 + |mu_par|^2).
AsymptoticShift nonretarded_thin_shift(const AtomSpec& atom, const Slab& slab, double distance);

}  // namespace slabshift
