#pragma once

// Non-retarded limit as electrostatics: the slab is replaced by the image
// charges generated by repeated reflection between its two faces, with
// beta = (eps - 1)/(eps + 1) per reflection.

#include <cstddef>

#include "slabshift/core.hpp"

namespace slabshift {

struct ImageSeriesSpec {
  double tail_tol = 1e-14;
  std::size_t max_terms = 1'000'000;

  void validate() const;
};

/// (n^2 - 1)/(n^2 + 1)
double image_beta(double n) noexcept;

/// Harmonic part of the potential of a unit point charge at height z' seen at
/// height z (both measured from the slab centre, both > L/2), at transverse
/// separation rho:
///   Phi_H = -(beta/4pi) sum_m beta^{2m} [1/sqrt(rho^2 + (d + 2mL)^2) - 1/sqrt(rho^2 + (d + 2(m+1)L)^2)]
/// with d = z + z' - L.
double phi_h(double rho, double z, double z_prime, const Slab& slab, const ImageSeriesSpec& spec = {});

/// K(Z, L, beta) = int_0^inf dk k^2 e^{-2Zk} (1 - e^{-2kL}) / (1 - beta^2 e^{-2kL})
///               = sum_m beta^{2m} [1/(Z + mL)^3 - 1/(Z + (m+1)L)^3] / 4
/// summed until the geometric tail bound drops below tail_tol times the partial sum.
double image_series_kernel(double distance, double thickness, double beta, const ImageSeriesSpec& spec = {});

/// The first `terms` terms of the series in image_series_kernel().
double image_series_partial(double distance, double thickness, double beta, std::size_t terms);

/// Delta E_es = -(beta/16 pi) sum_j (2|mu_perp|^2 + |mu_par|^2) K(Z, L, beta).
EnergyShift image_series_shift(const AtomSpec& atom, const Slab& slab, double distance,
                               const ImageSeriesSpec& spec = {});

}  // namespace slabshift
