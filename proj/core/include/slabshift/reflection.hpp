#pragma once

// Single-interface and slab reflection/transmission amplitudes, in the physical
// wave-vector variables and in the (s, t) quadrature variables of the shift
// integrals.
//
// Convention: a wave e^{i k_z z} with the slab occupying |z| <= L/2. Complex
// square roots take the branch with non-negative real part.

#include <complex>
#include <string_view>

namespace slabshift {

using Complex = std::complex<double>;

enum class Polarization { te, tm };

std::string_view to_string(Polarization pol) noexcept;

/// k_zd = sqrt((n^2 - 1) k_par^2 + n^2 k_z^2)
Complex snell_kzd(double k_par, Complex k_z, double n);
/// k_z = sqrt(k_zd^2 - (n^2 - 1) k_par^2) / n
Complex snell_kz(double k_par, Complex k_zd, double n);

/// Transverse wave number with the matching normal wave numbers in vacuum and
/// dielectric, consistent through Snell's law.
struct WaveVectors {
  double k_par = 0.0;
  Complex k_z;
  Complex k_zd;

  static WaveVectors from_kz(double k_par, Complex k_z, double n);
  static WaveVectors from_kzd(double k_par, Complex k_zd, double n);
};

/// Single-interface Fresnel amplitude for a wave incident from vacuum.
Complex fresnel_r(Polarization pol, Complex k_z, Complex k_zd, double n);

/// 1 - r^2 e^{2 i k_zd L}; its zeros are the trapped-mode poles.
Complex slab_denominator(Polarization pol, Complex k_z, double k_par, double thickness, double n);

/// R = r (1 - e^{2 i k_zd L}) / (1 - r^2 e^{2 i k_zd L}) e^{-i k_z L}
Complex slab_R(Polarization pol, Complex k_z, double k_par, double thickness, double n);
/// T = (1 - r^2) / (1 - r^2 e^{2 i k_zd L}) e^{i (k_zd - k_z) L}
Complex slab_T(Polarization pol, Complex k_z, double k_par, double thickness, double n);

/// Reflection coefficients in the polar quadrature variables (s >= 0, t in [0,1])
/// with Lambda = lambda s sqrt(1 + (n^2 - 1) t^2). lambda = +inf gives the
/// half-space limit coth(Lambda) = 1.
struct RTildePair {
  double te;
  double tm;
};

RTildePair rtilde_pair(double s, double t, double lambda, double n) noexcept;
double rtilde(Polarization pol, double s, double t, double lambda, double n) noexcept;

/// Lambda coth(Lambda), continuous through Lambda = 0 and overflow-free.
double x_coth_x(double x) noexcept;

}  // namespace slabshift
