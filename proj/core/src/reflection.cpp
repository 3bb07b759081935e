#include "slabshift/reflection.hpp"

#include <cmath>
#include <limits>

#include "slabshift/errors.hpp"

namespace slabshift {

namespace {

constexpr Complex kI{0.0, 1.0};
// |1 - r^2 e^{2 i k_zd L}| is O(1) away from poles; below this it is treated as
// sitting on one (trapped-mode roots are located to ~1e-12 relative).
constexpr double kPoleTolerance = 1e-10;

Complex principal_sqrt(Complex z) {
  Complex r = std::sqrt(z);
  if (r.real() < 0.0) r = -r;
  // sqrt of a negative real with a -0 imaginary part lands on -i; pick +i so that
  // evanescent waves decay as e^{-kappa z}.
  if (r.real() == 0.0 && r.imag() < 0.0) r = -r;
  return r;
}

}  // namespace

std::string_view to_string(Polarization pol) noexcept {
  return pol == Polarization::te ? "TE" : "TM";
}

Complex snell_kzd(double k_par, Complex k_z, double n) {
  const double n2 = n * n;
  return principal_sqrt((n2 - 1.0) * k_par * k_par + n2 * k_z * k_z);
}

Complex snell_kz(double k_par, Complex k_zd, double n) {
  const double n2 = n * n;
  return principal_sqrt(k_zd * k_zd - (n2 - 1.0) * k_par * k_par) / n;
}

WaveVectors WaveVectors::from_kz(double k_par, Complex k_z, double n) {
  return {k_par, k_z, snell_kzd(k_par, k_z, n)};
}

WaveVectors WaveVectors::from_kzd(double k_par, Complex k_zd, double n) {
  return {k_par, snell_kz(k_par, k_zd, n), k_zd};
}

Complex fresnel_r(Polarization pol, Complex k_z, Complex k_zd, double n) {
  const Complex a = pol == Polarization::te ? k_z : n * n * k_z;
  const Complex den = a + k_zd;
  if (std::abs(den) <= 1e-14 * (std::abs(a) + std::abs(k_zd))) {
    throw PoleError("fresnel_r: vanishing denominator", k_z, std::numeric_limits<double>::quiet_NaN());
  }
  return (a - k_zd) / den;
}

Complex slab_denominator(Polarization pol, Complex k_z, double k_par, double thickness, double n) {
  const Complex k_zd = snell_kzd(k_par, k_z, n);
  const Complex r = fresnel_r(pol, k_z, k_zd, n);
  return 1.0 - r * r * std::exp(2.0 * kI * k_zd * thickness);
}

namespace {

struct SlabParts {
  Complex r;
  Complex k_zd;
  Complex phase;  // e^{2 i k_zd L}
  Complex den;
};

SlabParts slab_parts(Polarization pol, Complex k_z, double k_par, double thickness, double n) {
  if (!(n >= 1.0)) throw DomainError("slab coefficients: n must be >= 1");
  if (!(thickness >= 0.0)) throw DomainError("slab coefficients: thickness must be >= 0");
  SlabParts p;
  p.k_zd = snell_kzd(k_par, k_z, n);
  p.r = fresnel_r(pol, k_z, p.k_zd, n);
  p.phase = std::exp(2.0 * kI * p.k_zd * thickness);
  p.den = 1.0 - p.r * p.r * p.phase;
  if (std::abs(p.den) < kPoleTolerance) {
    throw PoleError("slab coefficient evaluated at a trapped-mode pole", k_z, k_par);
  }
  return p;
}

}  // namespace

Complex slab_R(Polarization pol, Complex k_z, double k_par, double thickness, double n) {
  const SlabParts p = slab_parts(pol, k_z, k_par, thickness, n);
  return p.r * (1.0 - p.phase) / p.den * std::exp(-kI * k_z * thickness);
}

Complex slab_T(Polarization pol, Complex k_z, double k_par, double thickness, double n) {
  const SlabParts p = slab_parts(pol, k_z, k_par, thickness, n);
  return (1.0 - p.r * p.r) / p.den * std::exp(kI * (p.k_zd - k_z) * thickness);
}

double x_coth_x(double x) noexcept {
  const double ax = std::abs(x);
  if (ax < 1e-4) {
    const double x2 = x * x;
    return 1.0 + x2 / 3.0 - x2 * x2 / 45.0;
  }
  if (ax > 20.0) {
    const double e = std::exp(-2.0 * ax);
    return ax * (1.0 + 2.0 * e / (1.0 - e));
  }
  return x / std::tanh(x);
}

RTildePair rtilde_pair(double s, double t, double lambda, double n) noexcept {
  const double a = n * n - 1.0;
  if (a == 0.0) return {0.0, 0.0};
  const double n2 = n * n;
  const double at2 = a * t * t;
  const double root = std::sqrt(1.0 + at2);
  // n^4 - 1 - (n^2 - 1) t^2, factored so that it stays accurate as n -> 1.
  const double tm_num = a * (n2 + 1.0 - t * t);
  const double te_num = -at2;

  if (std::isinf(lambda) || std::isinf(lambda * s * root)) {
    return {te_num / (2.0 + at2 + 2.0 * root), tm_num / (n2 * n2 + 1.0 + at2 + 2.0 * n2 * root)};
  }
  const double big_lambda = lambda * s * root;
  if (big_lambda == 0.0) return {0.0, 0.0};
  // Multiply through by Lambda: Lambda coth(Lambda) is finite at 0 and never overflows.
  const double xc = x_coth_x(big_lambda);
  return {te_num * big_lambda / ((2.0 + at2) * big_lambda + 2.0 * root * xc),
          tm_num * big_lambda / ((n2 * n2 + 1.0 + at2) * big_lambda + 2.0 * n2 * root * xc)};
}

double rtilde(Polarization pol, double s, double t, double lambda, double n) noexcept {
  const RTildePair r = rtilde_pair(s, t, lambda, n);
  return pol == Polarization::te ? r.te : r.tm;
}

}  // namespace slabshift
