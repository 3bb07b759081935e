#include "slabshift/electrostatics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "slabshift/errors.hpp"

namespace slabshift {

void ImageSeriesSpec::validate() const {
  if (!(tail_tol > 0.0)) throw DomainError("image series: tail_tol must be > 0");
  if (max_terms == 0) throw DomainError("image series: max_terms must be >= 1");
}

double image_beta(double n) noexcept {
  const double eps = n * n;
  return (eps - 1.0) / (eps + 1.0);
}

namespace {

// 1/a^3 - 1/(a+L)^3 without cancellation.
double cube_gap(double a, double thickness) {
  const double b = a + thickness;
  return thickness * (a * a + a * b + b * b) / (a * a * a * b * b * b);
}

double inverse_distance(double rho, double dz) { return 1.0 / std::hypot(rho, dz); }

}  // namespace

double image_series_partial(double distance, double thickness, double beta, std::size_t terms) {
  const double beta2 = beta * beta;
  double weight = 1.0;
  double sum = 0.0;
  for (std::size_t m = 0; m < terms; ++m) {
    sum += weight * 0.25 * cube_gap(distance + static_cast<double>(m) * thickness, thickness);
    weight *= beta2;
  }
  return sum;
}

double image_series_kernel(double distance, double thickness, double beta, const ImageSeriesSpec& spec) {
  spec.validate();
  if (!(distance > 0.0)) throw DomainError("image series: distance must be > 0");
  if (!(thickness >= 0.0)) throw DomainError("image series: thickness must be >= 0");
  if (!(beta >= 0.0 && beta < 1.0)) throw DomainError("image series: beta must lie in [0, 1)");
  if (thickness == 0.0) return 0.0;
  if (std::isinf(thickness)) return 0.25 / (distance * distance * distance);

  const double beta2 = beta * beta;
  double weight = 1.0;
  double sum = 0.0;
  for (std::size_t m = 0; m < spec.max_terms; ++m) {
    sum += weight * 0.25 * cube_gap(distance + static_cast<double>(m) * thickness, thickness);
    weight *= beta2;
    // Brackets decrease in m, so the remaining terms are below a geometric series.
    const double next = 0.25 * cube_gap(distance + static_cast<double>(m + 1) * thickness, thickness);
    const double tail = weight / (1.0 - beta2) * next;
    if (tail <= spec.tail_tol * sum) return sum;
  }
  throw ConvergenceError("image series: max_terms exceeded", sum,
                         std::pow(beta2, static_cast<double>(spec.max_terms)) / (1.0 - beta2));
}

double phi_h(double rho, double z, double z_prime, const Slab& slab, const ImageSeriesSpec& spec) {
  spec.validate();
  const double thickness = slab.thickness();
  if (!(rho >= 0.0)) throw DomainError("phi_h: rho must be >= 0");
  if (!(z > 0.5 * thickness) || !(z_prime > 0.5 * thickness)) {
    throw DomainError("phi_h: both heights must lie outside the slab on the atom side");
  }
  const double beta = image_beta(slab.n());
  if (beta == 0.0) return 0.0;
  const double prefactor = -beta / (4.0 * std::numbers::pi);
  if (std::isinf(thickness)) {
    throw DomainError("phi_h: heights are measured from the slab centre, which needs a finite thickness");
  }
  const double d = z + z_prime - thickness;
  if (thickness == 0.0) return 0.0;

  const double beta2 = beta * beta;
  double weight = 1.0;
  double sum = 0.0;
  for (std::size_t m = 0; m < spec.max_terms; ++m) {
    const double x = d + 2.0 * static_cast<double>(m) * thickness;
    sum += weight * (inverse_distance(rho, x) - inverse_distance(rho, x + 2.0 * thickness));
    weight *= beta2;
    const double tail = weight / (1.0 - beta2) * inverse_distance(rho, x + 2.0 * thickness);
    if (tail <= spec.tail_tol * std::abs(sum)) return prefactor * sum;
  }
  throw ConvergenceError("phi_h: max_terms exceeded", prefactor * sum,
                         std::abs(prefactor) * std::pow(beta2, static_cast<double>(spec.max_terms)) / (1.0 - beta2));
}

EnergyShift image_series_shift(const AtomSpec& atom, const Slab& slab, double distance, const ImageSeriesSpec& spec) {
  if (!(distance > 0.0)) throw DomainError("image_series_shift: distance must be > 0");
  const double beta = image_beta(slab.n());
  EnergyShift out;
  out.per_transition.reserve(atom.size());
  const double kernel = beta == 0.0 ? 0.0 : image_series_kernel(distance, slab.thickness(), beta, spec);
  for (const Transition& tr : atom.transitions()) {
    const double term = -beta / (16.0 * std::numbers::pi) * (2.0 * tr.mu_perp_sq() + tr.mu_par_sq()) * kernel;
    out.per_transition.push_back(term);
    out.value += term;
  }
  return out;
}

}  // namespace slabshift
