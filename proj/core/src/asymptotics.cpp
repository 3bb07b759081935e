#include "slabshift/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <limits>
#include <numbers>
#include <vector>

#include "slabshift/errors.hpp"
#include "slabshift/quadrature.hpp"

namespace slabshift {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

std::vector<RegimeReport> regimes_of(const AtomSpec& atom, const Slab& slab, double distance) {
  std::vector<RegimeReport> out;
  out.reserve(atom.size());
  for (const Transition& tr : atom.transitions()) out.push_back(classify_regime(reduce(slab, tr, distance)));
  return out;
}

void require_distance(double distance, const char* who) {
  if (!(distance > 0.0)) throw DomainError(std::string(who) + ": atom-surface distance must be > 0");
}

}  // namespace

std::string_view to_string(Regime regime) noexcept {
  switch (regime) {
    case Regime::retarded:
      return "retarded";
    case Regime::nonretarded:
      return "non-retarded";
    case Regime::intermediate:
      break;
  }
  return "intermediate";
}

RegimeReport classify_regime(const ReducedParams& p, const RegimeThresholds& thresholds) {
  RegimeReport r;
  r.two_zeta = 2.0 * p.zeta();
  r.lambda_over_zeta = p.lambda() / p.zeta();
  r.thresholds = thresholds;
  if (r.two_zeta >= thresholds.retarded_min_two_zeta) {
    r.regime = Regime::retarded;
  } else if (r.two_zeta <= thresholds.nonretarded_max_two_zeta) {
    r.regime = Regime::nonretarded;
  } else {
    r.regime = Regime::intermediate;
  }
  return r;
}

SIntegrals halfspace_s(double zeta, double n, const QuadratureSpec& q) {
  return s_integrals(ReducedParams(zeta, kInf, n), q);
}

WPair halfspace_w(double zeta, double n, const QuadratureSpec& q) { return w_pair(ReducedParams(zeta, kInf, n), q); }

EnergyShift halfspace_shift(const AtomSpec& atom, double n, double distance, const QuadratureSpec& q) {
  return energy_shift(atom, Slab(n, kInf), distance, q);
}

AsymptoticShift retarded_thin_shift(const AtomSpec& atom, const Slab& slab, double distance) {
  require_distance(distance, "retarded_thin_shift");
  const double n2 = slab.n() * slab.n();
  const double z5 = std::pow(distance, 5);
  const double prefactor = -(n2 - 1.0) * slab.thickness() / (160.0 * kPi * kPi * n2 * z5);
  AsymptoticShift out;
  out.shift.per_transition.reserve(atom.size());
  for (const Transition& tr : atom.transitions()) {
    const double bracket = (5.0 + 9.0 * n2) * tr.mu_par_sq() + 2.0 * (4.0 + 5.0 * n2) * tr.mu_perp_sq();
    const double term = n2 == 1.0 ? 0.0 : prefactor * bracket / tr.energy();
    out.shift.per_transition.push_back(term);
    out.shift.value += term;
  }
  out.regimes = regimes_of(atom, slab, distance);
  return out;
}

double buhmann_u(double alpha0, double n, double thickness, double distance) {
  if (!(distance > 0.0)) throw DomainError("buhmann_u: distance must be > 0");
  if (!(thickness >= 0.0)) throw DomainError("buhmann_u: thickness must be >= 0");
  if (!(n >= 1.0)) throw DomainError("buhmann_u: n must be >= 1");
  const double eps = n * n;
  const double mu = 1.0;
  const double bracket = (14.0 * eps * eps - 9.0) / eps - (6.0 * mu * mu - 1.0) / mu;
  return -alpha0 / (160.0 * kPi * kPi) * thickness / std::pow(distance, 5) * bracket;
}

IntegralValue nonretarded_kernel_quadrature(double distance, double thickness, double beta, const QuadratureSpec& q) {
  q.validate();
  require_distance(distance, "nonretarded_kernel_quadrature");
  if (!(thickness >= 0.0)) throw DomainError("nonretarded_kernel_quadrature: thickness must be >= 0");
  if (thickness == 0.0) return {};
  // x = 2 Z k turns the weight into x^2 e^{-x}; ratio = L / Z.
  const double ratio = thickness / distance;
  const double beta2 = beta * beta;
  auto f = [&](double x) -> quad::Vec<1> {
    if (std::isinf(ratio)) return {x * x * std::exp(-x)};
    const double e = std::exp(-x * ratio);
    return {x * x * std::exp(-x) * -std::expm1(-x * ratio) / (1.0 - beta2 * e)};
  };
  const double x_max = q.s_cutoff_decades * std::numbers::ln10 + 10.0;
  std::vector<double> breaks{0.0, 1.0, 2.0, 8.0, x_max};
  if (std::isfinite(ratio) && 1.0 / ratio < x_max) breaks.push_back(1.0 / ratio);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  const quad::Estimate<1> est = quad::adaptive<1>(f, breaks, {q.rel_tol, q.abs_tol, q.max_subdivisions});
  const double scale = 1.0 / (8.0 * distance * distance * distance);
  if (!est.converged) {
    throw ConvergenceError("non-retarded kernel quadrature did not converge", scale * est.value[0],
                           scale * est.error[0]);
  }
  return {scale * est.value[0], scale * est.error[0]};
}

EnergyShift nonretarded_shift(const AtomSpec& atom, const Slab& slab, double distance, NonretardedMethod method,
                              const QuadratureSpec& q, const ImageSeriesSpec& series) {
  require_distance(distance, "nonretarded_shift");
  if (method == NonretardedMethod::image_series) return image_series_shift(atom, slab, distance, series);

  const double beta = image_beta(slab.n());
  const double kernel = beta == 0.0 ? 0.0 : nonretarded_kernel_quadrature(distance, slab.thickness(), beta, q).value;
  EnergyShift out;
  for (const Transition& tr : atom.transitions()) {
    const double term = -beta / (16.0 * kPi) * (2.0 * tr.mu_perp_sq() + tr.mu_par_sq()) * kernel;
    out.per_transition.push_back(term);
    out.value += term;
  }
  return out;
}

AsymptoticShift nonretarded_thin_shift(const AtomSpec& atom, const Slab& slab, double distance) {
  require_distance(distance, "nonretarded_thin_shift");
  const double n2 = slab.n() * slab.n();
  const double prefactor =
      -3.0 * (n2 * n2 - 1.0) / (256.0 * kPi * n2) * slab.thickness() / std::pow(distance, 4);
  AsymptoticShift out;
  for (const Transition& tr : atom.transitions()) {
    const double term = n2 == 1.0 ? 0.0 : prefactor * (2.0 * tr.mu_perp_sq() + tr.mu_par_sq());
    out.shift.per_transition.push_back(term);
    out.shift.value += term;
  }
  out.regimes = regimes_of(atom, slab, distance);
  return out;
}

}  // namespace slabshift
