#include "slabshift/shift.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "slabshift/errors.hpp"
#include "slabshift/quadrature.hpp"
#include "slabshift/reflection.hpp"

namespace slabshift {

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw DomainError("quadrature: tolerances must be > 0");
  if (!(s_cutoff_decades > 0.0)) throw DomainError("quadrature: s_cutoff_decades must be > 0");
  if (max_subdivisions < 2) throw DomainError("quadrature: max_subdivisions must be >= 2");
}

namespace {

// Share of the relative tolerance given to each inner t integral.
constexpr double kInnerShare = 0.1;

void sort_unique(std::vector<double>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Breakpoints for the t axis: the 1/(s^2 t^2 + 1) factor varies on the scale
// t ~ 1/s and the square root sqrt(1 + (n^2-1) t^2) on t ~ 1/sqrt(n^2-1).
std::vector<double> t_breaks(double s, double n) {
  std::vector<double> b{0.0, 1.0};
  if (s > 1.0) {
    for (double t = 1.0 / s; t < 1.0; t *= 8.0) b.push_back(t);
  }
  const double knee = 1.0 / std::sqrt(n * n - 1.0);
  if (knee < 1.0) b.push_back(knee);
  sort_unique(b);
  return b;
}

std::vector<double> s_breaks(const ReducedParams& p, double s_max) {
  std::vector<double> b{0.0, s_max};
  const double decay = 1.0 / (2.0 * p.zeta());
  for (double f : {0.25, 1.0, 3.0, 10.0, 30.0}) b.push_back(f * decay);
  b.push_back(1.0);
  if (std::isfinite(p.lambda()) && p.lambda() > 0.0) b.push_back(1.0 / p.lambda());
  std::erase_if(b, [&](double x) { return x < 0.0 || x > s_max; });
  sort_unique(b);
  return b;
}

}  // namespace

SIntegrals s_integrals(const ReducedParams& p, const QuadratureSpec& q) {
  q.validate();
  const double n = p.n();
  const double lambda = p.lambda();
  const double zeta = p.zeta();
  if (n == 1.0 || lambda == 0.0) return {};

  const quad::Tolerance inner_tol{q.rel_tol * kInnerShare, std::numeric_limits<double>::min(),
                                  q.max_subdivisions};
  auto outer = [&](double s) -> quad::Vec<4> {
    if (s <= 0.0) return {};
    const double s2 = s * s;
    auto inner = [&](double t) -> quad::Vec<2> {
      const RTildePair r = rtilde_pair(s, t, lambda, n);
      const double t2 = t * t;
      const double g = 1.0 / (s2 * t2 + 1.0);
      return {g * (r.tm - t2 * r.te), g * (1.0 - t2) * r.tm};
    };
    const std::vector<double> tb = t_breaks(s, n);
    const quad::Estimate<2> in = quad::adaptive<2>(inner, tb, inner_tol);
    const double w = s2 * s * std::exp(-2.0 * zeta * s);
    return {0.25 * w * in.value[0], 0.5 * w * in.value[1], 0.25 * w * in.error[0], 0.5 * w * in.error[1]};
  };

  const double s_max = q.s_cutoff_decades * std::numbers::ln10 / (2.0 * zeta);
  const std::vector<double> sb = s_breaks(p, s_max);
  const quad::Tolerance outer_tol{q.rel_tol * (0.9 - kInnerShare), q.abs_tol * (0.9 - kInnerShare), q.max_subdivisions};
  const quad::Estimate<4> out = quad::adaptive<4>(outer, sb, outer_tol, 2);

  SIntegrals result;
  result.par = {out.value[0], out.error[0] + out.value[2]};
  result.perp = {out.value[1], out.error[1] + out.value[3]};
  for (const IntegralValue* iv : {&result.par, &result.perp}) {
    if (!std::isfinite(iv->value) || iv->err_est > std::max(q.rel_tol * std::abs(iv->value), q.abs_tol)) {
      throw ConvergenceError("shift integrals did not converge at zeta=" + std::to_string(zeta) +
                                 " lambda=" + std::to_string(lambda) + " n=" + std::to_string(n),
                             iv->value, iv->err_est);
    }
  }
  return result;
}

IntegralValue s_parallel(const ReducedParams& p, const QuadratureSpec& q) { return s_integrals(p, q).par; }

IntegralValue s_perp(const ReducedParams& p, const QuadratureSpec& q) { return s_integrals(p, q).perp; }

WPair w_pair(const ReducedParams& p, const QuadratureSpec& q) {
  const SIntegrals s = s_integrals(p, q);
  const double z2 = p.zeta() * p.zeta();
  const double scale = 8.0 * z2 * z2;
  WPair w;
  w.w_par = scale * s.par.value;
  w.w_z = scale * s.perp.value;
  w.err_est = scale * std::max(s.par.err_est, s.perp.err_est);
  if (p.zeta() < kSmallZetaWarning) {
    w.warning = "zeta = " + std::to_string(p.zeta()) +
                " is deep in the non-retarded regime; prefer the image-series shift";
  }
  return w;
}

ShiftReport energy_shift_report(const AtomSpec& atom, const Slab& slab, double distance, const QuadratureSpec& q) {
  if (!(distance > 0.0)) throw DomainError("energy_shift: atom-surface distance must be > 0");
  ShiftReport report;
  report.w.reserve(atom.size());
  for (const Transition& tr : atom.transitions()) {
    report.w.push_back(w_pair(reduce(slab, tr, distance), q));
  }
  report.shift = assemble_shift(atom, distance, report.w);
  return report;
}

EnergyShift energy_shift(const AtomSpec& atom, const Slab& slab, double distance, const QuadratureSpec& q) {
  return energy_shift_report(atom, slab, distance, q).shift;
}

}  // namespace slabshift
