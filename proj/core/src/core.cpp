#include "slabshift/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "slabshift/errors.hpp"

namespace slabshift {

Slab::Slab(double n, double thickness) : n_(n), thickness_(thickness) {
  if (!(n >= 1.0) || std::isinf(n)) throw DomainError("slab: refractive index must be finite and >= 1");
  if (!(thickness >= 0.0)) throw DomainError("slab: thickness must be >= 0");
}

bool Slab::is_half_space() const noexcept { return std::isinf(thickness_); }

Transition::Transition(double energy, double mu_par_sq, double mu_perp_sq)
    : energy_(energy), mu_par_sq_(mu_par_sq), mu_perp_sq_(mu_perp_sq) {
  if (!(energy > 0.0) || std::isinf(energy)) throw DomainError("transition: energy must be finite and > 0");
  if (!(mu_par_sq >= 0.0) || !(mu_perp_sq >= 0.0)) {
    throw DomainError("transition: dipole-moment squares must be >= 0");
  }
  if (mu_par_sq == 0.0 && mu_perp_sq == 0.0) {
    throw DomainError("transition: dipole-moment squares must not both vanish");
  }
}

AtomSpec::AtomSpec(std::vector<Transition> transitions) : transitions_(std::move(transitions)) {
  if (transitions_.empty()) throw DomainError("atom: at least one transition is required");
}

ReducedParams::ReducedParams(double zeta, double lambda, double n) : zeta_(zeta), lambda_(lambda), n_(n) {
  if (!(zeta > 0.0) || std::isinf(zeta)) throw DomainError("reduced parameters: zeta must be finite and > 0");
  if (!(lambda >= 0.0)) throw DomainError("reduced parameters: lambda must be >= 0");
  if (!(n >= 1.0) || std::isinf(n)) throw DomainError("reduced parameters: n must be finite and >= 1");
}

ReducedParams reduce(const Slab& slab, const Transition& transition, double distance) {
  if (!(distance > 0.0)) throw DomainError("reduce: atom-surface distance must be > 0");
  const double e = transition.energy();
  return ReducedParams(distance * e, slab.thickness() * e, slab.n());
}

EnergyShift assemble_shift(const AtomSpec& atom, double distance, std::span<const WPair> w) {
  if (w.size() != atom.size()) {
    throw DomainError("assemble_shift: expected " + std::to_string(atom.size()) + " W pairs, got " +
                      std::to_string(w.size()));
  }
  if (!(distance > 0.0)) throw DomainError("assemble_shift: atom-surface distance must be > 0");
  constexpr double pi = std::numbers::pi;
  const double z4 = distance * distance * distance * distance;
  EnergyShift out;
  out.per_transition.reserve(atom.size());
  for (std::size_t j = 0; j < atom.size(); ++j) {
    const Transition& tr = atom.transitions()[j];
    const double bracket = w[j].w_par * tr.mu_par_sq() + w[j].w_z * tr.mu_perp_sq();
    const double term = -bracket / (16.0 * pi * pi * tr.energy() * z4);
    out.per_transition.push_back(term);
    out.value += term;
  }
  return out;
}

double dipole_sq_from_momentum(double p_sq, double energy, double alpha_fs, double mass) {
  if (!(energy > 0.0)) throw DomainError("dipole_sq_from_momentum: energy must be > 0");
  if (!(mass > 0.0)) throw DomainError("dipole_sq_from_momentum: mass must be > 0");
  return 4.0 * std::numbers::pi * alpha_fs * p_sq / (mass * mass * energy * energy);
}

double momentum_sq_from_dipole(double mu_sq, double energy, double alpha_fs, double mass) {
  if (!(energy > 0.0)) throw DomainError("momentum_sq_from_dipole: energy must be > 0");
  if (!(mass > 0.0)) throw DomainError("momentum_sq_from_dipole: mass must be > 0");
  if (!(alpha_fs > 0.0)) throw DomainError("momentum_sq_from_dipole: alpha must be > 0");
  return mu_sq * mass * mass * energy * energy / (4.0 * std::numbers::pi * alpha_fs);
}

bool is_isotropic(const Transition& transition, double rel_tol) {
  const double par = transition.mu_par_sq();
  const double twice_perp = 2.0 * transition.mu_perp_sq();
  return std::abs(par - twice_perp) <= rel_tol * std::max(par, twice_perp);
}

double static_polarizability(const AtomSpec& atom) {
  double alpha = 0.0;
  for (const Transition& tr : atom.transitions()) {
    if (!is_isotropic(tr)) {
      throw UnsupportedError("static_polarizability: requires |mu_par|^2 = 2 |mu_perp|^2 for every transition");
    }
    alpha += 2.0 * tr.mu_perp_sq() / tr.energy();
  }
  return alpha;
}

}  // namespace slabshift
