#pragma once

// Flat key-value configuration: one "key = value" per line, '#' starts a
// comment. Recognized keys:
//
//   units                        natural | eV-nm
//   slab.n, slab.L               refractive index, thickness ("inf" = half-space)
//   geometry.Z                   atom-surface distance
//   atom.transitions[i].E        transition energy
//   atom.transitions[i].mu_par_sq, atom.transitions[i].mu_perp_sq
//   quad.rel_tol, quad.abs_tol, quad.s_cutoff_decades, quad.max_subdivisions
//   wfun.zeta, wfun.lambda
//   sweep.axis (zeta|lambda|n), sweep.lo, sweep.hi, sweep.points, sweep.scale (linear|log),
//   sweep.zeta, sweep.lambda      fixed values, comma-separated lists allowed
//   modes.k_par
//
// With units = eV-nm, energies are in eV, lengths in nm, wave numbers in 1/nm
// and dipole-moment squares in (e nm)^2.

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "slabshift/core.hpp"
#include "slabshift/shift.hpp"
#include "slabshift/units.hpp"

namespace slabshift::cli {

/// Invalid or missing user input (exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Settings {
 public:
  using Map = std::map<std::string, std::string, std::less<>>;

  static Settings parse(std::istream& in, std::string_view source);
  static Settings load(const std::string& path);

  void set(std::string key, std::string value);
  /// Entries of `overrides` replace ours.
  void merge(const Settings& overrides);

  bool has(std::string_view key) const;
  std::optional<std::string> get(std::string_view key) const;
  /// Throws InputError naming the field when absent.
  const std::string& require(std::string_view key) const;
  double number(std::string_view key) const;
  double number_or(std::string_view key, double fallback) const;
  std::vector<double> numbers(std::string_view key) const;
  std::size_t count_or(std::string_view key, std::size_t fallback) const;

  const Map& entries() const noexcept { return entries_; }

 private:
  Map entries_;
};

double parse_number(std::string_view text, std::string_view field);

units::System units_from(const Settings& s);
Slab slab_from(const Settings& s, units::System u);
AtomSpec atom_from(const Settings& s, units::System u);
double distance_from(const Settings& s, units::System u);
QuadratureSpec quad_from(const Settings& s);

}  // namespace slabshift::cli
