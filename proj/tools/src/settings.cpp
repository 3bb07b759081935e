#include "slabshift_cli/settings.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

namespace slabshift::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string transition_key(std::size_t i, std::string_view field) {
  return "atom.transitions[" + std::to_string(i) + "]." + std::string(field);
}

}  // namespace

Settings Settings::parse(std::istream& in, std::string_view source) {
  Settings s;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw InputError(std::string(source) + ":" + std::to_string(number) + ": expected 'key = value'");
    }
    const std::string_view key = trim(view.substr(0, eq));
    const std::string_view value = trim(view.substr(eq + 1));
    if (key.empty()) throw InputError(std::string(source) + ":" + std::to_string(number) + ": empty key");
    s.set(std::string(key), std::string(value));
  }
  return s;
}

Settings Settings::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file '" + path + "'");
  return parse(in, path);
}

void Settings::set(std::string key, std::string value) { entries_[std::move(key)] = std::move(value); }

void Settings::merge(const Settings& overrides) {
  for (const auto& [k, v] : overrides.entries_) entries_[k] = v;
}

bool Settings::has(std::string_view key) const { return entries_.find(key) != entries_.end(); }

std::optional<std::string> Settings::get(std::string_view key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

const std::string& Settings::require(std::string_view key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) throw InputError("missing field '" + std::string(key) + "'");
  return it->second;
}

double parse_number(std::string_view text, std::string_view field) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || std::isnan(value)) {
    throw InputError("field '" + std::string(field) + "': '" + std::string(text) + "' is not a number");
  }
  return value;
}

double Settings::number(std::string_view key) const { return parse_number(require(key), key); }

double Settings::number_or(std::string_view key, double fallback) const {
  return has(key) ? number(key) : fallback;
}

std::vector<double> Settings::numbers(std::string_view key) const {
  std::vector<double> out;
  std::stringstream ss(require(key));
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(item, key));
  if (out.empty()) throw InputError("field '" + std::string(key) + "' is empty");
  return out;
}

std::size_t Settings::count_or(std::string_view key, std::size_t fallback) const {
  if (!has(key)) return fallback;
  const double v = number(key);
  if (!(v >= 0.0) || v != std::floor(v) || v > 1e12) {
    throw InputError("field '" + std::string(key) + "' must be a non-negative integer");
  }
  return static_cast<std::size_t>(v);
}

units::System units_from(const Settings& s) {
  const std::string name = s.get("units").value_or("natural");
  if (name == "natural") return units::System::natural;
  if (name == "eV-nm") return units::System::ev_nm;
  throw InputError("field 'units': expected 'natural' or 'eV-nm', got '" + name + "'");
}

namespace {

double length_in(double value, units::System u) {
  return u == units::System::ev_nm && std::isfinite(value) ? units::length_from_nm(value) : value;
}

double dipole_in(double value, units::System u) {
  return u == units::System::ev_nm ? units::dipole_sq_from_e_nm(value) : value;
}

}  // namespace

Slab slab_from(const Settings& s, units::System u) {
  return Slab(s.number("slab.n"), length_in(s.number("slab.L"), u));
}

AtomSpec atom_from(const Settings& s, units::System u) {
  std::size_t count = 0;
  constexpr std::string_view prefix = "atom.transitions[";
  for (const auto& [key, value] : s.entries()) {
    if (!key.starts_with(prefix)) continue;
    const auto close = key.find(']', prefix.size());
    if (close == std::string::npos) throw InputError("malformed key '" + key + "'");
    const std::string index = key.substr(prefix.size(), close - prefix.size());
    std::size_t i = 0;
    const auto [ptr, ec] = std::from_chars(index.data(), index.data() + index.size(), i);
    if (ec != std::errc() || ptr != index.data() + index.size()) throw InputError("malformed key '" + key + "'");
    count = std::max(count, i + 1);
  }
  if (count == 0) s.require(transition_key(0, "E"));
  std::vector<Transition> transitions;
  for (std::size_t i = 0; i < count; ++i) {
    const double e = s.number(transition_key(i, "E"));
    const double par = s.number(transition_key(i, "mu_par_sq"));
    const double perp = s.number(transition_key(i, "mu_perp_sq"));
    transitions.emplace_back(e, dipole_in(par, u), dipole_in(perp, u));
  }
  return AtomSpec(std::move(transitions));
}

double distance_from(const Settings& s, units::System u) { return length_in(s.number("geometry.Z"), u); }

QuadratureSpec quad_from(const Settings& s) {
  QuadratureSpec q;
  q.rel_tol = s.number_or("quad.rel_tol", q.rel_tol);
  q.abs_tol = s.number_or("quad.abs_tol", q.abs_tol);
  q.s_cutoff_decades = s.number_or("quad.s_cutoff_decades", q.s_cutoff_decades);
  q.max_subdivisions = s.count_or("quad.max_subdivisions", q.max_subdivisions);
  return q;
}

}  // namespace slabshift::cli
