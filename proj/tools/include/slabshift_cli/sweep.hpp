#pragma once

// Parameter sweeps of the W functions over one of (zeta, lambda, n), with the
// other two held at one or more fixed values. Grid points are evaluated by a
// worker pool; rows come back in grid order whatever the number of workers.

#include <cstddef>
#include <string>
#include <vector>

#include "slabshift/asymptotics.hpp"
#include "slabshift/shift.hpp"
#include "slabshift_cli/settings.hpp"
#include "slabshift_cli/table.hpp"

namespace slabshift::cli {

enum class Axis { zeta, lambda, n };
enum class Scale { linear, log };

std::string_view to_string(Axis axis) noexcept;

struct SweepSpec {
  Axis axis = Axis::zeta;
  double lo = 0.1;
  double hi = 10.0;
  std::size_t points = 2;
  Scale scale = Scale::linear;
  /// Fixed values of the two non-swept parameters (one curve per combination);
  /// the entry of the swept axis is ignored. lambda may be +inf (half-space).
  std::vector<double> zeta{1.0};
  std::vector<double> lambda{1.0};
  std::vector<double> n{2.0};
  QuadratureSpec quad;

  void validate() const;
  std::vector<double> grid() const;
};

SweepSpec sweep_spec_from(const Settings& s);

struct SweepRow {
  double axis_value = 0.0;
  double zeta = 0.0;
  double lambda = 0.0;
  double n = 0.0;
  double w_par = 0.0;
  double w_z = 0.0;
  double half_w_par = 0.0;
  double half_w_z = 0.0;
  double err_est = 0.0;
  Regime regime = Regime::intermediate;
  bool ok = true;
  std::string status = "ok";
};

struct SweepResult {
  std::vector<SweepRow> rows;
  bool all_ok() const noexcept;
};

/// jobs = 0 picks the hardware concurrency.
SweepResult run_sweep(const SweepSpec& spec, unsigned jobs);

Table sweep_table(const SweepSpec& spec, const SweepResult& result);

}  // namespace slabshift::cli
