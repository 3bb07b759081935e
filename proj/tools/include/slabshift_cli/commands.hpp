#pragma once

// The subcommands of the slabshift tool as library calls. run_command() maps
// errors onto exit codes: 0 ok, 2 input error, 3 convergence failure,
// 4 partial sweep failure.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "slabshift/asymptotics.hpp"
#include "slabshift/shift.hpp"
#include "slabshift_cli/settings.hpp"
#include "slabshift_cli/table.hpp"

namespace slabshift::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitConvergence = 3;
inline constexpr int kExitPartialSweep = 4;

struct RunOptions {
  Format format = Format::csv;
  /// 0 = hardware concurrency.
  unsigned jobs = 0;
  /// Manifest timestamp; empty means the current time.
  std::string timestamp;
};

/// Jobs from the SLABSHIFT_JOBS environment variable, 0 when unset.
unsigned jobs_from_environment();

int run_command(std::string_view command, const Settings& settings, const RunOptions& options, std::ostream& out,
                std::ostream& err);

/// Dipole columns are echoed in the caller's units.
Table shift_table(const AtomSpec& atom, const Slab& slab, double distance, const ShiftReport& report,
                  units::System u = units::System::natural);

/// Thresholds on L/Z below which the thin-slab formulas, and above which the
/// half-space formula, are reported as applicable.
struct ApplicabilityPolicy {
  double thin_max_l_over_z = 0.1;
  double thick_min_l_over_z = 10.0;
};

struct AsymptoticRow {
  std::string formula;
  double value = 0.0;
  double rel_deviation = 0.0;
  bool applicable = false;
};

struct AsymptoticReport {
  double full = 0.0;
  /// Common regime of all transitions, or "mixed".
  std::string regime;
  std::vector<AsymptoticRow> rows;
};

AsymptoticReport asymptotic_report(const AtomSpec& atom, const Slab& slab, double distance,
                                   const QuadratureSpec& q = {}, const ApplicabilityPolicy& policy = {});
Table asymptotic_table(const AsymptoticReport& report);

}  // namespace slabshift::cli
