#include "slabshift_cli/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "slabshift/errors.hpp"

namespace slabshift::cli {

std::string_view to_string(Axis axis) noexcept {
  switch (axis) {
    case Axis::zeta:
      return "zeta";
    case Axis::lambda:
      return "lambda";
    case Axis::n:
      break;
  }
  return "n";
}

void SweepSpec::validate() const {
  if (!(lo < hi)) throw InputError("sweep: lo must be < hi");
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw InputError("sweep: lo and hi must be finite");
  if (points < 2) throw InputError("sweep: points must be >= 2");
  if (scale == Scale::log && !(lo > 0.0)) throw InputError("sweep: a log scale needs lo > 0");
  const double axis_min = axis == Axis::zeta ? 0.0 : axis == Axis::lambda ? 0.0 : 1.0;
  if (axis == Axis::zeta ? !(lo > axis_min) : !(lo >= axis_min)) {
    throw InputError("sweep: range lies outside the domain of " + std::string(to_string(axis)));
  }
  if (axis != Axis::zeta) {
    for (double z : zeta) {
      if (!(z > 0.0) || !std::isfinite(z)) throw InputError("sweep: fixed zeta must be finite and > 0");
    }
  }
  if (axis != Axis::lambda) {
    for (double l : lambda) {
      if (!(l >= 0.0)) throw InputError("sweep: fixed lambda must be >= 0");
    }
  }
  if (axis != Axis::n) {
    for (double v : n) {
      if (!(v >= 1.0) || !std::isfinite(v)) throw InputError("sweep: fixed n must be finite and >= 1");
    }
  }
  quad.validate();
}

std::vector<double> SweepSpec::grid() const {
  std::vector<double> g(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(points - 1);
    g[i] = scale == Scale::linear ? lo + (hi - lo) * f : lo * std::pow(hi / lo, f);
  }
  g.back() = hi;
  return g;
}

SweepSpec sweep_spec_from(const Settings& s) {
  SweepSpec spec;
  const std::string& axis = s.require("sweep.axis");
  if (axis == "zeta") {
    spec.axis = Axis::zeta;
  } else if (axis == "lambda") {
    spec.axis = Axis::lambda;
  } else if (axis == "n") {
    spec.axis = Axis::n;
  } else {
    throw InputError("field 'sweep.axis': expected zeta, lambda or n, got '" + axis + "'");
  }
  spec.lo = s.number("sweep.lo");
  spec.hi = s.number("sweep.hi");
  spec.points = s.count_or("sweep.points", 0);
  if (!s.has("sweep.points")) s.require("sweep.points");
  const std::string scale = s.get("sweep.scale").value_or("linear");
  if (scale == "linear") {
    spec.scale = Scale::linear;
  } else if (scale == "log") {
    spec.scale = Scale::log;
  } else {
    throw InputError("field 'sweep.scale': expected linear or log, got '" + scale + "'");
  }
  if (spec.axis != Axis::zeta) spec.zeta = s.numbers("sweep.zeta");
  if (spec.axis != Axis::lambda) spec.lambda = s.numbers("sweep.lambda");
  if (spec.axis != Axis::n) spec.n = s.numbers("slab.n");
  spec.quad = quad_from(s);
  return spec;
}

bool SweepResult::all_ok() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.ok; });
}

namespace {

std::vector<SweepRow> layout(const SweepSpec& spec) {
  const std::vector<double> grid = spec.grid();
  const std::vector<double> one{0.0};
  const auto& zs = spec.axis == Axis::zeta ? one : spec.zeta;
  const auto& ls = spec.axis == Axis::lambda ? one : spec.lambda;
  const auto& ns = spec.axis == Axis::n ? one : spec.n;
  std::vector<SweepRow> rows;
  for (double z : zs) {
    for (double l : ls) {
      for (double n : ns) {
        for (double x : grid) {
          SweepRow r;
          r.axis_value = x;
          r.zeta = spec.axis == Axis::zeta ? x : z;
          r.lambda = spec.axis == Axis::lambda ? x : l;
          r.n = spec.axis == Axis::n ? x : n;
          rows.push_back(r);
        }
      }
    }
  }
  return rows;
}

void evaluate(SweepRow& r, const QuadratureSpec& q) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  try {
    const ReducedParams p(r.zeta, r.lambda, r.n);
    r.regime = classify_regime(p).regime;
    const WPair w = w_pair(p, q);
    const WPair h = halfspace_w(r.zeta, r.n, q);
    r.w_par = w.w_par;
    r.w_z = w.w_z;
    r.half_w_par = h.w_par;
    r.half_w_z = h.w_z;
    r.err_est = w.err_est;
    if (!w.warning.empty()) r.status = "warning: " + w.warning;
  } catch (const ConvergenceError& e) {
    r.ok = false;
    r.status = std::string("convergence failure: ") + e.what();
    r.w_par = r.w_z = r.half_w_par = r.half_w_z = nan;
    r.err_est = e.error_bound();
  } catch (const std::exception& e) {
    r.ok = false;
    r.status = std::string("error: ") + e.what();
    r.w_par = r.w_z = r.half_w_par = r.half_w_z = r.err_est = nan;
  }
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec, unsigned jobs) {
  spec.validate();
  SweepResult result;
  result.rows = layout(spec);
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(result.rows.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < result.rows.size(); i = next++) evaluate(result.rows[i], spec.quad);
  };
  std::vector<std::jthread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  return result;
}

Table sweep_table(const SweepSpec& spec, const SweepResult& result) {
  Table t;
  const std::string axis(to_string(spec.axis));
  t.columns.push_back(axis);
  for (std::string_view name : {"zeta", "lambda", "n"}) {
    if (name != axis) t.columns.emplace_back(name);
  }
  for (const char* c : {"w_par", "w_z", "halfspace_w_par", "halfspace_w_z", "err_est", "regime", "status"}) {
    t.columns.emplace_back(c);
  }
  for (const SweepRow& r : result.rows) {
    std::vector<Cell> row{r.axis_value};
    if (spec.axis != Axis::zeta) row.emplace_back(r.zeta);
    if (spec.axis != Axis::lambda) row.emplace_back(r.lambda);
    if (spec.axis != Axis::n) row.emplace_back(r.n);
    for (double v : {r.w_par, r.w_z, r.half_w_par, r.half_w_z, r.err_est}) row.emplace_back(v);
    row.emplace_back(std::string(to_string(r.regime)));
    // keep the status a single CSV field
    std::string status = r.status;
    std::replace(status.begin(), status.end(), ',', ';');
    row.emplace_back(std::move(status));
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace slabshift::cli
