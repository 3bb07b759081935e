#include "slabshift_cli/table.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <ostream>

#include "json.hpp"

namespace slabshift::cli {

Format format_from(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw InputError("--format: expected 'csv' or 'json', got '" + name + "'");
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::string current_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

namespace {

std::string cell_text(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return format_number(*d);
  return std::get<std::string>(c);
}

std::string quad_text(const QuadratureSpec& q) {
  return "rel_tol=" + format_number(q.rel_tol) + " abs_tol=" + format_number(q.abs_tol) +
         " s_cutoff_decades=" + format_number(q.s_cutoff_decades) +
         " max_subdivisions=" + std::to_string(q.max_subdivisions);
}

nlohmann::ordered_json cell_json(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) {
    if (std::isfinite(*d)) return *d;
    return format_number(*d);
  }
  return std::get<std::string>(c);
}

}  // namespace

void write_csv(std::ostream& out, const Manifest& m, const Table& t) {
  out << "# tool: " << m.tool << ' ' << m.version << '\n';
  out << "# command: " << m.command << '\n';
  out << "# timestamp: " << m.timestamp << '\n';
  out << "# quadrature: " << quad_text(m.quad) << '\n';
  for (const auto& [k, v] : m.inputs.entries()) out << "# input: " << k << " = " << v << '\n';
  for (const std::string& note : m.notes) out << "# note: " << note << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << '\n';
  }
}

void write_json(std::ostream& out, const Manifest& m, const Table& t) {
  nlohmann::ordered_json doc;
  auto& man = doc["manifest"];
  man["tool"] = m.tool;
  man["version"] = m.version;
  man["command"] = m.command;
  man["timestamp"] = m.timestamp;
  man["quadrature"] = {{"rel_tol", m.quad.rel_tol},
                       {"abs_tol", m.quad.abs_tol},
                       {"s_cutoff_decades", m.quad.s_cutoff_decades},
                       {"max_subdivisions", m.quad.max_subdivisions}};
  man["inputs"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : m.inputs.entries()) man["inputs"][k] = v;
  man["notes"] = m.notes;
  auto& rows = doc["rows"];
  rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r;
    for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i) r[t.columns[i]] = cell_json(row[i]);
    rows.push_back(std::move(r));
  }
  out << doc.dump(2) << '\n';
}

void write_table(std::ostream& out, Format format, const Manifest& manifest, const Table& table) {
  if (format == Format::csv) {
    write_csv(out, manifest, table);
  } else {
    write_json(out, manifest, table);
  }
}

}  // namespace slabshift::cli
