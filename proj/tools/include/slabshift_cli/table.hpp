#pragma once

// Output tables and their CSV / JSON serializations. CSV: '#'-prefixed
// manifest block, header row, numbers as %.16e (17 significant digits),
// "inf"/"nan" for non-finite values.

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "slabshift/shift.hpp"
#include "slabshift_cli/settings.hpp"

namespace slabshift::cli {

using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Manifest {
  std::string tool = "slabshift";
  std::string version;
  std::string command;
  std::string timestamp;
  Settings inputs;
  QuadratureSpec quad;
  /// Extra free-form lines (warnings, notes).
  std::vector<std::string> notes;
};

enum class Format { csv, json };

Format format_from(const std::string& name);
std::string format_number(double v);
std::string current_timestamp();

void write_csv(std::ostream& out, const Manifest& manifest, const Table& table);
void write_json(std::ostream& out, const Manifest& manifest, const Table& table);
void write_table(std::ostream& out, Format format, const Manifest& manifest, const Table& table);

}  // namespace slabshift::cli
