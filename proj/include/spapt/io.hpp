#pragma once

// Serialization: state files and tabular reports.
//
// State file (JSON):
//   {"dim": 4, "re": [[...], ...], "im": [[...], ...], "metadata": {"family": "bell", ...}}
// Numbers are written with 12 significant digits.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spapt/states.hpp"

namespace spapt {

inline constexpr std::string_view kVersion = "1.0.0";
inline constexpr int kSignificantDigits = 12;

using Metadata = std::map<std::string, std::string>;

struct StateFile {
  DensityMatrix state;
  Metadata metadata;
};

// Rounds to 12 significant digits.
double round_significant(double value);
// "%.12g"
std::string format_number(double value);

std::string serialize_state(const DensityMatrix& rho, const Metadata& metadata);
// Throws InvalidInput naming the missing key or violated invariant.
StateFile parse_state(std::string_view text);
StateFile read_state_file(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

enum class OutputFormat { Json, Csv };
OutputFormat parse_format(std::string_view name);

// A report cell is numeric, textual or empty (null in JSON, blank in CSV).
using Cell = std::variant<std::monostate, double, std::string>;

struct Report {
  std::string kind;  // e.g. "detect", "table1"
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

// {"kind": ..., "columns": [...], "rows": [{column: value, ...}, ...]}
std::string to_json(const Report& report);
// Header row then one line per row, LF endings.
std::string to_csv(const Report& report);
std::string render(const Report& report, OutputFormat format);

}  // namespace spapt
