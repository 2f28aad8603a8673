#include "spapt/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "spapt/errors.hpp"

namespace spapt {

using nlohmann::json;

double round_significant(double value) {
  if (!std::isfinite(value) || value == 0.0) return value;
  return std::stod(format_number(value));
}

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", kSignificantDigits, value);
  return buffer;
}

std::string serialize_state(const DensityMatrix& rho, const Metadata& metadata) {
  json re = json::array();
  json im = json::array();
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    json re_row = json::array();
    json im_row = json::array();
    for (std::size_t j = 0; j < rho.dim(); ++j) {
      re_row.push_back(round_significant(rho(i, j).real()));
      im_row.push_back(round_significant(rho(i, j).imag()));
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  json doc;
  doc["dim"] = rho.dim();
  doc["re"] = std::move(re);
  doc["im"] = std::move(im);
  doc["metadata"] = metadata;
  return doc.dump(2) + "\n";
}

StateFile parse_state(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("state file: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("state file: top level must be an object");
  for (const char* key : {"dim", "re", "im"}) {
    if (!doc.contains(key)) throw InvalidInput(std::string("state file: missing key '") + key + "'");
  }
  if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() <= 0) {
    throw InvalidInput("state file: 'dim' must be a positive integer");
  }
  const auto dim = doc["dim"].get<std::size_t>();
  auto read_part = [&](const char* key) {
    const json& part = doc[key];
    if (!part.is_array() || part.size() != dim) {
      throw InvalidInput(std::string("state file: '") + key + "' must have " +
                         std::to_string(dim) + " rows");
    }
    std::vector<double> values;
    for (const json& row : part) {
      if (!row.is_array() || row.size() != dim) {
        throw InvalidInput(std::string("state file: every row of '") + key + "' must have " +
                           std::to_string(dim) + " entries");
      }
      for (const json& v : row) {
        if (!v.is_number()) throw InvalidInput(std::string("state file: non-numeric entry in '") + key + "'");
        values.push_back(v.get<double>());
      }
    }
    return values;
  };
  const std::vector<double> re = read_part("re");
  const std::vector<double> im = read_part("im");
  std::vector<complex> entries(dim * dim);
  for (std::size_t k = 0; k < entries.size(); ++k) entries[k] = complex(re[k], im[k]);

  Metadata metadata;
  if (doc.contains("metadata")) {
    if (!doc["metadata"].is_object()) throw InvalidInput("state file: 'metadata' must be an object");
    for (const auto& [key, value] : doc["metadata"].items()) {
      metadata[key] = value.is_string() ? value.get<std::string>() : value.dump();
    }
  }
  return StateFile{DensityMatrix(ComplexMatrix(dim, std::move(entries))), std::move(metadata)};
}

StateFile read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read state file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state(buffer.str());
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path.string() + "'");
  out << text;
}

OutputFormat parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw InvalidInput("unknown output format '" + std::string(name) + "' (expected json or csv)");
}

void Report::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw InvalidInput("report: row width does not match columns");
  rows.push_back(std::move(row));
}

std::string to_json(const Report& report) {
  json doc;
  doc["kind"] = report.kind;
  doc["columns"] = report.columns;
  json rows = json::array();
  for (const auto& row : report.rows) {
    json record = json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      const Cell& cell = row[c];
      if (const double* number = std::get_if<double>(&cell)) {
        record[report.columns[c]] = std::isfinite(*number) ? json(round_significant(*number)) : json();
      } else if (const std::string* text = std::get_if<std::string>(&cell)) {
        record[report.columns[c]] = *text;
      } else {
        record[report.columns[c]] = nullptr;
      }
    }
    rows.push_back(std::move(record));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string to_csv(const Report& report) {
  std::string out;
  for (std::size_t c = 0; c < report.columns.size(); ++c) {
    if (c > 0) out += ',';
    out += report.columns[c];
  }
  out += '\n';
  for (const auto& row : report.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      if (const double* number = std::get_if<double>(&row[c])) {
        if (std::isfinite(*number)) out += format_number(*number);
      } else if (const std::string* text = std::get_if<std::string>(&row[c])) {
        out += *text;
      }
    }
    out += '\n';
  }
  return out;
}

std::string render(const Report& report, OutputFormat format) {
  return format == OutputFormat::Json ? to_json(report) : to_csv(report);
}

}  // namespace spapt
