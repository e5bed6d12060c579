#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "torsionlab/geometry.hpp"
#include "torsionlab/spectrum.hpp"
#include "torsionlab/torsion.hpp"

namespace torsionlab::cli {

using ordered_json = nlohmann::ordered_json;

enum class OutputFormat { Json, Csv, Text };

OutputFormat parse_format(const std::string& name);

// Rounds to 15 significant digits so that emitted numbers are stable across platforms.
double round15(double x);
std::string format_number(double x);

ordered_json geometry_json(const ConeGeometry& geom);
ordered_json breakdown_json(const TorsionReport& report, double scale);

// Objects are flattened to dotted keys for CSV ("key,value") and text ("key: value").
std::string render_document(const ordered_json& doc, OutputFormat format);

struct TableColumn {
  std::string name;
  // Numeric columns are formatted with 15 significant digits.
  bool numeric = false;
};

// Rows of cells; JSON output wraps them as an array of objects under `array_key` inside `header`.
std::string render_table(const ordered_json& header, const std::string& array_key, const std::vector<TableColumn>& columns,
                         const std::vector<std::vector<ordered_json>>& rows, OutputFormat format);

}  // namespace torsionlab::cli
