#include "torsionlab/report_format.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "torsionlab/errors.hpp"

namespace torsionlab::cli {

namespace {

std::string scalar_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return format_number(v.get<double>());
  if (v.is_null()) return "null";
  return v.dump();
}

void flatten(const ordered_json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (const auto& [key, child] : v.items()) flatten(child, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out.emplace_back(prefix, scalar_text(v));
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "text") return OutputFormat::Text;
  throw DomainError("unknown output format: " + name);
}

double round15(double x) {
  if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x == 0.0 ? 0.0 : x);
  return buf;
}

ordered_json geometry_json(const ConeGeometry& geom) {
  ordered_json g;
  g["kind"] = geom.is_disc() ? "disc" : "cone";
  g["m"] = geom.n + 1;
  g["n"] = geom.n;
  g["alpha"] = round15(geom.alpha);
  g["sin_alpha"] = round15(geom.sin_alpha());
  g["nu"] = round15(geom.nu());
  g["length"] = round15(geom.l);
  g["rank"] = geom.rank;
  return g;
}

ordered_json breakdown_json(const TorsionReport& report, double scale) {
  ordered_json b = ordered_json::object();
  for (const auto& t : report.breakdown) b[t.name] = round15(t.value * scale);
  return b;
}

std::string render_document(const ordered_json& doc, OutputFormat format) {
  if (format == OutputFormat::Json) return doc.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> flat;
  flatten(doc, "", flat);
  std::ostringstream os;
  if (format == OutputFormat::Csv) {
    os << "key,value\n";
    for (const auto& [k, v] : flat) os << csv_escape(k) << ',' << csv_escape(v) << '\n';
    return os.str();
  }
  std::size_t width = 0;
  for (const auto& [k, v] : flat) width = std::max(width, k.size());
  for (const auto& [k, v] : flat) os << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  return os.str();
}

std::string render_table(const ordered_json& header, const std::string& array_key, const std::vector<TableColumn>& columns,
                         const std::vector<std::vector<ordered_json>>& rows, OutputFormat format) {
  if (format == OutputFormat::Json) {
    ordered_json doc = header;
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json obj;
      for (std::size_t c = 0; c < columns.size(); ++c) {
        obj[columns[c].name] = columns[c].numeric && row[c].is_number_float() ? ordered_json(round15(row[c].get<double>())) : row[c];
      }
      arr.push_back(std::move(obj));
    }
    doc[array_key] = std::move(arr);
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  if (format == OutputFormat::Csv) {
    for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << columns[c].name;
    os << '\n';
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << csv_escape(scalar_text(row[c]));
      os << '\n';
    }
    return os.str();
  }
  std::vector<std::pair<std::string, std::string>> flat;
  flatten(header, "", flat);
  for (const auto& [k, v] : flat) os << "# " << k << ": " << v << '\n';
  std::vector<std::size_t> width(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) width[c] = columns[c].name.size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < columns.size(); ++c) width[c] = std::max(width[c], scalar_text(row[c]).size());
  }
  auto line = [&](auto cell) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const std::string s = cell(c);
      os << (c ? "  " : "") << s << std::string(width[c] - s.size(), ' ');
    }
    os << '\n';
  };
  line([&](std::size_t c) { return columns[c].name; });
  for (const auto& row : rows) line([&](std::size_t c) { return scalar_text(row[c]); });
  return os.str();
}

}  // namespace torsionlab::cli
