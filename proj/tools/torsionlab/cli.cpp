#include "torsionlab/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <memory>
#include <optional>
#include <ostream>
#include <regex>

#include <CLI11.hpp>

#include "torsionlab/chain_torsion.hpp"
#include "torsionlab/errors.hpp"
#include "torsionlab/report_format.hpp"
#include "torsionlab/spectrum.hpp"
#include "torsionlab/torsion.hpp"
#include "torsionlab/verify.hpp"
#include "torsionlab/zero_cache.hpp"
#include "torsionlab/zeta_engine.hpp"

namespace torsionlab::cli {

namespace {

using specfun::kPi;

// Tolerance names accepted by `compute --tol`.
constexpr const char* kFZeroTol = "F_zero";
constexpr const char* kPipelineTol = "pipeline";

struct RunConfig {
  std::string kind = "disc";
  int dim = 2;
  std::string section = "circle";
  std::string alpha = "pi/2";
  double length = 1.0;
  int rank = 1;
  std::string bc = "abs";
  std::string method = "closed";
  std::string format = "json";
  bool log10 = false;
  int degree = 0;
  double cutoff = 40.0;
  std::string cache;
  std::vector<std::string> tol;
  std::string suite = "all";
};

double parse_number(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw DomainError("cannot parse " + what + ": '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v)) throw DomainError("cannot parse " + what + ": '" + text + "'");
  return v;
}

BoundaryCondition parse_bc(const std::string& s) { return s == "rel" ? BoundaryCondition::Relative : BoundaryCondition::Absolute; }

Tolerances parse_tolerances(const std::vector<std::string>& items) {
  Tolerances t;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw DomainError("--tol expects NAME=VALUE, got '" + item + "'");
    const double v = parse_number(item.substr(eq + 1), "tolerance");
    if (!(v >= 0.0)) throw DomainError("tolerance must be >= 0: '" + item + "'");
    t[item.substr(0, eq)] = v;
  }
  return t;
}

ConeGeometry geometry_from(const RunConfig& c) {
  ConeGeometry g;
  g.l = c.length;
  g.rank = c.rank;
  if (c.kind == "disc") {
    if (c.dim < 1) throw DomainError("disc dimension must be >= 1");
    g.n = c.dim - 1;
    g.alpha = kPi / 2;
  } else {
    g.n = c.section == "circle" ? 1 : 2;
    g.alpha = parse_angle(c.alpha);
  }
  g.validate();
  return g;
}

ordered_json optional_number(const std::optional<double>& v, double scale) {
  return v ? ordered_json(round15(*v * scale)) : ordered_json(nullptr);
}

int cmd_compute(const RunConfig& c, std::ostream& out) {
  const ConeGeometry geom = geometry_from(c);
  const BoundaryCondition bc = parse_bc(c.bc);
  const OutputFormat format = parse_format(c.format);
  const Tolerances tol = parse_tolerances(c.tol);
  for (const auto& [name, value] : tol) {
    if (name != kFZeroTol && name != kPipelineTol) throw DomainError("unknown tolerance name for compute: " + name);
  }
  const double scale = c.log10 ? 1.0 / std::log(10.0) : 1.0;

  // The sphere pipeline depends on F(0,ν); both of its methods must agree before anything is reported.
  std::optional<zeta::FZeroResult> f_zero;
  if (geom.n == 2 && c.method != "closed") {
    const auto it = tol.find(kFZeroTol);
    f_zero = it == tol.end() ? zeta::F_zero_detailed(geom.nu()) : zeta::F_zero_detailed(geom.nu(), it->second);
  }

  const ConsistencyReport consistency = consistency_report(geom, bc);
  std::optional<TorsionReport> closed;
  std::optional<TorsionReport> pipeline;
  if (c.method != "pipeline") closed = closed_form_torsion(geom, bc);
  if (c.method != "closed") {
    pipeline = pipeline_torsion(geom, bc);
    if (!pipeline && c.method == "pipeline") {
      throw UnsupportedError("the spectral pipeline covers cones over S^1 and S^2 (including D^2 and D^3) only");
    }
  }
  if (const auto it = tol.find(kPipelineTol); it != tol.end() && consistency.pipeline_minus_closed &&
                                                std::abs(*consistency.pipeline_minus_closed) > it->second) {
    throw ConsistencyError("pipeline and closed form differ by " + format_number(*consistency.pipeline_minus_closed));
  }

  const TorsionReport& primary = closed ? *closed : *pipeline;
  ordered_json doc;
  doc["geometry"] = geometry_json(geom);
  doc["bc"] = to_string(bc);
  doc["method"] = c.method;
  doc["log_base"] = c.log10 ? "10" : "e";
  doc["log_torsion"] = round15(primary.log_value * scale);
  doc["breakdown"] = breakdown_json(primary, scale);
  doc["log_rs_torsion"] = round15(consistency.log_tau * scale);
  ordered_json anomalies;
  anomalies["bm"] = optional_number(consistency.bm, scale);
  anomalies["df"] = optional_number(consistency.df, scale);
  doc["anomalies"] = anomalies;
  ordered_json residuals;
  residuals["pipeline_minus_closed"] = optional_number(consistency.pipeline_minus_closed, scale);
  residuals["bm"] = optional_number(consistency.residual_bm, scale);
  residuals["df"] = optional_number(consistency.residual_df, scale);
  if (f_zero) residuals["F_zero"] = round15(f_zero->difference);
  doc["residuals"] = residuals;
  if (c.method == "both") {
    if (pipeline) {
      ordered_json p;
      p["log_torsion"] = round15(pipeline->log_value * scale);
      p["breakdown"] = breakdown_json(*pipeline, scale);
      doc["pipeline"] = p;
    } else {
      doc["pipeline"] = nullptr;
    }
  }
  out << render_document(doc, format);
  return kExitOk;
}

int cmd_spectrum(const RunConfig& c, std::ostream& out) {
  if (!(c.cutoff > 0.0)) throw DomainError("cutoff must be > 0");
  const auto section = c.section == "circle" ? spectrum::ConeSection::Circle : spectrum::ConeSection::Sphere;
  const int dim = spectrum::cone_dimension(section);
  if (c.degree < 0 || c.degree > dim) throw DomainError("degree must lie in 0.." + std::to_string(dim));
  ConeGeometry g{dim - 1, parse_angle(c.alpha), c.length, 1};
  g.validate();
  const OutputFormat format = parse_format(c.format);
  const auto desc = spectrum::cone_spectrum(section, c.degree, parse_bc(c.bc), g.nu(), g.l);

  const std::string cache_path = c.cache;
  std::unique_ptr<ZeroCache> cache;
  spectrum::DirectZeroProvider direct;
  spectrum::ZeroProvider* provider = &direct;
  if (!cache_path.empty()) {
    cache = std::make_unique<ZeroCache>(cache_path);
    provider = cache.get();
  }
  const auto rows = spectrum::enumerate_eigenvalues(desc, c.cutoff, provider);
  if (cache) cache->save();

  ordered_json header;
  header["section"] = spectrum::to_string(section);
  header["degree"] = c.degree;
  header["bc"] = to_string(desc.bc);
  header["alpha"] = round15(g.alpha);
  header["nu"] = round15(desc.nu);
  header["length"] = round15(desc.l);
  header["cutoff"] = round15(c.cutoff);
  header["count"] = rows.size();
  const std::vector<TableColumn> columns = {{"eigenvalue", true}, {"multiplicity", false}, {"family", false},
                                            {"order", true},      {"n", false},            {"k", false},
                                            {"provenance", false}};
  std::vector<std::vector<ordered_json>> cells;
  cells.reserve(rows.size());
  for (const auto& r : rows) {
    cells.push_back({round15(r.value), r.multiplicity, specfun::to_string(r.kind), round15(r.order), r.n, r.k, r.provenance});
  }
  out << render_table(header, "eigenvalues", columns, cells, format);
  return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const OutputFormat format = parse_format(c.format);
  const Tolerances tol = parse_tolerances(c.tol);
  for (const auto& [name, value] : tol) {
    if (!is_check_id(name)) throw DomainError("unknown check id: " + name);
  }
  const SuiteResult result = run_suite(c.suite, tol);
  ordered_json header;
  header["suite"] = result.suite;
  header["passed"] = result.passed();
  const std::vector<TableColumn> columns = {{"id", false},        {"status", false},    {"measured", true},
                                            {"comparison", false}, {"tolerance", true}, {"description", false},
                                            {"detail", false}};
  std::vector<std::vector<ordered_json>> cells;
  for (const auto& r : result.checks) {
    cells.push_back({r.id, r.passed ? "PASS" : "FAIL", std::isfinite(r.measured) ? ordered_json(round15(r.measured)) : ordered_json(nullptr),
                     r.comparison == Comparison::AtMost ? "<=" : ">=", round15(r.tolerance), r.description, r.detail});
  }
  out << render_table(header, "checks", columns, cells, format);
  return result.passed() ? kExitOk : kExitCheckFailed;
}

void add_geometry_flags(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--section", c.section, "cross-section of the cone")->check(CLI::IsMember({"circle", "sphere"}));
  cmd->add_option("--alpha", c.alpha, "cone angle: 30deg, 0.5236rad, pi/6");
  cmd->add_option("--length", c.length, "cone length l > 0");
  cmd->add_option("--bc", c.bc, "boundary condition")->check(CLI::IsMember({"abs", "rel"}));
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
}

}  // namespace

double parse_angle(const std::string& text) {
  static const std::regex unit(R"(^\s*([-+]?[0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?)\s*(deg|rad)\s*$)");
  static const std::regex pi_literal(R"(^\s*(?:([0-9]+)\s*\*?\s*)?pi(?:\s*/\s*([0-9]+))?\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, unit)) {
    const double v = parse_number(m[1].str(), "angle");
    // kPi·(deg/180) keeps 90deg and 30deg exact against the pi/n literals.
    return m[2].str() == "deg" ? kPi * (v / 180.0) : v;
  }
  if (std::regex_match(text, m, pi_literal)) {
    const double k = m[1].matched ? parse_number(m[1].str(), "angle") : 1.0;
    const double d = m[2].matched ? parse_number(m[2].str(), "angle") : 1.0;
    if (d == 0.0) throw DomainError("angle denominator must be nonzero");
    return k == 1.0 ? kPi / d : k * kPi / d;
  }
  throw DomainError("angle needs a unit: use 30deg, 0.5236rad or pi/6, got '" + text + "'");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  if (const char* env = std::getenv("TORSIONLAB_CACHE")) c.cache = env;

  CLI::App app{"Analytic and Reidemeister torsion of discs and cones over S^1 and S^2", "torsionlab"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "log-torsions, anomaly terms and residuals for one geometry");
  compute->add_option("kind", c.kind, "disc or cone")->required()->check(CLI::IsMember({"disc", "cone"}));
  compute->add_option("--dim", c.dim, "disc dimension m >= 1");
  compute->add_option("--rank", c.rank, "rank of the trivial representation");
  compute->add_option("--method", c.method, "closed form, spectral pipeline, or both")
      ->check(CLI::IsMember({"closed", "pipeline", "both"}));
  compute->add_flag("--log10", c.log10, "display logarithms in base 10");
  compute->add_option("--tol", c.tol, "NAME=VALUE with NAME in {F_zero, pipeline}");
  compute->add_option("--cache", c.cache, "zero-cache file (default: $TORSIONLAB_CACHE)");
  add_geometry_flags(compute, c);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues of the form Laplacian below a cutoff");
  spectrum_cmd->add_option("--degree", c.degree, "form degree q");
  spectrum_cmd->add_option("--cutoff", c.cutoff, "largest eigenvalue listed");
  spectrum_cmd->add_option("--cache", c.cache, "zero-cache file (default: $TORSIONLAB_CACHE)");
  add_geometry_flags(spectrum_cmd, c);

  auto* verify = app.add_subcommand("verify", "run an invariant suite and print one line per check");
  verify->add_option("suite", c.suite, "specfun, spectra, engine, torsion or all")
      ->check(CLI::IsMember({"specfun", "spectra", "engine", "torsion", "all"}));
  verify->add_option("--tol", c.tol, "CHECK_ID=VALUE tolerance override");
  verify->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("torsionlab");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadArguments;
  }

  try {
    if (compute->parsed()) return cmd_compute(c, out);
    if (spectrum_cmd->parsed()) return cmd_spectrum(c, out);
    return cmd_verify(c, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadArguments;
  } catch (const PoleError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadArguments;
  } catch (const std::invalid_argument& e) {
    // UnsupportedError derives from std::invalid_argument.
    err << "error: " << e.what() << '\n';
    return kExitBadArguments;
  } catch (const std::exception& e) {
    // ConsistencyError, ConvergenceError, OverflowError and anything unexpected.
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace torsionlab::cli
