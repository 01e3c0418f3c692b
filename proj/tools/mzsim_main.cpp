// mzsim: scenario runner for the operator-superposition interferometer.
//
// Subcommands: simulate, sweep, wigner, validate, parse-check. All output
// is data (CSV/JSON); see docs/plotting.md for figure recipes. Exit codes:
// 0 success, 1 validation failure, 2 usage or bench-file errors.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mzsim/bench_parser.hpp"
#include "mzsim/io_util.hpp"
#include "mzsim/validate.hpp"
#include "mzsim/wigner.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string bench_path;
  std::string out_dir;
  std::optional<std::size_t> grid_n;
  std::optional<std::string> grid_half_extent;
  std::size_t phase_count = 64;
};

std::string default_out_dir() {
  const char* env = std::getenv("MZSIM_OUT");
  return env != nullptr && *env != '\0' ? env : "out";
}

// Loads and validates the bench file; applies grid overrides. Returns
// nullopt after printing diagnostics (usage-level failure).
std::optional<mzsim::BenchDocument> load_bench(const Options& opt) {
  std::ifstream is(opt.bench_path, std::ios::binary);
  if (!is) {
    std::cerr << "error: cannot open bench file '" << opt.bench_path << "'\n";
    return std::nullopt;
  }
  std::ostringstream buffer;
  buffer << is.rdbuf();
  mzsim::ParseResult parsed = mzsim::parse_bench(buffer.str());
  if (!parsed.ok()) {
    std::cerr << mzsim::format_diagnostics(parsed.diagnostics);
    return std::nullopt;
  }
  mzsim::BenchDocument doc = *parsed.document;
  try {
    if (opt.grid_n) doc.grid.n_points = *opt.grid_n;
    if (opt.grid_half_extent) {
      doc.grid.half_extent = mzsim::parse_length_literal(*opt.grid_half_extent);
    }
    doc.grid = mzsim::make_grid(doc.grid.n_points, doc.grid.half_extent);
    if (doc.params.l > doc.grid.half_extent) {
      std::cerr << "error: operator half-width l exceeds the grid half-extent\n";
      return std::nullopt;
    }
  } catch (const mzsim::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return std::nullopt;
  }
  return doc;
}

json params_json(const mzsim::BenchDocument& doc) {
  return json{{"lambda_m", doc.params.lambda},
              {"f_m", doc.params.f},
              {"l_m", doc.params.l},
              {"w_m", doc.params.w},
              {"hbar_Js", doc.params.hbar},
              {"C", doc.params.commutator_constant()}};
}

json grid_json(const mzsim::GridSpec& grid) {
  return json{{"n_points", grid.n_points},
              {"half_extent_m", grid.half_extent},
              {"spacing_m", grid.spacing()}};
}

json warnings_json(const mzsim::WarningLog& log) {
  json arr = json::array();
  for (const auto& entry : log.entries) {
    arr.push_back(json{{"where", entry.where},
                       {"message", entry.message},
                       {"power_fraction", entry.power_fraction}});
  }
  return arr;
}

void write_json_file(const std::filesystem::path& path, const json& doc) {
  mzsim::atomic_write_file(path, doc.dump(2) + "\n");
}

int cmd_simulate(const Options& opt) {
  auto doc = load_bench(opt);
  if (!doc) return kExitUsage;

  mzsim::WarningLog log;
  const mzsim::ComplexField input = mzsim::gaussian_input(doc->grid, doc->params.w);
  const mzsim::PortOutputs ports =
      mzsim::run_interferometer(input, doc->interferometer(), &log);

  const std::filesystem::path out(opt.out_dir);
  std::filesystem::create_directories(out);
  for (const auto& [name, field] :
       {std::pair{"input.csv", &input}, {"d1.csv", &ports.d1}, {"d2.csv", &ports.d2}}) {
    std::ostringstream os;
    mzsim::write_field_csv(os, *field);
    mzsim::atomic_write_file(out / name, os.str());
  }

  json manifest{{"command", "simulate"},
                {"bench_path", opt.bench_path},
                {"params", params_json(*doc)},
                {"phi_rad", doc->phase},
                {"grid", grid_json(doc->grid)},
                {"raw_probabilities",
                 json{{"d1", ports.raw_probabilities.first},
                      {"d2", ports.raw_probabilities.second}}},
                {"fidelity_d1_normalized_vs_input",
                 mzsim::fidelity(mzsim::normalize(ports.d1), input)},
                {"clipping_warnings", warnings_json(log)},
                {"outputs", json{{"input_csv", "input.csv"},
                                 {"d1_csv", "d1.csv"},
                                 {"d2_csv", "d2.csv"}}}};
  write_json_file(out / "manifest.json", manifest);
  std::cout << "wrote " << (out / "manifest.json").string() << '\n';
  return kExitOk;
}

int cmd_sweep(const Options& opt) {
  auto doc = load_bench(opt);
  if (!doc) return kExitUsage;
  if (opt.phase_count < 2) {
    std::cerr << "error: --phases must be at least 2\n";
    return kExitUsage;
  }

  std::vector<double> phases(opt.phase_count);
  for (std::size_t i = 0; i < phases.size(); ++i) {
    phases[i] = 2.0 * std::numbers::pi * static_cast<double>(i) /
                static_cast<double>(phases.size());
  }

  mzsim::WarningLog log;
  const mzsim::ComplexField input = mzsim::gaussian_input(doc->grid, doc->params.w);
  const mzsim::ProbabilityMap map =
      mzsim::phase_sweep(input, doc->interferometer(), phases, false, &log);

  const std::filesystem::path out(opt.out_dir);
  std::filesystem::create_directories(out);
  mzsim::atomic_write_file(out / "sweep.csv", mzsim::probability_map_csv(map));
  mzsim::atomic_write_file(out / "sweep.json", mzsim::probability_map_json(map));

  json manifest{{"command", "sweep"},
                {"bench_path", opt.bench_path},
                {"params", params_json(*doc)},
                {"grid", grid_json(doc->grid)},
                {"phase_count", opt.phase_count},
                {"normalized_rows", false},
                {"clipping_warnings", warnings_json(log)},
                {"outputs", json{{"csv", "sweep.csv"}, {"json", "sweep.json"}}}};
  write_json_file(out / "manifest.json", manifest);
  std::cout << "wrote " << (out / "sweep.csv").string() << '\n';
  return kExitOk;
}

int cmd_wigner(const Options& opt) {
  auto doc = load_bench(opt);
  if (!doc) return kExitUsage;

  // File outputs grow as n^2; keep the default map modest unless the grid
  // was overridden explicitly.
  if (!opt.grid_n && doc->grid.n_points > 512) {
    doc->grid.n_points = 512;
  }

  mzsim::WarningLog log;
  const mzsim::ComplexField input = mzsim::gaussian_input(doc->grid, doc->params.w);
  mzsim::InterferometerSpec spec = doc->interferometer();
  spec.phase = std::numbers::pi;
  const mzsim::PortOutputs at_pi = mzsim::run_interferometer(input, spec, &log);
  spec.phase = 0.0;
  const mzsim::PortOutputs at_zero = mzsim::run_interferometer(input, spec, &log);

  const mzsim::WignerMap map_input = mzsim::wigner_transform(mzsim::normalize(input));
  const mzsim::WignerMap map_comm = mzsim::wigner_transform(mzsim::normalize(at_pi.d1));
  const mzsim::WignerMap map_anti = mzsim::wigner_transform(mzsim::normalize(at_zero.d1));

  const std::filesystem::path out(opt.out_dir);
  std::filesystem::create_directories(out);

  json metrics{{"command", "wigner"},
               {"bench_path", opt.bench_path},
               {"params", params_json(*doc)},
               {"grid", grid_json(doc->grid)},
               {"clipping_warnings", warnings_json(log)}};
  const struct {
    const char* tag;
    const mzsim::WignerMap* map;
  } panels[] = {{"input", &map_input}, {"commutator", &map_comm}, {"anticommutator", &map_anti}};
  for (const auto& panel : panels) {
    const std::string base = std::string("wigner_") + panel.tag;
    mzsim::atomic_write_file(out / (base + ".json"),
                             mzsim::wigner_map_json(*panel.map, doc->params.hbar));
    mzsim::atomic_write_file(out / (base + ".csv"), mzsim::wigner_map_csv(*panel.map));
    const mzsim::NegativityMetrics m = mzsim::negativity_metrics(*panel.map);
    metrics[panel.tag] = json{{"min_value", m.min_value},
                              {"min_location", json{{"x_m", m.min_x}, {"k_radpm", m.min_k}}},
                              {"max_value", m.max_value},
                              {"negative_volume", m.negative_volume}};
  }
  metrics["wigner_compare_input_vs_commutator"] = mzsim::wigner_compare(map_input, map_comm);
  metrics["wigner_compare_input_vs_anticommutator"] =
      mzsim::wigner_compare(map_input, map_anti);
  write_json_file(out / "negativity.json", metrics);
  std::cout << "wrote " << (out / "negativity.json").string() << '\n';
  return kExitOk;
}

int cmd_validate(const Options& opt) {
  auto doc = load_bench(opt);
  if (!doc) return kExitUsage;

  const mzsim::ValidationReport report = mzsim::run_validation(*doc);
  std::cout << mzsim::format_validation_report(report);

  const std::filesystem::path out(opt.out_dir);
  std::filesystem::create_directories(out);
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back(json{{"name", c.name},
                          {"pass", c.pass},
                          {"measured", c.measured},
                          {"op", c.op},
                          {"threshold", c.threshold},
                          {"detail", c.detail}});
  }
  json doc_json{{"command", "validate"},
                {"bench_path", opt.bench_path},
                {"params", params_json(*doc)},
                {"grid", grid_json(doc->grid)},
                {"wigner_grid_points", report.wigner_grid_points},
                {"checks", checks},
                {"all_pass", report.all_pass()}};
  write_json_file(out / "validation.json", doc_json);
  return report.all_pass() ? kExitOk : kExitValidationFailure;
}

int cmd_parse_check(const Options& opt) {
  std::ifstream is(opt.bench_path, std::ios::binary);
  if (!is) {
    std::cerr << "error: cannot open bench file '" << opt.bench_path << "'\n";
    return kExitUsage;
  }
  std::ostringstream buffer;
  buffer << is.rdbuf();
  const mzsim::ParseResult parsed = mzsim::parse_bench(buffer.str());
  if (!parsed.ok()) {
    std::cerr << mzsim::format_diagnostics(parsed.diagnostics);
    return kExitUsage;
  }
  std::cout << "OK: " << opt.bench_path << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wave-optics Mach-Zehnder simulator for superposed position/momentum "
               "operator orderings"};
  app.require_subcommand(1);

  Options opt;
  opt.out_dir = default_out_dir();

  auto add_common = [&](CLI::App* sub, bool with_phases) {
    sub->add_option("--bench", opt.bench_path, "bench description file")->required();
    sub->add_option("--out", opt.out_dir, "output directory (default $MZSIM_OUT or ./out)");
    sub->add_option("--grid-n", opt.grid_n, "override grid point count (power of two >= 16)");
    sub->add_option("--grid-half-extent", opt.grid_half_extent,
                    "override grid half extent, e.g. 6mm");
    if (with_phases) {
      sub->add_option("--phases", opt.phase_count, "phase count over [0, 2pi) (default 64)");
    }
  };

  CLI::App* simulate = app.add_subcommand("simulate", "run both ports at the bench phase");
  add_common(simulate, false);
  CLI::App* sweep = app.add_subcommand("sweep", "detection probability map over phi");
  add_common(sweep, true);
  CLI::App* wigner = app.add_subcommand("wigner", "Wigner maps of input and both port states");
  add_common(wigner, false);
  CLI::App* validate = app.add_subcommand("validate", "run the built-in oracle suite");
  add_common(validate, false);
  CLI::App* parse_check = app.add_subcommand("parse-check", "parse and validate a bench file");
  parse_check->add_option("--bench", opt.bench_path, "bench description file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(opt);
    if (sweep->parsed()) return cmd_sweep(opt);
    if (wigner->parsed()) return cmd_wigner(opt);
    if (validate->parsed()) return cmd_validate(opt);
    if (parse_check->parsed()) return cmd_parse_check(opt);
  } catch (const mzsim::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
