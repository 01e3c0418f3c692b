#include "mzsim/interferometer.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <string>

#include "mzsim/io_util.hpp"

namespace mzsim {

namespace {

std::size_t momentum_bench_count(const ElementPipeline& arm) {
  std::size_t count = 0;
  for (const OpticalElement& e : arm.elements) {
    if (std::holds_alternative<MomentumBench>(e)) ++count;
  }
  return count;
}

ComplexField run_arm(const ComplexField& input, const ElementPipeline& arm,
                     const char* label, WarningLog* log) {
  try {
    return run_pipeline(input, arm, log);
  } catch (const PipelineError& e) {
    throw PipelineError(std::string(label) + " arm: " + e.what(), e.element_index);
  }
}

}  // namespace

void validate_interferometer(const InterferometerSpec& spec) {
  if (momentum_bench_count(spec.upper_arm) != 1 ||
      momentum_bench_count(spec.lower_arm) != 1) {
    throw InvalidArgumentError(
        "interferometer: each arm must contain exactly one momentum bench");
  }
}

InterferometerSpec default_interferometer(const BenchParams& params, double phase) {
  validate_params(params);
  InterferometerSpec spec;
  spec.upper_arm.elements = {PositionBench{params.l},
                             MomentumBench{params.lambda, params.f, params.l}};
  spec.lower_arm.elements = {MomentumBench{params.lambda, params.f, params.l},
                             PositionBench{params.l}};
  spec.phase = phase;
  return spec;
}

PortOutputs run_interferometer(const ComplexField& input, const InterferometerSpec& spec,
                               WarningLog* log) {
  validate_interferometer(spec);
  const ComplexField lower = run_arm(input, spec.lower_arm, "lower", log);
  const ComplexField upper = run_arm(input, spec.upper_arm, "upper", log);

  const cplx phase_factor = std::polar(1.0, spec.phase);
  PortOutputs out{axpy(scaled(lower, 0.5), 0.5 * phase_factor, upper),
                  axpy(scaled(lower, 0.5), -0.5 * phase_factor, upper),
                  {0.0, 0.0}};
  out.raw_probabilities = {norm_sq(out.d1), norm_sq(out.d2)};
  return out;
}

ProbabilityMap phase_sweep(const ComplexField& input, const InterferometerSpec& spec,
                           const std::vector<double>& phases, bool normalize_rows,
                           WarningLog* log) {
  if (phases.empty()) {
    throw InvalidArgumentError("phase_sweep: phase list must be nonempty");
  }
  validate_interferometer(spec);
  const ComplexField lower = run_arm(input, spec.lower_arm, "lower", log);
  const ComplexField upper = run_arm(input, spec.upper_arm, "upper", log);

  const std::size_t n = input.grid.n_points;
  ProbabilityMap map{phases, input.grid, std::vector<double>(phases.size() * n)};
  for (std::size_t p = 0; p < phases.size(); ++p) {
    const cplx factor = std::polar(1.0, phases[p]);
    double row_power = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const cplx amp = 0.5 * (lower.samples[i] + factor * upper.samples[i]);
      const double intensity = std::norm(amp);
      map.values[p * n + i] = intensity;
      row_power += intensity;
    }
    if (normalize_rows && row_power > 0.0) {
      const double scale = 1.0 / (row_power * input.grid.spacing());
      for (std::size_t i = 0; i < n; ++i) map.values[p * n + i] *= scale;
    }
  }
  return map;
}

PortSwitchReport port_switch_check(const ComplexField& input,
                                   const InterferometerSpec& spec) {
  InterferometerSpec at0 = spec;
  at0.phase = 0.0;
  InterferometerSpec atpi = spec;
  atpi.phase = std::numbers::pi;
  const PortOutputs p0 = run_interferometer(input, at0);
  const PortOutputs ppi = run_interferometer(input, atpi);

  double max_dev = 0.0;
  for (std::size_t i = 0; i < input.grid.n_points; ++i) {
    max_dev = std::max(max_dev, std::abs(p0.d1.samples[i] - ppi.d2.samples[i]));
    max_dev = std::max(max_dev, std::abs(p0.d2.samples[i] - ppi.d1.samples[i]));
  }
  PortSwitchReport report;
  report.tolerance = 1e-12;
  report.max_deviation = max_dev;
  report.pass = max_dev <= report.tolerance;
  return report;
}

std::string probability_map_csv(const ProbabilityMap& map) {
  std::ostringstream os;
  os << "phi_rad,x_m,intensity\n";
  for (std::size_t p = 0; p < map.phases.size(); ++p) {
    const std::string phi = format_g17(map.phases[p]);
    for (std::size_t i = 0; i < map.grid.n_points; ++i) {
      os << phi << ',' << format_g17(map.grid.coord(i)) << ','
         << format_g17(map.at(p, i)) << '\n';
    }
  }
  return os.str();
}

std::string probability_map_json(const ProbabilityMap& map) {
  // Streamed by hand: maps are large and need no generic JSON machinery.
  std::ostringstream os;
  os << "{\n  \"phi_rad\": [";
  for (std::size_t p = 0; p < map.phases.size(); ++p) {
    os << (p ? "," : "") << format_g17(map.phases[p]);
  }
  os << "],\n  \"x_m\": [";
  for (std::size_t i = 0; i < map.grid.n_points; ++i) {
    os << (i ? "," : "") << format_g17(map.grid.coord(i));
  }
  os << "],\n  \"intensity\": [";
  for (std::size_t p = 0; p < map.phases.size(); ++p) {
    os << (p ? ",\n    [" : "\n    [");
    for (std::size_t i = 0; i < map.grid.n_points; ++i) {
      os << (i ? "," : "") << format_g17(map.at(p, i));
    }
    os << ']';
  }
  os << "\n  ]\n}\n";
  return os.str();
}

}  // namespace mzsim
