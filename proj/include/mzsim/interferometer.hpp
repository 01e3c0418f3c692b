// Mach-Zehnder assembly superposing the two operator orderings.
//
// The upper arm realizes p~ x~ (temporal order: position bench, then
// momentum bench) and the lower arm x~ p~. The output ports carry
//
//   d1 = (U_lower + e^{i phi} U_upper) psi / 2
//   d2 = (U_lower - e^{i phi} U_upper) psi / 2
//
// so phi = pi places the commutator at D1 and the anti-commutator at D2,
// and phi = 0 swaps the ports. Each arm contains exactly one momentum
// bench, hence a common global -i that cancels in normalized outputs.

#pragma once

#include <utility>
#include <vector>

#include "mzsim/elements.hpp"

namespace mzsim {

struct InterferometerSpec {
  ElementPipeline upper_arm;  // p~ x~ : temporal [position bench, momentum bench]
  ElementPipeline lower_arm;  // x~ p~ : temporal [momentum bench, position bench]
  double phase = 0.0;         // relative phase phi [rad]
};

// Throws InvalidArgumentError unless both arms contain exactly one
// momentum bench (this is what makes the arms' -i factors cancel).
void validate_interferometer(const InterferometerSpec& spec);

// The stock two-arm assembly for the given parameters.
InterferometerSpec default_interferometer(const BenchParams& params, double phase);

struct PortOutputs {
  ComplexField d1;
  ComplexField d2;
  std::pair<double, double> raw_probabilities;  // unnormalized port powers
};

PortOutputs run_interferometer(const ComplexField& input, const InterferometerSpec& spec,
                               WarningLog* log = nullptr);

// Raw detection probabilities |d1(x)|^2 over a list of phases. Detection
// is ideal point sampling at the grid points; a finite collection mode
// would convolve each row with the fiber profile as a post-processing
// step on this map.
struct ProbabilityMap {
  std::vector<double> phases;  // [rad]
  GridSpec grid;
  std::vector<double> values;  // row-major, phases.size() x grid.n_points

  double at(std::size_t phase_idx, std::size_t x_idx) const {
    return values[phase_idx * grid.n_points + x_idx];
  }
};

// Arm outputs are phase-independent, so they are evaluated once and the
// ports combined per phase. Rows are raw |amplitude|^2 by default; set
// normalize_rows to rescale each row to unit total power.
ProbabilityMap phase_sweep(const ComplexField& input, const InterferometerSpec& spec,
                           const std::vector<double>& phases, bool normalize_rows = false,
                           WarningLog* log = nullptr);

struct PortSwitchReport {
  bool pass = false;
  double max_deviation = 0.0;
  double tolerance = 0.0;
};

// Checks d1(phi=0) == d2(phi=pi) and d2(phi=0) == d1(phi=pi) sample-wise
// to 1e-12.
PortSwitchReport port_switch_check(const ComplexField& input,
                                   const InterferometerSpec& spec);

// CSV ("phi_rad,x_m,intensity", rows ordered by (phi, x)) and a JSON
// variant with axes arrays and row-major data.
std::string probability_map_csv(const ProbabilityMap& map);
std::string probability_map_json(const ProbabilityMap& map);

}  // namespace mzsim
