// Optical elements and the two composite benches realizing the
// dimensionless position and momentum operators.
//
// Element descriptors are immutable values; every apply function is pure.
// Pipelines are stored in temporal order of traversal. Operator products
// compose right-to-left, so the product x~ p~ corresponds to the temporal
// pipeline [momentum bench, position bench]. Getting this backwards is a
// silent sign error in the commutator; see run_pipeline tests.

#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "mzsim/field.hpp"

namespace mzsim {

// Multiplies samples with x in [lo, hi] by e^{i shift}. The shift is
// applied modulo 2pi, so 0 and 2pi are exact identities.
struct PhaseShifter {
  double lo = 0.0;     // [m]
  double hi = 0.0;     // [m]
  double shift = 0.0;  // [rad]
  bool operator==(const PhaseShifter&) const = default;
};

// t(x) = |x|/l on [-l, l], 0 outside. The cut to zero beyond the aperture
// is a modelling choice for a finite physical attenuator; the clipped
// power is reported through WarningLog when it exceeds 1e-6.
struct LinearAttenuator {
  double l = 0.0;  // [m]
  bool operator==(const LinearAttenuator&) const = default;
};

// t(x) = 1 on [-l, l], 0 outside.
struct HardAperture {
  double l = 0.0;  // [m]
  bool operator==(const HardAperture&) const = default;
};

// Single-lens mapping to the Fourier plane (focal-plane transform).
struct LensFT {
  double lambda = 0.0;  // [m]
  double f = 0.0;       // [m]
  bool operator==(const LensFT&) const = default;
};

// Relabeling x' = -x, the inversion of a 4f imaging system.
struct AxisFlip {
  bool operator==(const AxisFlip&) const = default;
};

// Composite: phase shifter (pi on [-l, 0]) followed by the linear
// attenuator. Net amplitude transmission t(x) = x/l on [-l, l].
struct PositionBench {
  double l = 0.0;  // [m]
  bool operator==(const PositionBench&) const = default;
};

// Composite: lens transform, position bench acting on the Fourier-plane
// coordinate, lens transform, axis flip. Output is -i * (p~ psi)(x).
struct MomentumBench {
  double lambda = 0.0;  // [m]
  double f = 0.0;       // [m]
  double l = 0.0;       // [m]
  bool operator==(const MomentumBench&) const = default;
};

using OpticalElement = std::variant<PhaseShifter, LinearAttenuator, HardAperture,
                                    LensFT, AxisFlip, PositionBench, MomentumBench>;

struct ElementPipeline {
  std::vector<OpticalElement> elements;  // temporal order; empty = identity

  bool operator==(const ElementPipeline&) const = default;
};

const char* element_name(const OpticalElement& element);

// Collects clipping warnings emitted by the benches. A null log pointer
// silently drops them.
struct WarningLog {
  struct Entry {
    std::string where;
    std::string message;
    double power_fraction = 0.0;
  };
  std::vector<Entry> entries;

  void add(std::string where, std::string message, double power_fraction);
};

ComplexField apply_phase_shifter(const ComplexField& field, double lo, double hi,
                                 double shift);

ComplexField apply_linear_attenuator(const ComplexField& field, double l);

ComplexField apply_hard_aperture(const ComplexField& field, double l);

ComplexField apply_axis_flip(const ComplexField& field);

// Scaled Fourier transform performed by a lens of focal length f:
//
//   phi'(p') = (1 / sqrt(i lambda f)) * integral psi(x) e^{-i 2pi x p' / (lambda f)} dx
//
// evaluated as a centered DFT on the reciprocally paired grid with
// dx * dp' = lambda f / n_points (output half-extent lambda f / (2 dx)).
// The 1/sqrt(i lambda f) prefactor makes the discrete map exactly unitary
// in the p' coordinate, so Parseval holds to rounding.
ComplexField lens_fourier_transform(const ComplexField& field, double lambda, double f);

// The grid a lens transform of `grid` lands on.
GridSpec fourier_paired_grid(const GridSpec& grid, double lambda, double f);

// Net effect psi(x) -> (x/l) psi(x) on [-l, l], 0 outside. Warns when the
// clipped power fraction exceeds 1e-6.
ComplexField apply_position_bench(const ComplexField& field, double l,
                                  WarningLog* log = nullptr);

// 4f system with the position bench at the Fourier plane. Returns
// -i * (p~ psi) on the input grid, the global -i kept exact. Warns when
// Fourier-plane power outside [-l, l] exceeds 1e-6. Throws
// FourierPlaneCoverageError when the paired grid is narrower than l.
ComplexField apply_momentum_bench(const ComplexField& field, double lambda, double f,
                                  double l, WarningLog* log = nullptr);

ComplexField apply_element(const ComplexField& field, const OpticalElement& element,
                           WarningLog* log = nullptr);

// Left fold of element applications in temporal order. Element errors are
// rethrown as PipelineError with the element index attached.
ComplexField run_pipeline(const ComplexField& field, const ElementPipeline& pipeline,
                          WarningLog* log = nullptr);

}  // namespace mzsim
