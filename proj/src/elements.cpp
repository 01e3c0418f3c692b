#include "mzsim/elements.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <utility>

#include "fft_backend.hpp"

namespace mzsim {

namespace {

constexpr double kClipWarnThreshold = 1e-6;

double wrap_2pi(double angle) {
  const double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(angle, two_pi);
  if (r < 0.0) r += two_pi;
  return r;
}

// Power fraction of `field` outside [-l, l].
double clipped_power_fraction(const ComplexField& field, double l) {
  double total = 0.0;
  double outside = 0.0;
  for (std::size_t i = 0; i < field.grid.n_points; ++i) {
    const double p = std::norm(field.samples[i]);
    total += p;
    if (std::abs(field.grid.coord(i)) > l) outside += p;
  }
  return total > 0.0 ? outside / total : 0.0;
}

}  // namespace

const char* element_name(const OpticalElement& element) {
  struct Visitor {
    const char* operator()(const PhaseShifter&) const { return "phase_shifter"; }
    const char* operator()(const LinearAttenuator&) const { return "linear_attenuator"; }
    const char* operator()(const HardAperture&) const { return "hard_aperture"; }
    const char* operator()(const LensFT&) const { return "lens_ft"; }
    const char* operator()(const AxisFlip&) const { return "axis_flip"; }
    const char* operator()(const PositionBench&) const { return "position_bench"; }
    const char* operator()(const MomentumBench&) const { return "momentum_bench"; }
  };
  return std::visit(Visitor{}, element);
}

void WarningLog::add(std::string where, std::string message, double power_fraction) {
  entries.push_back(Entry{std::move(where), std::move(message), power_fraction});
}

ComplexField apply_phase_shifter(const ComplexField& field, double lo, double hi,
                                 double shift) {
  const double extent = field.grid.half_extent;
  if (lo > hi || lo < -extent || hi > extent) {
    throw InvalidRegionError("phase_shifter: region not contained in the grid extent");
  }
  const cplx factor = std::polar(1.0, wrap_2pi(shift));
  ComplexField out = field;
  for (std::size_t i = 0; i < out.grid.n_points; ++i) {
    const double x = out.grid.coord(i);
    if (x >= lo && x <= hi) out.samples[i] *= factor;
  }
  return out;
}

ComplexField apply_linear_attenuator(const ComplexField& field, double l) {
  if (!(l > 0.0)) {
    throw InvalidArgumentError("linear_attenuator: l must be positive");
  }
  ComplexField out = field;
  for (std::size_t i = 0; i < out.grid.n_points; ++i) {
    const double x = out.grid.coord(i);
    out.samples[i] *= (std::abs(x) <= l) ? std::abs(x) / l : 0.0;
  }
  return out;
}

ComplexField apply_hard_aperture(const ComplexField& field, double l) {
  if (!(l > 0.0)) {
    throw InvalidArgumentError("hard_aperture: l must be positive");
  }
  ComplexField out = field;
  for (std::size_t i = 0; i < out.grid.n_points; ++i) {
    if (std::abs(out.grid.coord(i)) > l) out.samples[i] = 0.0;
  }
  return out;
}

ComplexField apply_axis_flip(const ComplexField& field) {
  // Discrete parity on the [-L, L) grid: index i -> (n - i) mod n. The
  // unpaired -L sample maps to itself.
  const std::size_t n = field.grid.n_points;
  ComplexField out{field.grid, std::vector<cplx>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.samples[i] = field.samples[(n - i) % n];
  }
  return out;
}

GridSpec fourier_paired_grid(const GridSpec& grid, double lambda, double f) {
  const double dp = lambda * f / (static_cast<double>(grid.n_points) * grid.spacing());
  return GridSpec{grid.n_points, dp * static_cast<double>(grid.n_points) / 2.0};
}

ComplexField lens_fourier_transform(const ComplexField& field, double lambda, double f) {
  if (!(lambda > 0.0) || !(f > 0.0)) {
    throw InvalidArgumentError("lens_fourier_transform: lambda and f must be positive");
  }
  const std::size_t n = field.grid.n_points;
  if (n < 16 || !is_power_of_two(n)) {
    // The centered-DFT sign trick below needs n % 4 == 0.
    throw InvalidArgumentError("lens_fourier_transform: grid must be a power of two >= 16");
  }
  const double dx = field.grid.spacing();

  // Centered-coordinate DFT. With x_j = -L + j dx and p'_k = -L' + k dp',
  // the kernel e^{-i 2pi x_j p'_k / (lambda f)} splits into
  // (-1)^j (-1)^k e^{-2pi i jk/n} times e^{-i pi n/2}; the last factor is
  // exactly 1 because n is a power of two >= 16 (n % 4 == 0).
  ComplexField out{fourier_paired_grid(field.grid, lambda, f), std::vector<cplx>(n)};
  std::vector<cplx> work(n);
  for (std::size_t j = 0; j < n; ++j) {
    work[j] = (j % 2 == 0) ? field.samples[j] : -field.samples[j];
  }
  detail::FftPlan plan(n, FFTW_FORWARD);
  plan.execute(work.data(), work.data());

  const cplx prefactor = dx / std::sqrt(cplx(0.0, lambda * f));
  for (std::size_t k = 0; k < n; ++k) {
    out.samples[k] = (k % 2 == 0) ? prefactor * work[k] : -prefactor * work[k];
  }
  return out;
}

ComplexField apply_position_bench(const ComplexField& field, double l, WarningLog* log) {
  if (l > field.grid.half_extent) {
    throw InvalidArgumentError("position_bench: l exceeds the grid half-extent");
  }
  if (log != nullptr) {
    const double clipped = clipped_power_fraction(field, l);
    if (clipped > kClipWarnThreshold) {
      log->add("position_bench",
               "input power outside the attenuator aperture [-l, l] is clipped",
               clipped);
    }
  }
  ComplexField out = apply_phase_shifter(field, -l, 0.0, std::numbers::pi);
  return apply_linear_attenuator(out, l);
}

ComplexField apply_momentum_bench(const ComplexField& field, double lambda, double f,
                                  double l, WarningLog* log) {
  const GridSpec paired = fourier_paired_grid(field.grid, lambda, f);
  if (paired.half_extent < l) {
    throw FourierPlaneCoverageError(
        "momentum_bench: paired Fourier-plane half-extent " +
        std::to_string(paired.half_extent) + " m does not cover the operator region l = " +
        std::to_string(l) + " m; increase n_points");
  }

  ComplexField fourier = lens_fourier_transform(field, lambda, f);
  if (log != nullptr) {
    const double clipped = clipped_power_fraction(fourier, l);
    if (clipped > kClipWarnThreshold) {
      log->add("momentum_bench",
               "Fourier-plane power outside the attenuator aperture [-l, l] is clipped",
               clipped);
    }
  }
  // Run the bench on the Fourier plane without re-warning (the composite
  // owns the Fourier-plane clipping report above).
  ComplexField multiplied = apply_position_bench(fourier, l, nullptr);
  ComplexField imaged = lens_fourier_transform(multiplied, lambda, f);
  ComplexField out = apply_axis_flip(imaged);
  // The 4f system images back onto the input plane; reuse the input grid
  // so the round trip is bit-exact instead of rounding through
  // lambda f / (2 dp').
  out.grid = field.grid;
  return out;
}

ComplexField apply_element(const ComplexField& field, const OpticalElement& element,
                           WarningLog* log) {
  struct Visitor {
    const ComplexField& field;
    WarningLog* log;
    ComplexField operator()(const PhaseShifter& e) const {
      return apply_phase_shifter(field, e.lo, e.hi, e.shift);
    }
    ComplexField operator()(const LinearAttenuator& e) const {
      return apply_linear_attenuator(field, e.l);
    }
    ComplexField operator()(const HardAperture& e) const {
      return apply_hard_aperture(field, e.l);
    }
    ComplexField operator()(const LensFT& e) const {
      return lens_fourier_transform(field, e.lambda, e.f);
    }
    ComplexField operator()(const AxisFlip&) const { return apply_axis_flip(field); }
    ComplexField operator()(const PositionBench& e) const {
      return apply_position_bench(field, e.l, log);
    }
    ComplexField operator()(const MomentumBench& e) const {
      return apply_momentum_bench(field, e.lambda, e.f, e.l, log);
    }
  };
  return std::visit(Visitor{field, log}, element);
}

ComplexField run_pipeline(const ComplexField& field, const ElementPipeline& pipeline,
                          WarningLog* log) {
  ComplexField current = field;
  for (std::size_t i = 0; i < pipeline.elements.size(); ++i) {
    try {
      current = apply_element(current, pipeline.elements[i], log);
    } catch (const Error& e) {
      throw PipelineError("element " + std::to_string(i) + " (" +
                              element_name(pipeline.elements[i]) + "): " + e.what(),
                          i);
    }
  }
  return current;
}

}  // namespace mzsim
