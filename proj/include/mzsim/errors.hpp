// Error types thrown by the simulation core. The bench-file parser never
// throws; it reports diagnostics instead (see bench_parser.hpp).

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mzsim {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad constructor/operation argument (non-power-of-two grid, l > extent, ...).
struct InvalidArgumentError : Error {
  using Error::Error;
};

// Requested Gaussian does not fit the grid (half_extent < 4w).
struct TruncationRiskError : Error {
  using Error::Error;
};

// normalize() on a (numerically) zero field.
struct ZeroNormError : Error {
  using Error::Error;
};

// Binary field operation across two different grids.
struct IncompatibleGridError : Error {
  using Error::Error;
};

// Phase-shifter region not contained in the grid extent.
struct InvalidRegionError : Error {
  using Error::Error;
};

// Momentum bench: the paired Fourier-plane grid does not cover [-l, l].
struct FourierPlaneCoverageError : Error {
  using Error::Error;
};

// Operation precondition violated (e.g. Wigner transform of an
// unnormalized field).
struct PreconditionError : Error {
  using Error::Error;
};

// Element failure inside a pipeline, annotated with the element index.
struct PipelineError : Error {
  PipelineError(const std::string& what, std::size_t index)
      : Error(what), element_index(index) {}
  std::size_t element_index;
};

// Mismatched axes in a Wigner-map comparison.
struct IncompatibleAxesError : Error {
  using Error::Error;
};

}  // namespace mzsim
