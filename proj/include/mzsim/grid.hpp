// Uniform 1-D sampling of the transverse coordinate.
//
// The grid spans [-half_extent, +half_extent) with the left endpoint
// included and the right one excluded, the standard FFT-compatible
// convention. Spacing is always derived from (n_points, half_extent) so
// that spacing * n_points == 2 * half_extent holds exactly.

#pragma once

#include <cstddef>

#include "mzsim/errors.hpp"

namespace mzsim {

struct GridSpec {
  std::size_t n_points = 0;
  double half_extent = 0.0;  // [m]

  double spacing() const { return 2.0 * half_extent / static_cast<double>(n_points); }

  // x_i = -half_extent + i * spacing, reproduced identically everywhere.
  double coord(std::size_t i) const {
    return -half_extent + static_cast<double>(i) * spacing();
  }

  bool operator==(const GridSpec&) const = default;
};

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline GridSpec make_grid(std::size_t n_points, double half_extent) {
  if (n_points < 16 || !is_power_of_two(n_points)) {
    throw InvalidArgumentError("make_grid: n_points must be a power of two >= 16");
  }
  if (!(half_extent > 0.0)) {
    throw InvalidArgumentError("make_grid: half_extent must be positive");
  }
  return GridSpec{n_points, half_extent};
}

}  // namespace mzsim
