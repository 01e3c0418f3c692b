// Spatial Wigner function of a sampled field and negativity metrics.
//
// Convention (stated explicitly because conventions differ):
//
//   W(x, k) = (1/pi) * integral psi*(x + y) psi(x - y) e^{2 i k y} dy
//
// with the momentum axis in transverse wavenumber k = p / hbar [rad/m],
// normalized so that integral integral W dx dk = 1 for a unit-norm field.
// Multiply the k axis by hbar to recover SI momentum.

#pragma once

#include <string>
#include <vector>

#include "mzsim/field.hpp"

namespace mzsim {

struct WignerMap {
  std::vector<double> x_axis;  // positions [m], the field grid
  std::vector<double> k_axis;  // wavenumbers [rad/m]
  std::vector<double> values;  // row-major, x_axis.size() rows of k_axis.size()

  double at(std::size_t xi, std::size_t ki) const {
    return values[xi * k_axis.size() + ki];
  }
  double dx() const { return x_axis[1] - x_axis[0]; }
  double dk() const { return k_axis[1] - k_axis[0]; }
};

// Discretization: the correlation product is evaluated on a y-grid with
// the field spacing dx, zero-padded to n_pad = 2 n points so the circular
// correlation never wraps. The k axis pairs reciprocally with that y-grid:
//
//   dk = pi / (n_pad dx),  k half-extent = pi / (2 dx)
//
// (the e^{2iky} kernel halves the usual Nyquist range). Marginals over k
// then reduce to exact delta sums, so they match |psi(x)|^2 to rounding.
// Requires |norm_sq(field) - 1| <= 1e-9; the imaginary residue of the
// transform is asserted below 1e-10 of max |W| and discarded.
WignerMap wigner_transform(const ComplexField& field);

struct NegativityMetrics {
  double min_value = 0.0;
  double min_x = 0.0;  // location of the minimum
  double min_k = 0.0;
  double negative_volume = 0.0;  // integral integral |W| dx dk - integral integral W dx dk
  double max_value = 0.0;
};

NegativityMetrics negativity_metrics(const WignerMap& map);

// max |a - b| / max |a|; throws IncompatibleAxesError on axis mismatch.
double wigner_compare(const WignerMap& a, const WignerMap& b);

// JSON {x_axis, k_axis, values row-major, convention, hbar} and CSV
// triplet form "x_m,k_radpm,w".
std::string wigner_map_json(const WignerMap& map, double hbar);
std::string wigner_map_csv(const WignerMap& map);

}  // namespace mzsim
