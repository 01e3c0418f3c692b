// Sampled 1-D complex transverse wave functions and the physical
// parameters of the optical scheme.
//
// Fields carry units of m^(-1/2): squared-norm sums are weighted by the
// grid spacing so that sum |psi_i|^2 dx is the dimensionless total power.
// ComplexField and GridSpec are immutable values after construction; all
// operations here are pure functions.

#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "mzsim/grid.hpp"

namespace mzsim {

using cplx = std::complex<double>;

struct ComplexField {
  GridSpec grid;
  std::vector<cplx> samples;

  // |sum |psi_i|^2 dx - 1| < 1e-12
  bool is_normalized() const;
};

// Physical constants of the scheme and the derived dimensionless
// commutator constant C = lambda * f / (2 pi l^2).
struct BenchParams {
  double lambda = 800e-9;        // wavelength [m]
  double f = 0.5;                // focal length [m]
  double l = 1.5e-3;             // half-width of the operator region [m]
  double w = 0.5e-3;             // Gaussian input waist [m]
  double hbar = 1.054571817e-34; // [J s], only needed to convert k to p

  double commutator_constant() const;

  bool operator==(const BenchParams&) const = default;
};

// Throws InvalidArgumentError unless all lengths are strictly positive.
void validate_params(const BenchParams& params);

// psi(x) = (2 / (pi w^2))^(1/4) exp(-x^2 / w^2), Gaussian with waist w.
// Requires half_extent >= 4w so the truncated tail power is negligible.
ComplexField gaussian_input(const GridSpec& grid, double w);

double norm_sq(const ComplexField& field);

ComplexField normalize(const ComplexField& field);

// <a|b> = sum conj(a_i) b_i dx
cplx overlap(const ComplexField& a, const ComplexField& b);

// |<a|b>|^2 / (norm_sq(a) norm_sq(b)), in [0, 1] up to rounding.
double fidelity(const ComplexField& a, const ComplexField& b);

// sqrt(sum |a_i - b_i|^2 dx)
double l2_distance(const ComplexField& a, const ComplexField& b);

// min over theta of ||e^{i theta} a - b||.
double l2_distance_up_to_global_phase(const ComplexField& a, const ComplexField& b);

ComplexField scaled(const ComplexField& field, cplx factor);

// a + factor * b on a shared grid.
ComplexField axpy(const ComplexField& a, cplx factor, const ComplexField& b);

// CSV serialization: header "x_m,re,im", one row per sample in ascending
// x, 17 significant digits.
void write_field_csv(std::ostream& os, const ComplexField& field);
ComplexField read_field_csv(std::istream& is);

}  // namespace mzsim
