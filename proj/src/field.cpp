#include "mzsim/field.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "mzsim/io_util.hpp"

namespace mzsim {

bool ComplexField::is_normalized() const {
  return std::abs(norm_sq(*this) - 1.0) < 1e-12;
}

double BenchParams::commutator_constant() const {
  return lambda * f / (2.0 * std::numbers::pi * l * l);
}

void validate_params(const BenchParams& params) {
  if (!(params.lambda > 0.0) || !(params.f > 0.0) || !(params.l > 0.0) ||
      !(params.w > 0.0) || !(params.hbar > 0.0)) {
    throw InvalidArgumentError("BenchParams: all physical constants must be positive");
  }
}

ComplexField gaussian_input(const GridSpec& grid, double w) {
  if (!(w > 0.0)) {
    throw InvalidArgumentError("gaussian_input: waist must be positive");
  }
  if (grid.half_extent < 4.0 * w) {
    throw TruncationRiskError("gaussian_input: half_extent < 4w, Gaussian tail would be clipped");
  }
  ComplexField field{grid, std::vector<cplx>(grid.n_points)};
  const double amp = std::pow(2.0 / (std::numbers::pi * w * w), 0.25);
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    const double x = grid.coord(i);
    field.samples[i] = amp * std::exp(-x * x / (w * w));
  }
  return field;
}

double norm_sq(const ComplexField& field) {
  double sum = 0.0;
  for (const cplx& v : field.samples) sum += std::norm(v);
  return sum * field.grid.spacing();
}

ComplexField normalize(const ComplexField& field) {
  const double n2 = norm_sq(field);
  if (!(n2 > 1e-300)) {
    throw ZeroNormError("normalize: field has (numerically) zero norm");
  }
  return scaled(field, 1.0 / std::sqrt(n2));
}

cplx overlap(const ComplexField& a, const ComplexField& b) {
  if (a.grid != b.grid) {
    throw IncompatibleGridError("overlap: fields live on different grids");
  }
  cplx sum = 0.0;
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    sum += std::conj(a.samples[i]) * b.samples[i];
  }
  return sum * a.grid.spacing();
}

double fidelity(const ComplexField& a, const ComplexField& b) {
  const double na = norm_sq(a);
  const double nb = norm_sq(b);
  if (!(na > 0.0) || !(nb > 0.0)) {
    throw ZeroNormError("fidelity: fields must be nonzero");
  }
  return std::norm(overlap(a, b)) / (na * nb);
}

double l2_distance(const ComplexField& a, const ComplexField& b) {
  if (a.grid != b.grid) {
    throw IncompatibleGridError("l2_distance: fields live on different grids");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    sum += std::norm(a.samples[i] - b.samples[i]);
  }
  return std::sqrt(sum * a.grid.spacing());
}

double l2_distance_up_to_global_phase(const ComplexField& a, const ComplexField& b) {
  const cplx ov = overlap(b, a);  // rotating a by -arg<b|a> maximizes Re<b|a'>
  if (std::abs(ov) == 0.0) return l2_distance(a, b);
  return l2_distance(scaled(a, std::conj(ov) / std::abs(ov)), b);
}

ComplexField scaled(const ComplexField& field, cplx factor) {
  ComplexField out = field;
  for (cplx& v : out.samples) v *= factor;
  return out;
}

ComplexField axpy(const ComplexField& a, cplx factor, const ComplexField& b) {
  if (a.grid != b.grid) {
    throw IncompatibleGridError("axpy: fields live on different grids");
  }
  ComplexField out = a;
  for (std::size_t i = 0; i < out.samples.size(); ++i) {
    out.samples[i] += factor * b.samples[i];
  }
  return out;
}

void write_field_csv(std::ostream& os, const ComplexField& field) {
  os << "x_m,re,im\n";
  for (std::size_t i = 0; i < field.grid.n_points; ++i) {
    os << format_g17(field.grid.coord(i)) << ','
       << format_g17(field.samples[i].real()) << ','
       << format_g17(field.samples[i].imag()) << '\n';
  }
}

ComplexField read_field_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "x_m,re,im") {
    throw InvalidArgumentError("read_field_csv: missing x_m,re,im header");
  }
  std::vector<double> xs;
  std::vector<cplx> samples;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    double x = 0.0, re = 0.0, im = 0.0;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &x, &re, &im) != 3) {
      throw InvalidArgumentError("read_field_csv: malformed row: " + line);
    }
    xs.push_back(x);
    samples.emplace_back(re, im);
  }
  if (xs.size() < 2) {
    throw InvalidArgumentError("read_field_csv: need at least two samples");
  }
  const double spacing = xs[1] - xs[0];
  const double half_extent = spacing * static_cast<double>(xs.size()) / 2.0;
  GridSpec grid{xs.size(), half_extent};
  return ComplexField{grid, std::move(samples)};
}

}  // namespace mzsim
