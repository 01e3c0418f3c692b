#include "mzsim/wigner.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "fft_backend.hpp"
#include "mzsim/io_util.hpp"

namespace mzsim {

WignerMap wigner_transform(const ComplexField& field) {
  if (std::abs(norm_sq(field) - 1.0) > 1e-9) {
    throw PreconditionError("wigner_transform: field must be normalized");
  }
  const std::size_t n = field.grid.n_points;
  const std::size_t pad = 2 * n;
  const double dx = field.grid.spacing();
  const double dk = std::numbers::pi / (static_cast<double>(pad) * dx);

  WignerMap map;
  map.x_axis.resize(n);
  for (std::size_t i = 0; i < n; ++i) map.x_axis[i] = field.grid.coord(i);
  map.k_axis.resize(pad);
  for (std::size_t m = 0; m < pad; ++m) {
    map.k_axis[m] = (static_cast<double>(m) - static_cast<double>(n)) * dk;
  }
  map.values.assign(n * pad, 0.0);

  // Per x-row: c(y_j) = psi*(x + y_j) psi(x - y_j) on y_j = (j - n) dx,
  // then the e^{2 i k y} sum. With k_m = (m - n) dk and 2 dk dx = 2pi/pad
  // the kernel splits into (-1)^j (-1)^m e^{+2pi i jm / pad} (the constant
  // e^{i pi pad / 2} is exactly 1 since pad % 4 == 0), i.e. a backward DFT
  // of the sign-flipped row.
  detail::FftPlan plan(pad, FFTW_BACKWARD);
  std::vector<cplx> row(pad);
  std::vector<cplx> transformed(pad);
  const double scale = dx / std::numbers::pi;
  double max_abs = 0.0;
  double max_imag = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < pad; ++j) {
      const std::ptrdiff_t off = static_cast<std::ptrdiff_t>(j) - static_cast<std::ptrdiff_t>(n);
      const std::ptrdiff_t ip = static_cast<std::ptrdiff_t>(i) + off;
      const std::ptrdiff_t im = static_cast<std::ptrdiff_t>(i) - off;
      cplx c = 0.0;
      if (ip >= 0 && ip < static_cast<std::ptrdiff_t>(n) && im >= 0 &&
          im < static_cast<std::ptrdiff_t>(n)) {
        c = std::conj(field.samples[static_cast<std::size_t>(ip)]) *
            field.samples[static_cast<std::size_t>(im)];
      }
      row[j] = (j % 2 == 0) ? c : -c;
    }
    plan.execute(row.data(), transformed.data());
    for (std::size_t m = 0; m < pad; ++m) {
      const cplx v = ((m % 2 == 0) ? transformed[m] : -transformed[m]) * scale;
      map.values[i * pad + m] = v.real();
      max_abs = std::max(max_abs, std::abs(v.real()));
      max_imag = std::max(max_imag, std::abs(v.imag()));
    }
  }
  if (max_imag > 1e-10 * max_abs) {
    throw PreconditionError("wigner_transform: imaginary residue above 1e-10 of max");
  }
  return map;
}

NegativityMetrics negativity_metrics(const WignerMap& map) {
  NegativityMetrics metrics;
  metrics.min_value = map.values[0];
  metrics.max_value = map.values[0];
  double total = 0.0;
  double total_abs = 0.0;
  std::size_t min_index = 0;
  for (std::size_t idx = 0; idx < map.values.size(); ++idx) {
    const double v = map.values[idx];
    total += v;
    total_abs += std::abs(v);
    if (v < metrics.min_value) {
      metrics.min_value = v;
      min_index = idx;
    }
    if (v > metrics.max_value) metrics.max_value = v;
  }
  const double cell = map.dx() * map.dk();
  metrics.negative_volume = (total_abs - total) * cell;
  metrics.min_x = map.x_axis[min_index / map.k_axis.size()];
  metrics.min_k = map.k_axis[min_index % map.k_axis.size()];
  return metrics;
}

double wigner_compare(const WignerMap& a, const WignerMap& b) {
  if (a.x_axis != b.x_axis || a.k_axis != b.k_axis) {
    throw IncompatibleAxesError("wigner_compare: maps live on different axes");
  }
  double max_diff = 0.0;
  double max_a = 0.0;
  for (std::size_t idx = 0; idx < a.values.size(); ++idx) {
    max_diff = std::max(max_diff, std::abs(a.values[idx] - b.values[idx]));
    max_a = std::max(max_a, std::abs(a.values[idx]));
  }
  if (max_a == 0.0) {
    throw InvalidArgumentError("wigner_compare: reference map is identically zero");
  }
  return max_diff / max_a;
}

std::string wigner_map_json(const WignerMap& map, double hbar) {
  std::ostringstream os;
  os << "{\n  \"convention\": \"1/pi * integral, k = p/hbar\",\n"
     << "  \"k_axis_pairing\": \"dk = pi / (2 n dx), half extent pi / (2 dx)\",\n"
     << "  \"hbar\": " << format_g17(hbar) << ",\n  \"x_axis\": [";
  for (std::size_t i = 0; i < map.x_axis.size(); ++i) {
    os << (i ? "," : "") << format_g17(map.x_axis[i]);
  }
  os << "],\n  \"k_axis\": [";
  for (std::size_t m = 0; m < map.k_axis.size(); ++m) {
    os << (m ? "," : "") << format_g17(map.k_axis[m]);
  }
  os << "],\n  \"values\": [";
  for (std::size_t i = 0; i < map.x_axis.size(); ++i) {
    os << (i ? ",\n    [" : "\n    [");
    for (std::size_t m = 0; m < map.k_axis.size(); ++m) {
      os << (m ? "," : "") << format_g17(map.at(i, m));
    }
    os << ']';
  }
  os << "\n  ]\n}\n";
  return os.str();
}

std::string wigner_map_csv(const WignerMap& map) {
  std::ostringstream os;
  os << "x_m,k_radpm,w\n";
  for (std::size_t i = 0; i < map.x_axis.size(); ++i) {
    const std::string x = format_g17(map.x_axis[i]);
    for (std::size_t m = 0; m < map.k_axis.size(); ++m) {
      os << x << ',' << format_g17(map.k_axis[m]) << ',' << format_g17(map.at(i, m))
         << '\n';
    }
  }
  return os.str();
}

}  // namespace mzsim
