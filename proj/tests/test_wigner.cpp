#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mzsim/interferometer.hpp"
#include "mzsim/wigner.hpp"
#include "oracles.hpp"

using namespace mzsim;

namespace {

const BenchParams kParams{};
constexpr double kPi = std::numbers::pi;

WignerMap gaussian_map(std::size_t n = 512) {
  return wigner_transform(normalize(gaussian_input(make_grid(n, 6e-3), kParams.w)));
}

double map_total(const WignerMap& map) {
  double sum = 0.0;
  for (const double v : map.values) sum += v;
  return sum * map.dx() * map.dk();
}

}  // namespace

TEST_CASE("wigner transform demands a normalized input") {
  const ComplexField psi = gaussian_input(make_grid(256, 6e-3), kParams.w);
  CHECK_THROWS_AS(wigner_transform(scaled(psi, 0.5)), PreconditionError);
}

TEST_CASE("Gaussian Wigner map: positive, peak 1/pi at the origin, unit mass") {
  const WignerMap map = gaussian_map();
  const NegativityMetrics m = negativity_metrics(map);

  CHECK(m.min_value >= -1e-9 * m.max_value);
  CHECK(m.max_value == doctest::Approx(1.0 / kPi).epsilon(1e-4));
  CHECK(m.negative_volume <= 1e-6);
  CHECK(map_total(map) == doctest::Approx(1.0).epsilon(1e-6));

  // The maximum sits at the phase-space origin.
  const std::size_t xi = map.x_axis.size() / 2;
  const std::size_t ki = map.k_axis.size() / 2;
  CHECK(map.at(xi, ki) == doctest::Approx(m.max_value).epsilon(1e-12));
  CHECK(map.x_axis[xi] == 0.0);
  CHECK(map.k_axis[ki] == 0.0);
}

TEST_CASE("wigner transform agrees with direct quadrature at probe points") {
  const GridSpec grid = make_grid(256, 6e-3);
  const ComplexField psi = oracles::random_smooth_field(grid, 0.5e-3, 17);
  const WignerMap map = wigner_transform(psi);

  double max_w = 0.0;
  for (const double v : map.values) max_w = std::max(max_w, std::abs(v));
  for (const std::size_t xi : {64u, 120u, 128u, 133u, 200u}) {
    for (const std::size_t ki : {200u, 255u, 256u, 270u, 320u}) {
      const double direct = oracles::direct_wigner_value(psi, xi, map.k_axis[ki]);
      CHECK(std::abs(map.at(xi, ki) - direct) <= 1e-12 * max_w);
    }
  }
}

TEST_CASE("wigner marginals reproduce |psi(x)|^2 and |phi(k)|^2") {
  const GridSpec grid = make_grid(256, 6e-3);
  const std::vector<ComplexField> fields = {
      normalize(gaussian_input(grid, kParams.w)),
      normalize(oracles::anticommutator_closed_form(grid, kParams.w)),
      oracles::random_smooth_field(grid, 0.5e-3, 23),
  };
  for (const ComplexField& psi : fields) {
    const WignerMap map = wigner_transform(psi);
    const double dx = map.dx();
    const double dk = map.dk();

    double err_x = 0.0;
    for (std::size_t i = 0; i < map.x_axis.size(); ++i) {
      double row = 0.0;
      for (std::size_t m = 0; m < map.k_axis.size(); ++m) row += map.at(i, m);
      err_x += std::abs(row * dk - std::norm(psi.samples[i]));
    }
    CHECK(err_x * dx <= 1e-6);

    // k-space reference by direct Fourier quadrature.
    double err_k = 0.0;
    for (std::size_t m = 0; m < map.k_axis.size(); ++m) {
      cplx phi = 0.0;
      for (std::size_t i = 0; i < grid.n_points; ++i) {
        phi += psi.samples[i] * std::polar(1.0, -map.k_axis[m] * grid.coord(i));
      }
      phi *= dx / std::sqrt(2.0 * kPi);
      double col = 0.0;
      for (std::size_t i = 0; i < map.x_axis.size(); ++i) col += map.at(i, m);
      err_k += std::abs(col * dx - std::norm(phi));
    }
    CHECK(err_k * dk <= 1e-6);
  }
}

TEST_CASE("wigner purity is 1 for pure states") {
  const GridSpec grid = make_grid(256, 6e-3);
  for (const ComplexField& psi :
       {normalize(gaussian_input(grid, kParams.w)),
        oracles::random_smooth_field(grid, 0.4e-3, 29)}) {
    const WignerMap map = wigner_transform(psi);
    double purity = 0.0;
    for (const double v : map.values) purity += v * v;
    purity *= 2.0 * kPi * map.dx() * map.dk();
    CHECK(purity == doctest::Approx(1.0).epsilon(1e-4));
  }
}

TEST_CASE("wigner parity covariance: W of psi(-x) is W(-x,-k)") {
  const GridSpec grid = make_grid(256, 6e-3);
  const ComplexField psi = oracles::random_smooth_field(grid, 0.5e-3, 37);
  const WignerMap map = wigner_transform(psi);
  const WignerMap flipped = wigner_transform(apply_axis_flip(psi));

  const std::size_t nx = map.x_axis.size();
  const std::size_t nk = map.k_axis.size();
  double max_dev = 0.0;
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t m = 0; m < nk; ++m) {
      const double mirrored = map.at((nx - i) % nx, (nk - m) % nk);
      max_dev = std::max(max_dev, std::abs(flipped.at(i, m) - mirrored));
    }
  }
  CHECK(max_dev <= 1e-10);
}

TEST_CASE("wigner global-phase invariance") {
  const GridSpec grid = make_grid(256, 6e-3);
  const ComplexField psi = normalize(gaussian_input(grid, kParams.w));
  const WignerMap reference = wigner_transform(psi);
  for (const double theta : {kPi / 7.0, 1.0, 3.0}) {
    const WignerMap rotated = wigner_transform(scaled(psi, std::polar(1.0, theta)));
    double max_dev = 0.0;
    for (std::size_t idx = 0; idx < reference.values.size(); ++idx) {
      max_dev = std::max(max_dev, std::abs(rotated.values[idx] - reference.values[idx]));
    }
    CHECK(max_dev <= 1e-12);
  }
}

TEST_CASE("anti-commutator state: negativity matches the closed-form oracle") {
  const GridSpec grid = make_grid(512, 6e-3);
  const ComplexField state = normalize(oracles::anticommutator_closed_form(grid, kParams.w));
  const WignerMap map = wigner_transform(state);
  const NegativityMetrics m = negativity_metrics(map);

  // The state is the n = 2 oscillator eigenstate in scaled coordinates
  // xi = sqrt(2) x / w, eta = w k / sqrt(2); its Wigner function is
  // (1/pi) e^{-s} (2 s^2 - 4 s + 1) with s = xi^2 + eta^2. Analytic
  // extrema and negative volume follow from the antiderivative
  // -e^{-s} (2 s^2 + 1).
  const double s_min = 2.0 - std::sqrt(6.0) / 2.0;
  const double w_min_analytic =
      std::exp(-s_min) * (2.0 * s_min * s_min - 4.0 * s_min + 1.0) / kPi;
  const double s_a = 1.0 - std::sqrt(2.0) / 2.0;
  const double s_b = 1.0 + std::sqrt(2.0) / 2.0;
  const auto antiderivative = [](double s) {
    return -std::exp(-s) * (2.0 * s * s + 1.0);
  };
  const double negvol_analytic = -2.0 * (antiderivative(s_b) - antiderivative(s_a));

  CHECK(m.min_value < 0.0);
  CHECK(m.min_value == doctest::Approx(w_min_analytic).epsilon(1e-3));
  CHECK(-m.min_value >= 0.05 * m.max_value);
  CHECK(m.negative_volume == doctest::Approx(negvol_analytic).epsilon(1e-3));
  CHECK(m.negative_volume > 0.01);

  // Minimum lies on the circle s = s_min in scaled phase-space units.
  const double w = kParams.w;
  const double s_at_min =
      2.0 * m.min_x * m.min_x / (w * w) + w * w * m.min_k * m.min_k / 2.0;
  CHECK(s_at_min == doctest::Approx(s_min).epsilon(0.05));

  // Direct-quadrature cross-check of the minimum's value.
  std::size_t xi = 0;
  while (map.x_axis[xi] != m.min_x) ++xi;
  CHECK(oracles::direct_wigner_value(state, xi, m.min_k) ==
        doctest::Approx(m.min_value).epsilon(1e-10));
}

TEST_CASE("commutator port state keeps the input Wigner map") {
  const GridSpec grid = make_grid(512, 6e-3);
  const ComplexField psi = gaussian_input(grid, kParams.w);
  const PortOutputs ports =
      run_interferometer(psi, default_interferometer(kParams, kPi));

  const WignerMap input_map = wigner_transform(normalize(psi));
  const WignerMap comm_map = wigner_transform(normalize(ports.d1));
  CHECK(wigner_compare(input_map, comm_map) <= 1e-3);

  const NegativityMetrics mi = negativity_metrics(input_map);
  const NegativityMetrics mc = negativity_metrics(comm_map);
  CHECK(std::abs(mc.max_value - mi.max_value) <= 1e-3 * mi.max_value);
  CHECK(std::abs(mc.min_value - mi.min_value) <= 1e-3 * mi.max_value);
  // Residual negativity of the commutator port stays far below the
  // anti-commutator's detection threshold.
  CHECK(mc.negative_volume <= 0.01);
}

TEST_CASE("wigner_compare separates the input from the anti-commutator state") {
  const GridSpec grid = make_grid(512, 6e-3);
  const WignerMap input_map = wigner_transform(normalize(gaussian_input(grid, kParams.w)));
  const WignerMap anti_map = wigner_transform(
      normalize(oracles::anticommutator_closed_form(grid, kParams.w)));

  CHECK(wigner_compare(input_map, input_map) == 0.0);
  CHECK(wigner_compare(input_map, anti_map) >= 0.3);

  const WignerMap other = gaussian_map(256);
  CHECK_THROWS_AS(wigner_compare(input_map, other), IncompatibleAxesError);
}

TEST_CASE("wigner serialization formats") {
  const WignerMap map = gaussian_map(16);
  const std::string json = wigner_map_json(map, kParams.hbar);
  CHECK(json.find("\"convention\": \"1/pi * integral, k = p/hbar\"") != std::string::npos);
  CHECK(json.find("\"hbar\"") != std::string::npos);
  const std::string csv = wigner_map_csv(map);
  CHECK(csv.rfind("x_m,k_radpm,w\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') ==
        static_cast<long>(1 + map.x_axis.size() * map.k_axis.size()));
}
