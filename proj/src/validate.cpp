#include "mzsim/validate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "mzsim/io_util.hpp"
#include "mzsim/wigner.hpp"

namespace mzsim {

namespace {

ValidationCheck check_le(std::string name, double measured, double threshold,
                         std::string detail = {}) {
  return ValidationCheck{std::move(name), measured <= threshold, measured, threshold,
                         "<=", std::move(detail)};
}

ValidationCheck check_ge(std::string name, double measured, double threshold,
                         std::string detail = {}) {
  return ValidationCheck{std::move(name), measured >= threshold, measured, threshold,
                         ">=", std::move(detail)};
}

ValidationCheck check_failed(std::string name, double threshold, std::string op,
                             std::string detail) {
  return ValidationCheck{std::move(name), false, std::numeric_limits<double>::infinity(),
                         threshold, std::move(op), std::move(detail)};
}

double clipped_fraction(const ComplexField& field, double l) {
  double total = 0.0, outside = 0.0;
  for (std::size_t i = 0; i < field.grid.n_points; ++i) {
    const double p = std::norm(field.samples[i]);
    total += p;
    if (std::abs(field.grid.coord(i)) > l) outside += p;
  }
  return total > 0.0 ? outside / total : 0.0;
}

// Analytic anti-commutator state (4x^2/w^2 - 1) psi(x), normalized.
ComplexField anticommutator_state(const GridSpec& grid, double w) {
  ComplexField state = gaussian_input(grid, w);
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    const double x = grid.coord(i);
    state.samples[i] *= 4.0 * x * x / (w * w) - 1.0;
  }
  return normalize(state);
}

}  // namespace

bool ValidationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ValidationCheck& c) { return c.pass; });
}

ValidationReport run_validation(const BenchDocument& doc) {
  ValidationReport report;
  const BenchParams& params = doc.params;
  const double C = params.commutator_constant();
  WarningLog log;

  const ComplexField input = gaussian_input(doc.grid, params.w);

  // Containment: the scheme assumes negligible amplitude beyond the
  // attenuator aperture; escalate the clipping warning to a failure.
  report.checks.push_back(check_le("input_containment", clipped_fraction(input, params.l),
                                   1e-6, "input power fraction outside [-l, l]"));

  // Lens-transform hygiene on the input Gaussian.
  try {
    const ComplexField fourier = lens_fourier_transform(input, params.lambda, params.f);
    report.checks.push_back(check_le("parseval_lens_transform",
                                     std::abs(norm_sq(fourier) - norm_sq(input)), 1e-9,
                                     "norm change under the lens transform"));

    const double w_fourier = params.lambda * params.f / (std::numbers::pi * params.w);
    ComplexField analytic{fourier.grid, std::vector<cplx>(fourier.grid.n_points)};
    const double amp = std::pow(2.0 / (std::numbers::pi * w_fourier * w_fourier), 0.25);
    const cplx phase = std::polar(1.0, -std::numbers::pi / 4.0);
    for (std::size_t i = 0; i < analytic.grid.n_points; ++i) {
      const double p = analytic.grid.coord(i);
      analytic.samples[i] = amp * std::exp(-p * p / (w_fourier * w_fourier)) * phase;
    }
    report.checks.push_back(check_le("lens_gaussian_pair_l2",
                                     l2_distance(fourier, analytic), 1e-9,
                                     "distance to the analytic Gaussian Fourier pair"));

    double second_moment = 0.0;
    for (std::size_t i = 0; i < fourier.grid.n_points; ++i) {
      const double p = fourier.grid.coord(i);
      second_moment += p * p * std::norm(fourier.samples[i]);
    }
    second_moment *= fourier.grid.spacing();
    const double w_measured = 2.0 * std::sqrt(second_moment);
    report.checks.push_back(check_le("lens_gaussian_waist",
                                     std::abs(w_measured / w_fourier - 1.0), 1e-6,
                                     "relative error of the Fourier-plane waist " +
                                         format_g17(w_measured) + " m vs lambda f / (pi w)"));

    const ComplexField twice = lens_fourier_transform(fourier, params.lambda, params.f);
    ComplexField flipped = apply_axis_flip(input);
    flipped.grid = twice.grid;
    report.checks.push_back(check_le("double_transform_parity",
                                     1.0 - fidelity(twice, flipped), 1e-9,
                                     "fidelity deficit vs the axis-flipped input"));
  } catch (const Error& e) {
    report.checks.push_back(check_failed("lens_transform_suite", 0.0, "<=", e.what()));
  }

  // Interferometer oracles at phi = pi and phi = 0.
  try {
    InterferometerSpec spec = doc.interferometer();
    spec.phase = std::numbers::pi;
    const PortOutputs at_pi = run_interferometer(input, spec, &log);
    spec.phase = 0.0;
    const PortOutputs at_zero = run_interferometer(input, spec, &log);

    // 2 d1(pi) recovers (U_lower - U_upper) psi, which equals C psi since
    // the arms' common -i meets the commutator's iC.
    const ComplexField commutator = scaled(at_pi.d1, 2.0);
    report.checks.push_back(check_le("commutator_identity",
                                     l2_distance(commutator, scaled(input, C)), 1e-4,
                                     "|| (x~p~ - p~x~) psi - C psi || with C = " +
                                         format_g17(C)));

    report.checks.push_back(check_ge("commutator_port_fidelity",
                                     fidelity(normalize(at_pi.d1), input), 0.9999,
                                     "fidelity of the normalized phi=pi port with the input"));

    report.checks.push_back(check_le("commutator_port_power",
                                     std::abs(at_pi.raw_probabilities.first / (C * C / 4.0) - 1.0),
                                     0.02, "relative deviation of norm_sq(d1) from C^2/4"));

    report.checks.push_back(check_le(
        "anticommutator_closed_form",
        l2_distance_up_to_global_phase(normalize(at_zero.d1),
                                       anticommutator_state(doc.grid, params.w)),
        1e-3, "normalized phi=0 port vs (4x^2/w^2 - 1) psi"));
  } catch (const Error& e) {
    report.checks.push_back(check_failed("commutator_identity", 1e-4, "<=", e.what()));
    report.checks.push_back(check_failed("anticommutator_closed_form", 1e-3, "<=", e.what()));
  }

  // Wigner marginals and purity on a runtime-capped grid.
  try {
    GridSpec wgrid = doc.grid;
    wgrid.n_points = std::min<std::size_t>(wgrid.n_points, 1024);
    report.wigner_grid_points = wgrid.n_points;
    const ComplexField wfield = normalize(gaussian_input(wgrid, params.w));
    const WignerMap map = wigner_transform(wfield);
    const double dx = map.dx();
    const double dk = map.dk();

    double marginal_x_err = 0.0;
    for (std::size_t i = 0; i < map.x_axis.size(); ++i) {
      double row = 0.0;
      for (std::size_t m = 0; m < map.k_axis.size(); ++m) row += map.at(i, m);
      marginal_x_err += std::abs(row * dk - std::norm(wfield.samples[i]));
    }
    marginal_x_err *= dx;
    report.checks.push_back(check_le("wigner_marginal_position", marginal_x_err, 1e-6,
                                     "L1 distance of the k-marginal from |psi(x)|^2"));

    // k-space reference by direct quadrature of the Fourier integral.
    double marginal_k_err = 0.0;
    for (std::size_t m = 0; m < map.k_axis.size(); ++m) {
      cplx phi = 0.0;
      for (std::size_t i = 0; i < wgrid.n_points; ++i) {
        phi += wfield.samples[i] * std::polar(1.0, -map.k_axis[m] * wgrid.coord(i));
      }
      phi *= dx / std::sqrt(2.0 * std::numbers::pi);
      double col = 0.0;
      for (std::size_t i = 0; i < map.x_axis.size(); ++i) col += map.at(i, m);
      marginal_k_err += std::abs(col * dx - std::norm(phi));
    }
    marginal_k_err *= dk;
    report.checks.push_back(check_le("wigner_marginal_momentum", marginal_k_err, 1e-6,
                                     "L1 distance of the x-marginal from |phi(k)|^2"));

    double purity = 0.0;
    for (const double v : map.values) purity += v * v;
    purity *= 2.0 * std::numbers::pi * dx * dk;
    report.checks.push_back(check_le("wigner_purity", std::abs(purity - 1.0), 1e-4,
                                     "deviation of 2 pi * integral W^2 from 1"));
  } catch (const Error& e) {
    report.checks.push_back(check_failed("wigner_suite", 0.0, "<=", e.what()));
  }

  report.warnings = log.entries;
  return report;
}

std::string format_validation_report(const ValidationReport& report) {
  std::ostringstream os;
  for (const ValidationCheck& c : report.checks) {
    os << (c.pass ? "PASS" : "FAIL") << ' ' << c.name << " measured=" << format_g17(c.measured)
       << ' ' << c.op << " threshold=" << format_g17(c.threshold);
    if (!c.detail.empty()) os << "  (" << c.detail << ')';
    os << '\n';
  }
  for (const WarningLog::Entry& w : report.warnings) {
    os << "WARN " << w.where << ": " << w.message
       << " (power fraction " << format_g17(w.power_fraction) << ")\n";
  }
  os << (report.all_pass() ? "all checks passed" : "one or more checks FAILED") << '\n';
  return os.str();
}

}  // namespace mzsim
