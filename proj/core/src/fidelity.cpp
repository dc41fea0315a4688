// Copyright 2026 The Triport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "triport/fidelity.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace triport {

namespace {

constexpr double kPi = std::numbers::pi;

double shape(Scheme scheme, double theta, double phi) {
  const double s = std::sin(2.0 * theta) * std::sin(2.0 * phi);
  return scheme == Scheme::epr3 ? s * s * s : s * s;
}

struct PlacementAverage {
  double value = 0.0;
  double standard_error = 0.0;
  bool has_se = false;
};

PlacementAverage average_one_placement(const FidelityEvaluator& eval,
                                       const AverageMethod& method) {
  PlacementAverage out;
  if (const auto* quad = std::get_if<QuadratureMethod>(&method)) {
    if (quad->order < 8)
      throw std::invalid_argument("quadrature order must be at least 8");
    const GaussLegendre gl = gauss_legendre(quad->order);
    double acc = 0.0;
    for (int i = 0; i < quad->order; ++i) {
      const double t0 = (gl.nodes[i] + 1.0) * (kPi / 4.0);
      const double wt = gl.weights[i] * (kPi / 4.0) * std::sin(t0) *
                        std::cos(t0);
      for (int j = 0; j < quad->order; ++j) {
        const double phi_in = (gl.nodes[j] + 1.0) * kPi;
        // phase-space weight: (1/pi) * sin cos * jacobians; the 1/pi cancels
        // against the phi_in jacobian pi.
        acc += wt * gl.weights[j] *
               eval.total_fidelity(InputState::from_angles(t0, phi_in));
      }
    }
    out.value = acc;
    return out;
  }
  const auto& mc = std::get<MonteCarloMethod>(method);
  if (mc.samples < 1)
    throw std::invalid_argument("monte carlo needs at least one sample");
  std::mt19937_64 rng(mc.seed);
  double sum = 0.0, sum_sq = 0.0;
  for (long long i = 0; i < mc.samples; ++i) {
    const double u = uniform_unit(rng);
    const double t0 = 0.5 * std::acos(1.0 - 2.0 * u);
    const double phi_in = 2.0 * kPi * uniform_unit(rng);
    const double f = eval.total_fidelity(InputState::from_angles(t0, phi_in));
    sum += f;
    sum_sq += f * f;
  }
  const double n = static_cast<double>(mc.samples);
  out.value = sum / n;
  out.has_se = mc.samples > 1;
  if (out.has_se) {
    const double var = std::max(0.0, (sum_sq - sum * sum / n) / (n - 1.0));
    out.standard_error = std::sqrt(var / n);
  }
  return out;
}

AverageMethod derive_stream(const AverageMethod& method, int qubit) {
  if (const auto* mc = std::get_if<MonteCarloMethod>(&method)) {
    MonteCarloMethod derived = *mc;
    derived.seed = mc->seed ^ (0x9e3779b97f4a7c15ull *
                               static_cast<std::uint64_t>(qubit + 1));
    return derived;
  }
  return method;
}

}  // namespace

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

GaussLegendre gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("quadrature order must be >= 1");
  GaussLegendre gl;
  gl.nodes.assign(order, 0.0);
  gl.weights.assign(order, 0.0);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    gl.nodes[i] = -x;
    gl.nodes[order - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    gl.weights[i] = w;
    gl.weights[order - 1 - i] = w;
  }
  return gl;
}

FidelityReport average_fidelity(const SchemeConfig& cfg,
                                const NoiseSpec& noise,
                                const AverageMethod& method) {
  validate_config(cfg);
  validate_noise(noise);
  FidelityReport report;
  report.config = cfg;
  report.noise = noise;
  report.noise_budget = weak_noise_budget(noise.is_none() ? 0.0 : noise.p);

  const bool uniform =
      !noise.is_none() && noise.placement == NoisePlacement::uniform_average;
  if (!uniform) {
    NoiseSpec resolved = noise;
    resolved.placement = NoisePlacement::qubit;
    const PlacementAverage avg =
        average_one_placement(FidelityEvaluator(cfg, resolved), method);
    report.avg_fidelity_sim = avg.value;
    if (avg.has_se) report.mc_standard_error = avg.standard_error;
    report.avg_fidelity_closed =
        noise.is_none()
            ? closed_form(cfg.scheme, NoiseKind::none, cfg.theta, cfg.phi, 0.0)
            : closed_form_placement(cfg.scheme, noise.kind, resolved.qubit,
                                    cfg.theta, cfg.phi, noise.p);
  } else {
    double acc = 0.0, se_sq = 0.0;
    bool has_se = false;
    for (int qubit : channel_labels()) {
      NoiseSpec placed = NoiseSpec::on_qubit(noise.kind, noise.p, qubit);
      const PlacementAverage avg = average_one_placement(
          FidelityEvaluator(cfg, placed), derive_stream(method, qubit));
      acc += avg.value;
      report.per_placement.emplace_back(qubit, avg.value);
      if (avg.has_se) {
        has_se = true;
        se_sq += avg.standard_error * avg.standard_error;
      }
    }
    report.avg_fidelity_sim = acc / 6.0;
    if (has_se) report.mc_standard_error = std::sqrt(se_sq) / 6.0;
    report.avg_fidelity_closed =
        closed_form(cfg.scheme, noise.kind, cfg.theta, cfg.phi, noise.p);
  }
  report.abs_deviation =
      std::abs(report.avg_fidelity_sim - *report.avg_fidelity_closed);
  return report;
}

double closed_form(Scheme scheme, NoiseKind kind, double theta, double phi,
                   double p) {
  validate_config({scheme, theta, phi});
  if (kind != NoiseKind::none && (!(p >= 0.0) || !(p <= 1.0)))
    throw std::domain_error("noise probability must lie in [0, 1]");
  const double s = shape(scheme, theta, phi);
  const double noiseless = 2.0 / 3.0 + s / 3.0;
  switch (kind) {
    case NoiseKind::none:
      return noiseless;
    case NoiseKind::bit_flip:
      return scheme == Scheme::epr3 ? (1.0 - p) * noiseless
                                    : (1.0 - 5.0 * p / 6.0) * noiseless;
    case NoiseKind::phase_flip:
      return 2.0 / 3.0 + (1.0 - 2.0 * p) * s / 3.0;
    case NoiseKind::depolarizing:
      return scheme == Scheme::epr3
                 ? 4.0 * p / 9.0 + (1.0 - 4.0 * p / 3.0) * noiseless
                 : (2.0 / 3.0) * (1.0 - 5.0 * p / 9.0) +
                       (1.0 - 4.0 * p / 3.0) * s / 3.0;
  }
  throw std::invalid_argument("unknown noise kind");
}

double closed_form_placement(Scheme scheme, NoiseKind kind, int qubit,
                             double theta, double phi, double p) {
  validate_config({scheme, theta, phi});
  if (kind == NoiseKind::none) return closed_form(scheme, kind, theta, phi, p);
  // reuse the uniform-average validation of the placement label
  validate_noise(NoiseSpec::on_qubit(kind, p, qubit));
  const double s = shape(scheme, theta, phi);
  const double noiseless = 2.0 / 3.0 + s / 3.0;
  if (scheme == Scheme::epr3) {
    // all six placements are equivalent for the pair layout
    switch (kind) {
      case NoiseKind::bit_flip: return (1.0 - p) * noiseless;
      case NoiseKind::phase_flip: return 2.0 / 3.0 + (1.0 - 2.0 * p) * s / 3.0;
      default:
        return 4.0 * p / 9.0 + (1.0 - 4.0 * p / 3.0) * noiseless;
    }
  }
  switch (kind) {
    case NoiseKind::bit_flip:
      // qubit 6 feeds only the discarded-by-relabelling branch: immune
      return qubit == 6 ? noiseless : (1.0 - p) * noiseless;
    case NoiseKind::phase_flip:
      return 2.0 / 3.0 + (1.0 - 2.0 * p) * s / 3.0;
    default:
      return qubit == 6
                 ? 2.0 / 3.0 + (1.0 - 4.0 * p / 3.0) * s / 3.0
                 : (2.0 / 3.0) * (1.0 - 2.0 * p / 3.0) +
                       (1.0 - 4.0 * p / 3.0) * s / 3.0;
  }
}

double small_deviation_approx(Scheme scheme, double dtheta, double dphi) {
  const double r2 = dtheta * dtheta + dphi * dphi;
  return scheme == Scheme::epr3 ? 1.0 - 2.0 * r2 : 1.0 - (4.0 / 3.0) * r2;
}

double delta_f(double theta, double phi, NoiseKind kind, double p) {
  return closed_form(Scheme::ghz2, kind, theta, phi, p) -
         closed_form(Scheme::epr3, kind, theta, phi, p);
}

DeltaFMax delta_f_max(NoiseKind kind, double p) {
  // Both closed forms depend on the angles only through
  // s = sin(2 theta) sin(2 phi); maximize over s in (0, 1] by golden-section.
  const auto g = [&](double s) {
    const double theta = 0.5 * std::asin(s);
    return delta_f(theta, kPi / 4.0, kind, p);
  };
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = 1e-9, b = 1.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double gc = g(c), gd = g(d);
  for (int iter = 0; iter < 200 && (b - a) > 1e-13; ++iter) {
    if (gc > gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - inv_phi * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + inv_phi * (b - a);
      gd = g(d);
    }
  }
  DeltaFMax out;
  out.s_star = 0.5 * (a + b);
  out.phi_star = kPi / 4.0;
  out.theta_star = 0.5 * std::asin(out.s_star);
  out.value = g(out.s_star);
  return out;
}

std::vector<double> GridAxis::values() const {
  if (count < 1) throw std::invalid_argument("grid count must be >= 1");
  std::vector<double> v;
  v.reserve(count);
  if (count == 1) {
    v.push_back(min);
    return v;
  }
  for (int i = 0; i < count; ++i)
    v.push_back(min + (max - min) * i / (count - 1));
  return v;
}

std::vector<FidelityReport> grid_sweep(const SweepSpec& spec) {
  if (spec.schemes.empty() || spec.noises.empty())
    throw std::invalid_argument("sweep needs at least one scheme and noise");
  const std::vector<double> thetas = spec.theta.values();
  const std::vector<double> phis = spec.phi.values();
  const std::vector<double> ps = spec.p.values();
  std::vector<FidelityReport> out;
  for (Scheme scheme : spec.schemes) {
    for (NoiseKind kind : spec.noises) {
      const std::vector<double> p_axis =
          kind == NoiseKind::none ? std::vector<double>{0.0} : ps;
      for (double theta : thetas) {
        for (double phi : phis) {
          for (double p : p_axis) {
            NoiseSpec noise;
            if (kind == NoiseKind::none) {
              noise = NoiseSpec::none();
            } else if (spec.placement == NoisePlacement::uniform_average) {
              noise = NoiseSpec::uniform(kind, p);
            } else {
              noise = NoiseSpec::on_qubit(kind, p, spec.qubit);
            }
            out.push_back(average_fidelity({scheme, theta, phi}, noise,
                                           spec.method));
          }
        }
      }
    }
  }
  return out;
}

}  // namespace triport
