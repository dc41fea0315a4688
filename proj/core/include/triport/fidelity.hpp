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

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <variant>
#include <vector>

#include "triport/protocol.hpp"

// Input-averaged fidelities and the closed forms they must reproduce.  The
// average is over the uniform (Haar-marginal) input measure
// dV = sin(t0) cos(t0) dt0 dphi_in / pi on t0 in [0, pi/2], phi_in in
// [0, 2pi).

namespace triport {

/// Product Gauss-Legendre rule, order >= 8 per axis.
struct QuadratureMethod {
  int order = 32;
};

/// Plain Monte Carlo sampling of the input measure; the seed is mandatory so
/// every run is reproducible.
struct MonteCarloMethod {
  long long samples = 10000;
  std::uint64_t seed = 0;
};

using AverageMethod = std::variant<QuadratureMethod, MonteCarloMethod>;

struct FidelityReport {
  SchemeConfig config;
  NoiseSpec noise;
  double avg_fidelity_sim = 0.0;
  std::optional<double> avg_fidelity_closed;
  std::optional<double> abs_deviation;
  /// Per-qubit averages, filled when the placement is the uniform average.
  std::vector<std::pair<int, double>> per_placement;
  std::optional<double> mc_standard_error;
  WeakNoiseBudget noise_budget;
};

/// Gauss-Legendre nodes/weights on [-1, 1] in ascending node order.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendre gauss_legendre(int order);

/// 53-bit uniform double in [0, 1) built directly from the generator word,
/// so identical seeds give identical streams on every platform.
double uniform_unit(std::mt19937_64& rng);

/// Simulated input-averaged fidelity.  A uniform_average noise placement is
/// resolved here as the arithmetic mean over the six channel qubits.
FidelityReport average_fidelity(const SchemeConfig& cfg,
                                const NoiseSpec& noise,
                                const AverageMethod& method);

/// Closed-form input-averaged fidelity with the noise placement averaged
/// uniformly over the six channel qubits (p ignored for NoiseKind::none).
double closed_form(Scheme scheme, NoiseKind kind, double theta, double phi,
                   double p);

/// Closed-form input-averaged fidelity with noise on one concrete qubit.
double closed_form_placement(Scheme scheme, NoiseKind kind, int qubit,
                             double theta, double phi, double p);

/// Quadratic small-deviation model around theta = phi = pi/4:
///   epr3: 1 - 2 (dtheta^2 + dphi^2);  ghz2: 1 - (4/3)(dtheta^2 + dphi^2).
double small_deviation_approx(Scheme scheme, double dtheta, double dphi);

/// Closed-form advantage of ghz2 over epr3 at equal angles (uniform-average
/// placement for noisy kinds).
double delta_f(double theta, double phi, NoiseKind kind, double p);

/// Maximum of delta_f over the open angle square.  Both closed forms depend
/// on the angles only through s = sin(2 theta) sin(2 phi), so the optimum is
/// reported as s_star with the representative point phi = pi/4,
/// theta = asin(s_star)/2.
struct DeltaFMax {
  double s_star = 0.0;
  double theta_star = 0.0;
  double phi_star = 0.0;
  double value = 0.0;
};

DeltaFMax delta_f_max(NoiseKind kind, double p);

/// Uniform grid of `count` values from min to max inclusive (just {min} when
/// count is 1).
struct GridAxis {
  double min = 0.0;
  double max = 0.0;
  int count = 1;

  std::vector<double> values() const;
};

struct SweepSpec {
  std::vector<Scheme> schemes;
  std::vector<NoiseKind> noises;
  GridAxis theta;
  GridAxis phi;
  GridAxis p;
  NoisePlacement placement = NoisePlacement::uniform_average;
  int qubit = 2;  // used when placement == qubit
  AverageMethod method = QuadratureMethod{};
};

/// One report per grid point, row-major in (scheme, noise, theta, phi, p).
/// NoiseKind::none collapses the p axis to the single value 0.
std::vector<FidelityReport> grid_sweep(const SweepSpec& spec);

}  // namespace triport
