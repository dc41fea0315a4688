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

#include "triport/noise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace triport {

namespace {

void validate_probability(double p) {
  if (!(p >= 0.0) || !(p <= 1.0))
    throw std::domain_error("noise probability must lie in [0, 1]");
}

void validate_channel_label(int qubit) {
  const auto labels = channel_labels();
  if (std::find(labels.begin(), labels.end(), qubit) == labels.end())
    throw std::invalid_argument(
        "noise placement must be one of the channel qubits 2,4,6,7,8,9");
}

double beta0(double theta) { return std::cos(theta); }
double beta1(double theta) { return std::sin(theta); }

// Reduced state of an epr3 pair (2,7) with noise on qubit 2.  Entry layout:
// <k l| rho |m n> at row kl, column mn.
Matrix epr_pair_reference(NoiseKind kind, double theta, double p) {
  const double b[2] = {beta0(theta), beta1(theta)};
  Matrix out(4);
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l)
      for (int m = 0; m < 2; ++m)
        for (int n = 0; n < 2; ++n) {
          const double base = b[l] * b[n];
          double val = 0.0;
          const bool diag = (k == l) && (m == n);
          const bool flipped = (k == (l ^ 1)) && (m == (n ^ 1));
          const double sign = ((k ^ m) & 1) ? -1.0 : 1.0;
          switch (kind) {
            case NoiseKind::bit_flip:
              val = (diag ? (1.0 - p) : 0.0) + (flipped ? p : 0.0);
              break;
            case NoiseKind::phase_flip:
              val = diag ? (1.0 - p + p * sign) : 0.0;
              break;
            case NoiseKind::depolarizing:
              val = (diag ? (1.0 - p + (p / 3.0) * sign) : 0.0) +
                    (flipped ? (p / 3.0) * (1.0 + sign) : 0.0);
              break;
            default:
              val = diag ? 1.0 : 0.0;
          }
          out.at(static_cast<std::size_t>(k * 2 + l),
                 static_cast<std::size_t>(m * 2 + n)) = base * val;
        }
  return out;
}

// Reduced state of the ghz2 triple (2,6,8).  Entry layout: <k l m| rho |n p q>
// at row klm, column npq.  Noisy qubit: 2 for phase flip, 6 otherwise.
Matrix ghz_triple_reference(NoiseKind kind, double theta, double p) {
  const double b[2] = {beta0(theta), beta1(theta)};
  Matrix out(8);
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l)
      for (int m = 0; m < 2; ++m)
        for (int q0 = 0; q0 < 2; ++q0)
          for (int q1 = 0; q1 < 2; ++q1)
            for (int q2 = 0; q2 < 2; ++q2) {
              const double base = b[k] * b[q0];
              double val = 0.0;
              switch (kind) {
                case NoiseKind::bit_flip:
                  // flip on the middle label (qubit 6)
                  if (k == m && q0 == q2) {
                    if (l == k && q1 == q0) val = 1.0 - p;
                    if (l == (k ^ 1) && q1 == (q0 ^ 1)) val += p;
                  }
                  break;
                case NoiseKind::phase_flip:
                  // dephasing on the first label (qubit 2)
                  if (k == l && l == m && q0 == q1 && q1 == q2)
                    val = 1.0 - p + p * (((k ^ q0) & 1) ? -1.0 : 1.0);
                  break;
                case NoiseKind::depolarizing: {
                  // depolarizing on the middle label (qubit 6)
                  if (k == m && q0 == q2) {
                    const double sign = ((l ^ q1) & 1) ? -1.0 : 1.0;
                    if (l == k && q1 == q0)
                      val = 1.0 - p + (p / 3.0) * sign;
                    if (l == (k ^ 1) && q1 == (q0 ^ 1))
                      val += (p / 3.0) * (1.0 + sign);
                  }
                  break;
                }
                default:
                  if (k == l && l == m && q0 == q1 && q1 == q2) val = 1.0;
              }
              out.at(static_cast<std::size_t>(k * 4 + l * 2 + m),
                     static_cast<std::size_t>(q0 * 4 + q1 * 2 + q2)) =
                  base * val;
            }
  return out;
}

}  // namespace

const char* noise_name(NoiseKind k) {
  switch (k) {
    case NoiseKind::none: return "none";
    case NoiseKind::bit_flip: return "bitflip";
    case NoiseKind::phase_flip: return "phaseflip";
    case NoiseKind::depolarizing: return "depolarizing";
  }
  return "unknown";
}

NoiseSpec NoiseSpec::on_qubit(NoiseKind kind, double p, int qubit) {
  NoiseSpec spec{kind, p, NoisePlacement::qubit, qubit};
  validate_noise(spec);
  return spec;
}

NoiseSpec NoiseSpec::uniform(NoiseKind kind, double p) {
  NoiseSpec spec{kind, p, NoisePlacement::uniform_average, 2};
  validate_noise(spec);
  return spec;
}

void validate_noise(const NoiseSpec& spec) {
  validate_probability(spec.p);
  if (!spec.is_none() && spec.placement == NoisePlacement::qubit)
    validate_channel_label(spec.qubit);
}

std::vector<Matrix> kraus_set(NoiseKind kind, double p) {
  validate_probability(p);
  std::vector<Matrix> ops;
  switch (kind) {
    case NoiseKind::none:
      ops.push_back(Matrix::identity(2));
      break;
    case NoiseKind::bit_flip:
      ops.push_back(Matrix::identity(2).scaled(std::sqrt(1.0 - p)));
      ops.push_back(pauli_x().scaled(std::sqrt(p)));
      break;
    case NoiseKind::phase_flip:
      ops.push_back(Matrix::identity(2).scaled(std::sqrt(1.0 - p)));
      ops.push_back(pauli_z().scaled(std::sqrt(p)));
      break;
    case NoiseKind::depolarizing:
      ops.push_back(Matrix::identity(2).scaled(std::sqrt(1.0 - p)));
      ops.push_back(pauli_x().scaled(std::sqrt(p / 3.0)));
      ops.push_back(pauli_y().scaled(std::sqrt(p / 3.0)));
      ops.push_back(pauli_z().scaled(std::sqrt(p / 3.0)));
      break;
  }
  return ops;
}

DensityOperator apply_noise(const DensityOperator& rho, int qubit_label,
                            NoiseKind kind, double p, const QubitMap& map) {
  const int target[] = {qubit_label};
  Matrix out(rho.matrix().dim());
  for (const Matrix& a : kraus_set(kind, p)) {
    const Matrix full = embed(a, target, map, rho.num_qubits());
    out += sandwich(full, rho.matrix());
  }
  return DensityOperator(rho.num_qubits(), std::move(out));
}

std::vector<StateVector> noise_branches(const StateVector& psi, int slot,
                                        NoiseKind kind, double p) {
  const int n = psi.num_qubits();
  if (slot < 0 || slot >= n)
    throw std::invalid_argument("noise slot exceeds register size");
  std::vector<StateVector> branches;
  for (const Matrix& a : kraus_set(kind, p)) {
    StateVector branch(n);
    for (std::size_t i = 0; i < psi.dim(); ++i) {
      if (psi[i] == Complex{}) continue;
      const int bit = bit_at(i, slot, n);
      for (int out_bit = 0; out_bit < 2; ++out_bit) {
        const Complex amp = a.at(static_cast<std::size_t>(out_bit),
                                 static_cast<std::size_t>(bit));
        if (amp == Complex{}) continue;
        branch[with_bit(i, slot, n, out_bit)] += amp * psi[i];
      }
    }
    branches.push_back(std::move(branch));
  }
  return branches;
}

WeakNoiseBudget weak_noise_budget(double p) {
  validate_probability(p);
  WeakNoiseBudget b;
  const double q = 1.0 - p;
  b.p0 = std::pow(q, 6);
  b.p1 = 6.0 * p * std::pow(q, 5);
  b.p2 = 15.0 * p * p * std::pow(q, 4);
  b.single_error_dominant = p < 2.0 / 7.0;
  return b;
}

GammaCheck noisy_gamma_check(Scheme scheme, NoiseKind kind, int qubit,
                             double theta, double p) {
  validate_probability(p);
  const bool covered =
      (scheme == Scheme::epr3 && qubit == 2 &&
       (kind == NoiseKind::bit_flip || kind == NoiseKind::phase_flip ||
        kind == NoiseKind::depolarizing)) ||
      (scheme == Scheme::ghz2 &&
       ((kind == NoiseKind::bit_flip && qubit == 6) ||
        (kind == NoiseKind::phase_flip && qubit == 2) ||
        (kind == NoiseKind::depolarizing && qubit == 6)));
  if (!covered)
    throw std::invalid_argument(
        "no closed-form gamma tensor for this (scheme, kind, qubit); covered: "
        "epr3 bitflip/phaseflip/depolarizing on 2, ghz2 bitflip on 6, "
        "ghz2 phaseflip on 2, ghz2 depolarizing on 6");

  SchemeConfig cfg{scheme, theta, 0.4};  // basis angle unused by the channel
  ChannelState ch = build_channel(cfg);
  ch.rho = apply_noise(ch.rho, qubit, kind, p, channel_qubit_map());
  const auto& group = channel_groups(scheme)[0];  // both covered qubits sit
                                                  // in the first wired group
  GammaCheck check;
  check.simulated =
      partial_trace(ch.rho, group, channel_qubit_map()).matrix();
  check.reference = scheme == Scheme::epr3
                        ? epr_pair_reference(kind, theta, p)
                        : ghz_triple_reference(kind, theta, p);
  check.max_abs_dev = check.simulated.max_abs_diff(check.reference);
  return check;
}

}  // namespace triport
