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

#include "triport/protocol.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace triport {

namespace {

constexpr double kProbabilityFloor = 1e-12;

// sigma_x^t sigma_z^v: entry (l, l xor t) carries (-1)^(v (l xor t)).
Matrix pauli_xz(int x_power, int z_power) {
  Matrix m(2);
  for (int l = 0; l < 2; ++l)
    m.at(l, l ^ x_power) = (z_power && ((l ^ x_power) & 1)) ? -1.0 : 1.0;
  return m;
}

void validate_input(const InputState& input) {
  const double n = std::norm(input.c0) + std::norm(input.c1);
  if (std::abs(n - 1.0) > 1e-9)
    throw std::invalid_argument("input amplitudes must be normalized");
}

}  // namespace

InputState InputState::from_angles(double theta0, double phi_in) {
  if (!(theta0 >= 0.0) || !(theta0 <= std::numbers::pi / 2.0))
    throw std::domain_error("input angle theta0 must lie in [0, pi/2]");
  InputState s;
  s.c0 = std::cos(theta0);
  s.c1 = std::polar(std::sin(theta0), phi_in);
  return s;
}

InputState InputState::from_amplitudes(Complex c0, Complex c1) {
  InputState s{c0, c1};
  const double n = std::norm(c0) + std::norm(c1);
  if (std::abs(n - 1.0) > 1e-12)
    throw std::invalid_argument("input amplitudes must be normalized");
  return s;
}

InputState InputState::equal_superposition() {
  return from_angles(std::numbers::pi / 4.0, 0.0);
}

StateVector InputState::ket() const {
  StateVector v(3);
  v[0] = c0;
  v[7] = c1;
  return v;
}

Outcome Outcome::from_code(Scheme scheme, int code) {
  if (code < 0 || code > 63)
    throw std::invalid_argument("outcome code must lie in [0, 63]");
  return Outcome{scheme, code};
}

std::string Outcome::bits() const {
  std::string s(6, '0');
  for (int i = 0; i < 6; ++i)
    if (code & (1 << (5 - i))) s[i] = '1';
  return s;
}

StateVector measurement_ket(Scheme scheme, const Outcome& outcome,
                            double phi) {
  validate_basis_angle(phi);
  if (outcome.scheme != scheme)
    throw std::invalid_argument("outcome belongs to a different scheme");
  if (scheme == Scheme::epr3) {
    // Pair elements on (1,2), (3,4), (5,6): already in label order.
    const StateVector factors[] = {
        basis_element({2, outcome.mu(), {outcome.lambda()}, phi}),
        basis_element({2, outcome.nu(), {outcome.omega()}, phi}),
        basis_element({2, outcome.epsilon(), {outcome.tau()}, phi})};
    return tensor(factors);
  }
  // Triple elements on (1,4,5) and (2,3,6); reorder to labels 1..6.
  const StateVector factors[] = {
      basis_element({3, outcome.mu(), {outcome.lambda(), outcome.omega()}, phi}),
      basis_element({3, outcome.nu(), {outcome.tau(), outcome.epsilon()}, phi})};
  const int perm[] = {0, 3, 4, 1, 2, 5};
  return permute_qubits(tensor(factors), perm);
}

Matrix projector_for(Scheme scheme, const Outcome& outcome, double phi) {
  const StateVector m = measurement_ket(scheme, outcome, phi);
  return outer(m, m);
}

Matrix correction_for(Scheme scheme, const Outcome& outcome) {
  if (outcome.scheme != scheme)
    throw std::invalid_argument("outcome belongs to a different scheme");
  if (scheme == Scheme::epr3) {
    const Matrix factors[] = {pauli_zx(outcome.mu(), outcome.lambda()),
                              pauli_zx(outcome.nu(), outcome.omega()),
                              pauli_zx(outcome.epsilon(), outcome.tau())};
    return kron(factors);
  }
  // The lambda bit flips both ends (labels 7 and 9); tau flips the middle.
  const Matrix factors[] = {pauli_zx(outcome.mu(), outcome.lambda()),
                            pauli_xz(outcome.tau(), outcome.nu()),
                            pauli_zx(0, outcome.lambda())};
  return kron(factors);
}

std::vector<Matrix> correction_table(Scheme scheme) {
  std::vector<Matrix> table;
  table.reserve(64);
  for (int code = 0; code < 64; ++code)
    table.push_back(correction_for(scheme, Outcome::from_code(scheme, code)));
  return table;
}

double per_input_fidelity_closed(Scheme scheme, const InputState& input,
                                 double theta, double phi) {
  validate_config({scheme, theta, phi});
  validate_input(input);
  const double x = std::norm(input.c0);
  const double y = std::norm(input.c1);
  const double prod = std::cos(phi) * std::sin(phi) * std::cos(theta) *
                      std::sin(theta);
  if (scheme == Scheme::epr3)
    return x * x + y * y + 128.0 * x * y * prod * prod * prod;
  return x * x + y * y + 32.0 * x * y * prod * prod;
}

FidelityEvaluator::FidelityEvaluator(const SchemeConfig& cfg,
                                     const NoiseSpec& noise)
    : cfg_(cfg), noise_(noise) {
  const std::vector<Matrix> table = correction_table(cfg.scheme);
  build(table);
}

FidelityEvaluator::FidelityEvaluator(const SchemeConfig& cfg,
                                     const NoiseSpec& noise,
                                     std::span<const Matrix> corrections)
    : cfg_(cfg), noise_(noise) {
  build(corrections);
}

void FidelityEvaluator::build(std::span<const Matrix> corrections) {
  validate_config(cfg_);
  validate_noise(noise_);
  if (!noise_.is_none() && noise_.placement != NoisePlacement::qubit)
    throw std::invalid_argument(
        "teleport needs a concrete noise placement; resolve the uniform "
        "average in the fidelity layer");
  if (corrections.size() != 64)
    throw std::invalid_argument("correction table must have 64 entries");
  for (const Matrix& u : corrections)
    if (u.dim() != 8)
      throw std::invalid_argument("corrections must be 8x8 operators");

  const StateVector ch = channel_ket(cfg_);
  std::vector<StateVector> branches;
  if (noise_.is_none()) {
    branches.push_back(ch);
  } else {
    branches = noise_branches(ch, channel_qubit_map().slot(noise_.qubit),
                              noise_.kind, noise_.p);
  }

  outcomes_.clear();
  outcomes_.reserve(64);
  for (int code = 0; code < 64; ++code) {
    const Outcome outcome = Outcome::from_code(cfg_.scheme, code);
    const StateVector m = measurement_ket(cfg_.scheme, outcome, cfg_.phi);
    OutcomeData data;
    data.correction = corrections[code];
    data.branches.reserve(branches.size());
    for (const StateVector& b : branches) {
      Branch br{};
      // Contract the measurement bra with the branch ket.  Near index n runs
      // over labels 1..6 (MSB first); the input qubits 1,3,5 share one bit c,
      // and channel bits map as idx6 = (n2 n4 n6 f) with f on labels 7,8,9.
      for (int n = 0; n < 64; ++n) {
        const Complex mn = m[static_cast<std::size_t>(n)];
        if (mn == Complex{}) continue;
        const int n1 = (n >> 5) & 1, n2 = (n >> 4) & 1, n3 = (n >> 3) & 1;
        const int n4 = (n >> 2) & 1, n5 = (n >> 1) & 1, n6 = n & 1;
        if (n1 != n3 || n1 != n5) continue;
        const int c = n1;
        const Complex coef = std::conj(mn);
        const std::size_t base = static_cast<std::size_t>(
            (n2 << 5) | (n4 << 4) | (n6 << 3));
        for (int f = 0; f < 8; ++f)
          br.t[c][f] += coef * b[base | static_cast<unsigned>(f)];
      }
      for (int c = 0; c < 2; ++c)
        for (int r = 0; r < 8; ++r) {
          Complex s{};
          for (int k = 0; k < 8; ++k)
            s += data.correction.at(static_cast<std::size_t>(r),
                                    static_cast<std::size_t>(k)) *
                 br.t[c][k];
          br.w[c][r] = s;
        }
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          br.target_amp[c][d] = br.w[c][d ? 7 : 0];
      for (int c = 0; c < 2; ++c)
        for (int cp = 0; cp < 2; ++cp) {
          Complex s{};
          for (int f = 0; f < 8; ++f)
            s += std::conj(br.t[c][f]) * br.t[cp][f];
          br.gram[c][cp] = s;
        }
      data.branches.push_back(br);
    }
    outcomes_.push_back(std::move(data));
  }
}

double FidelityEvaluator::total_fidelity(const InputState& input) const {
  validate_input(input);
  const Complex c[2] = {input.c0, input.c1};
  double fid = 0.0;
  for (const OutcomeData& data : outcomes_) {
    for (const Branch& br : data.branches) {
      Complex overlap{};
      for (int cc = 0; cc < 2; ++cc)
        for (int d = 0; d < 2; ++d)
          overlap += std::conj(c[d]) * c[cc] * br.target_amp[cc][d];
      fid += std::norm(overlap);
    }
  }
  return fid;
}

TeleportRun FidelityEvaluator::run(const InputState& input) const {
  validate_input(input);
  const Complex c[2] = {input.c0, input.c1};
  TeleportRun out;
  out.config = cfg_;
  out.noise = noise_;
  out.input = input;
  out.noise_budget = weak_noise_budget(noise_.is_none() ? 0.0 : noise_.p);
  out.outcomes.reserve(64);
  for (int code = 0; code < 64; ++code) {
    const OutcomeData& data = outcomes_[static_cast<std::size_t>(code)];
    OutcomeRecord rec;
    rec.outcome = Outcome::from_code(cfg_.scheme, code);
    Matrix rho(8);
    double fid_contrib = 0.0;
    double prob = 0.0;
    for (const Branch& br : data.branches) {
      Complex w[8];
      for (int f = 0; f < 8; ++f)
        w[f] = c[0] * br.w[0][f] + c[1] * br.w[1][f];
      for (int r = 0; r < 8; ++r) {
        if (w[r] == Complex{}) continue;
        for (int s = 0; s < 8; ++s)
          rho.at(static_cast<std::size_t>(r), static_cast<std::size_t>(s)) +=
              w[r] * std::conj(w[s]);
      }
      fid_contrib += std::norm(std::conj(c[0]) * w[0] + std::conj(c[1]) * w[7]);
      for (int cc = 0; cc < 2; ++cc)
        for (int cp = 0; cp < 2; ++cp)
          prob += (std::conj(c[cc]) * c[cp] * br.gram[cc][cp]).real();
    }
    rec.probability = prob;
    if (prob > kProbabilityFloor) {
      rec.state = DensityOperator(3, rho.scaled(1.0 / prob));
      rec.conditional_fidelity = fid_contrib / prob;
    } else {
      rec.state = DensityOperator(3, Matrix(8));
      rec.conditional_fidelity = std::nullopt;
    }
    out.total_fidelity += fid_contrib;
    out.probability_sum += prob;
    out.outcomes.push_back(std::move(rec));
  }
  return out;
}

TeleportRun teleport(const InputState& input, const SchemeConfig& cfg,
                     const NoiseSpec& noise) {
  return FidelityEvaluator(cfg, noise).run(input);
}

TeleportRun teleport_with_corrections(const InputState& input,
                                      const SchemeConfig& cfg,
                                      const NoiseSpec& noise,
                                      std::span<const Matrix> corrections) {
  return FidelityEvaluator(cfg, noise, corrections).run(input);
}

}  // namespace triport
