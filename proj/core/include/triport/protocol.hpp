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

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "triport/basis.hpp"
#include "triport/channel.hpp"
#include "triport/noise.hpp"

// The teleportation protocol itself.  The sender holds the input state
// c0|000> + c1|111> on labels (1,3,5) plus her half of the channel; she
// measures her groups in the entangled basis with angle phi, broadcasts six
// classical bits, and the receiver applies a Pauli correction to (7,8,9).

namespace triport {

/// Input state c0|000> + c1|111> on labels (1,3,5).
struct InputState {
  Complex c0{1.0, 0.0};
  Complex c1{0.0, 0.0};

  /// c0 = cos(theta0), c1 = e^{i phi_in} sin(theta0) with theta0 in
  /// [0, pi/2]; phi_in is unrestricted.
  static InputState from_angles(double theta0, double phi_in);
  /// Requires |c0|^2 + |c1|^2 = 1 within 1e-12.
  static InputState from_amplitudes(Complex c0, Complex c1);
  static InputState equal_superposition();

  /// The 3-qubit ket.
  StateVector ket() const;
};

/// One six-bit classical measurement record, packed MSB-first:
///   epr3: (mu, lambda, nu, omega, epsilon, tau) from the pair measurements
///         on (1,2), (3,4), (5,6);
///   ghz2: (mu, lambda, omega, nu, tau, epsilon) where the triple (1,4,5)
///         yields (mu, lambda, omega) and the triple (2,3,6) yields
///         (nu, tau, epsilon).
struct Outcome {
  Scheme scheme = Scheme::epr3;
  int code = 0;  // 0..63

  static Outcome from_code(Scheme scheme, int code);

  int mu() const { return (code >> 5) & 1; }
  int lambda() const { return (code >> 4) & 1; }
  int omega() const { return (code >> (scheme == Scheme::epr3 ? 2 : 3)) & 1; }
  int nu() const { return (code >> (scheme == Scheme::epr3 ? 3 : 2)) & 1; }
  int tau() const { return (code >> (scheme == Scheme::epr3 ? 0 : 1)) & 1; }
  int epsilon() const { return (code >> (scheme == Scheme::epr3 ? 1 : 0)) & 1; }

  /// Six bits MSB-first, e.g. "010011".
  std::string bits() const;
};

/// |Psi_K>: the joint measurement ket on the sender's six qubits (labels
/// 1..6, slots 0..5).
StateVector measurement_ket(Scheme scheme, const Outcome& outcome, double phi);

/// Rank-one projector onto measurement_ket.
Matrix projector_for(Scheme scheme, const Outcome& outcome, double phi);

/// The receiver's 8x8 Pauli correction on labels (7,8,9):
///   epr3: sz^mu sx^lambda (x) sz^nu sx^omega (x) sz^epsilon sx^tau;
///   ghz2: sz^mu sx^lambda (x) sx^tau sz^nu (x) sx^lambda.
Matrix correction_for(Scheme scheme, const Outcome& outcome);

/// All 64 corrections in outcome-code order.
std::vector<Matrix> correction_table(Scheme scheme);

struct OutcomeRecord {
  Outcome outcome;
  double probability = 0.0;
  /// Post-correction state on (7,8,9), normalized; zero when the outcome has
  /// negligible probability.
  DensityOperator state;
  /// Overlap with the ideal teleported state; absent when probability is
  /// below 1e-12.
  std::optional<double> conditional_fidelity;
};

struct TeleportRun {
  SchemeConfig config;
  NoiseSpec noise;
  InputState input;
  std::vector<OutcomeRecord> outcomes;  // all 64, in code order
  double total_fidelity = 0.0;          // sum_K p_K F_K
  double probability_sum = 0.0;         // should be 1
  WeakNoiseBudget noise_budget;
};

/// Runs the protocol for every measurement record.  The noise placement must
/// be a concrete qubit (or no noise); averaging over placements is the
/// fidelity layer's job.
TeleportRun teleport(const InputState& input, const SchemeConfig& cfg,
                     const NoiseSpec& noise);

/// Same, but with a caller-supplied correction table (64 8x8 unitaries in
/// outcome-code order).  Lets tests demonstrate that wrong corrections are
/// detected.
TeleportRun teleport_with_corrections(const InputState& input,
                                      const SchemeConfig& cfg,
                                      const NoiseSpec& noise,
                                      std::span<const Matrix> corrections);

/// Closed-form noiseless fidelity for a single input:
///   epr3: |c0|^4 + |c1|^4 + 128 |c0|^2 |c1|^2 (b0 b1 B0 B1)^3
///   ghz2: |c0|^4 + |c1|^4 +  32 |c0|^2 |c1|^2 (b0 b1 B0 B1)^2
/// with b = (cos phi, sin phi), B = (cos theta, sin theta).
double per_input_fidelity_closed(Scheme scheme, const InputState& input,
                                 double theta, double phi);

/// Precomputed per-outcome contraction tensors for one (config, noise)
/// setting; evaluates input-state fidelities without rebuilding the channel.
/// Pure after construction; safe to share across threads.
class FidelityEvaluator {
 public:
  FidelityEvaluator(const SchemeConfig& cfg, const NoiseSpec& noise);
  FidelityEvaluator(const SchemeConfig& cfg, const NoiseSpec& noise,
                    std::span<const Matrix> corrections);

  const SchemeConfig& config() const { return cfg_; }
  const NoiseSpec& noise() const { return noise_; }

  /// sum_K p_K F_K for this input.
  double total_fidelity(const InputState& input) const;

  /// Full per-outcome record set (the teleport() result body).
  TeleportRun run(const InputState& input) const;

 private:
  struct Branch {
    // t[c][f]: overlap of measurement ket K with the Kraus branch for basis
    // input |ccc>, far configuration f (labels 7,8,9), before correction.
    std::array<std::array<Complex, 8>, 2> t;
    // w = U_K t and the scalars needed for fast fidelity evaluation.
    std::array<std::array<Complex, 8>, 2> w;
    std::array<std::array<Complex, 2>, 2> target_amp;  // [c][d] = w_c[d*7]
    std::array<std::array<Complex, 2>, 2> gram;        // [c][c'] = <t_c|t_c'>
  };
  struct OutcomeData {
    Matrix correction;
    std::vector<Branch> branches;  // one per Kraus operator
  };

  SchemeConfig cfg_;
  NoiseSpec noise_;
  std::vector<OutcomeData> outcomes_;  // 64, code order

  void build(std::span<const Matrix> corrections);
};

}  // namespace triport
