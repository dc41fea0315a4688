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

#include <vector>

#include "triport/channel.hpp"
#include "triport/linalg.hpp"

// Single-qubit Kraus noise applied to exactly one channel qubit before the
// sender measures.  Supported channels: bit flip, phase flip, depolarizing.

namespace triport {

enum class NoiseKind { none, bit_flip, phase_flip, depolarizing };

const char* noise_name(NoiseKind k);

/// Where the noise acts: one concrete channel qubit, or the uniform average
/// over all six placements (used by fidelity reports).
enum class NoisePlacement { qubit, uniform_average };

struct NoiseSpec {
  NoiseKind kind = NoiseKind::none;
  double p = 0.0;  // error probability in [0, 1]
  NoisePlacement placement = NoisePlacement::qubit;
  int qubit = 2;  // meaningful only for placement == qubit

  static NoiseSpec none() { return NoiseSpec{}; }
  static NoiseSpec on_qubit(NoiseKind kind, double p, int qubit);
  static NoiseSpec uniform(NoiseKind kind, double p);

  bool is_none() const { return kind == NoiseKind::none; }
};

/// Throws unless p is in [0,1] and any concrete qubit is a channel label.
void validate_noise(const NoiseSpec& spec);

/// Kraus operators; they satisfy sum_i A_i^dag A_i = 1 for p in [0,1].
std::vector<Matrix> kraus_set(NoiseKind kind, double p);

/// rho -> sum_i A_i rho A_i^dag with A_i acting on the labelled qubit.
DensityOperator apply_noise(const DensityOperator& rho, int qubit_label,
                            NoiseKind kind, double p, const QubitMap& map);

/// Kraus branches A_i|psi> of a pure state (slot-addressed); branch norms
/// carry the branch weights, so the vectors are intentionally unnormalized.
std::vector<StateVector> noise_branches(const StateVector& psi, int slot,
                                        NoiseKind kind, double p);

/// First-order error budget for six independently noisy channel qubits:
/// probabilities of zero / one / two errors, and whether the single-error
/// regime dominates (p < 2/7).  Diagnostic output only.
struct WeakNoiseBudget {
  double p0 = 1.0;
  double p1 = 0.0;
  double p2 = 0.0;
  bool single_error_dominant = true;
};

WeakNoiseBudget weak_noise_budget(double p);

/// Compares the simulated reduced state of the noisy wired group against the
/// closed-form coefficient tensor for that (scheme, kind, qubit) combination.
/// Only combinations with a known closed form are accepted:
///   epr3: bit_flip/phase_flip/depolarizing on qubit 2
///   ghz2: bit_flip on 6, phase_flip on 2, depolarizing on 6
struct GammaCheck {
  Matrix simulated;  // reduced state of the noisy group
  Matrix reference;  // closed-form tensor, same layout
  double max_abs_dev = 0.0;
};

GammaCheck noisy_gamma_check(Scheme scheme, NoiseKind kind, int qubit,
                             double theta, double p);

}  // namespace triport
