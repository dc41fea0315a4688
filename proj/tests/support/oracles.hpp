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

// Deliberately naive reference implementations used only by tests.  Each one
// reaches the same quantity as the production path through entirely
// different machinery (literal definitions, dense matrix algebra, or the
// closed summation formulas), so agreement is meaningful.

#include <cmath>
#include <random>
#include <vector>

#include "triport/channel.hpp"
#include "triport/fidelity.hpp"
#include "triport/linalg.hpp"
#include "triport/noise.hpp"
#include "triport/protocol.hpp"

namespace triport::testing {

inline double rand_range(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

inline Complex rand_complex(std::mt19937_64& rng) {
  return Complex(rand_range(rng, -1.0, 1.0), rand_range(rng, -1.0, 1.0));
}

inline StateVector random_state(std::mt19937_64& rng, int num_qubits) {
  StateVector v(num_qubits);
  for (std::size_t i = 0; i < v.dim(); ++i) v[i] = rand_complex(rng);
  const double n = v.norm();
  for (std::size_t i = 0; i < v.dim(); ++i) v[i] /= n;
  return v;
}

inline DensityOperator random_density(std::mt19937_64& rng, int num_qubits,
                                      int rank) {
  Matrix m(std::size_t{1} << num_qubits);
  std::vector<double> w(rank);
  double wsum = 0.0;
  for (int r = 0; r < rank; ++r) {
    w[r] = rand_range(rng, 0.1, 1.0);
    wsum += w[r];
  }
  for (int r = 0; r < rank; ++r) {
    const StateVector psi = random_state(rng, num_qubits);
    m += outer(psi, psi).scaled(w[r] / wsum);
  }
  return DensityOperator(num_qubits, std::move(m));
}

inline InputState random_input(std::mt19937_64& rng) {
  return InputState::from_angles(rand_range(rng, 0.0, std::acos(-1.0) / 2.0),
                                 rand_range(rng, 0.0, 2.0 * std::acos(-1.0)));
}

/// Permutation matrix sending basis index i to the index with the bit of old
/// slot s moved to new_slot_of_old[s].
inline Matrix permutation_matrix(std::span<const int> new_slot_of_old) {
  const int n = static_cast<int>(new_slot_of_old.size());
  Matrix p(std::size_t{1} << n);
  for (std::size_t i = 0; i < p.dim(); ++i) {
    std::size_t j = 0;
    for (int s = 0; s < n; ++s)
      j = with_bit(j, new_slot_of_old[s], n, bit_at(i, s, n));
    p.at(j, i) = 1.0;
  }
  return p;
}

/// embed() reference: kron with identity, then conjugate by the permutation
/// that routes the operator's slots onto the mapped targets.
inline Matrix embed_oracle(const Matrix& op, std::span<const int> targets,
                           const QubitMap& map, int num_qubits) {
  const int arity = static_cast<int>(targets.size());
  const Matrix big =
      kron(op, Matrix::identity(std::size_t{1} << (num_qubits - arity)));
  std::vector<int> target_slots;
  for (int t : targets) target_slots.push_back(map.slot(t));
  std::vector<int> new_slot_of_old = target_slots;
  for (int s = 0; s < num_qubits; ++s) {
    bool taken = false;
    for (int ts : target_slots) taken = taken || ts == s;
    if (!taken) new_slot_of_old.push_back(s);
  }
  const Matrix p = permutation_matrix(new_slot_of_old);
  return p * big * p.adjoint();
}

/// partial_trace() reference: literal sum of basis-vector sandwiches.  Keep
/// register sizes small; this is exponential on purpose.
inline Matrix partial_trace_oracle(const DensityOperator& rho,
                                   std::span<const int> keep,
                                   const QubitMap& map) {
  const int n = rho.num_qubits();
  std::vector<int> kept_slots;
  for (int label : keep) kept_slots.push_back(map.slot(label));
  std::vector<int> rest_slots;
  for (int s = 0; s < n; ++s) {
    bool taken = false;
    for (int ks : kept_slots) taken = taken || ks == s;
    if (!taken) rest_slots.push_back(s);
  }
  const int k = static_cast<int>(kept_slots.size());
  const int r = static_cast<int>(rest_slots.size());
  Matrix out(std::size_t{1} << k);
  const StateVector zero = StateVector::basis_state(1, 0);
  const StateVector one = StateVector::basis_state(1, 1);
  const auto build = [&](std::size_t kept_bits, std::size_t rest_bits) {
    std::vector<StateVector> slots(n, zero);
    for (int i = 0; i < k; ++i)
      slots[kept_slots[i]] = bit_at(kept_bits, i, k) ? one : zero;
    for (int i = 0; i < r; ++i)
      slots[rest_slots[i]] = bit_at(rest_bits, i, r) ? one : zero;
    return tensor(slots);
  };
  for (std::size_t a = 0; a < out.dim(); ++a)
    for (std::size_t b = 0; b < out.dim(); ++b) {
      Complex s{};
      for (std::size_t rest = 0; rest < (std::size_t{1} << r); ++rest)
        s += inner(build(a, rest), apply(rho.matrix(), build(b, rest)));
      out.at(a, b) = s;
    }
  return out;
}

/// Reduced coefficient tensor of one wired channel group, as a matrix whose
/// row/column indices pack the group's qubit bits in wiring order.
inline Matrix group_gamma(const ChannelState& ch, std::size_t group_index) {
  const auto groups = channel_groups(ch.scheme);
  return partial_trace(ch.rho, groups[group_index], channel_qubit_map())
      .matrix();
}

inline Complex input_amp(const InputState& in, int c) {
  return c ? in.c1 : in.c0;
}

/// Total fidelity of the pair layout by the closed summation formula, taking
/// the three group tensors as data.  Sums 2^10 terms literally.
inline double wide_fidelity_epr3(const InputState& in, double phi,
                                 const Matrix& g27, const Matrix& g48,
                                 const Matrix& g69) {
  const double b[2] = {std::cos(phi), std::sin(phi)};
  Complex acc{};
  for (int c = 0; c < 2; ++c)
    for (int cp = 0; cp < 2; ++cp)
      for (int d = 0; d < 2; ++d)
        for (int e = 0; e < 2; ++e) {
          const Complex amp = input_amp(in, c) * std::conj(input_amp(in, cp)) *
                              std::conj(input_amp(in, d)) * input_amp(in, e);
          if (amp == Complex{}) continue;
          for (int mu = 0; mu < 2; ++mu)
            for (int nu = 0; nu < 2; ++nu)
              for (int ep = 0; ep < 2; ++ep) {
                const double bs = b[mu ^ c] * b[nu ^ c] * b[ep ^ c] *
                                  b[mu ^ cp] * b[nu ^ cp] * b[ep ^ cp];
                const double sign =
                    (((c + cp + d + e) * (mu + nu + ep)) & 1) ? -1.0 : 1.0;
                for (int lam = 0; lam < 2; ++lam)
                  for (int om = 0; om < 2; ++om)
                    for (int ta = 0; ta < 2; ++ta) {
                      const Complex g =
                          g27.at(static_cast<std::size_t>(
                                     ((c ^ lam) << 1) | (d ^ lam)),
                                 static_cast<std::size_t>(
                                     ((cp ^ lam) << 1) | (e ^ lam))) *
                          g48.at(static_cast<std::size_t>(
                                     ((c ^ om) << 1) | (d ^ om)),
                                 static_cast<std::size_t>(
                                     ((cp ^ om) << 1) | (e ^ om))) *
                          g69.at(static_cast<std::size_t>(
                                     ((c ^ ta) << 1) | (d ^ ta)),
                                 static_cast<std::size_t>(
                                     ((cp ^ ta) << 1) | (e ^ ta)));
                      acc += amp * sign * bs * g;
                    }
              }
        }
  return acc.real();
}

/// Total fidelity of the triple layout by the closed summation formula
/// (2^9 terms; the omega bit only contributes through its zero value).
inline double wide_fidelity_ghz2(const InputState& in, double phi,
                                 const Matrix& g268, const Matrix& g479) {
  const double b[2] = {std::cos(phi), std::sin(phi)};
  Complex acc{};
  for (int c = 0; c < 2; ++c)
    for (int cp = 0; cp < 2; ++cp)
      for (int d = 0; d < 2; ++d)
        for (int e = 0; e < 2; ++e) {
          const Complex amp = input_amp(in, c) * std::conj(input_amp(in, cp)) *
                              std::conj(input_amp(in, d)) * input_amp(in, e);
          if (amp == Complex{}) continue;
          for (int mu = 0; mu < 2; ++mu)
            for (int nu = 0; nu < 2; ++nu)
              for (int ta = 0; ta < 2; ++ta) {
                const double bs = b[mu ^ c] * b[mu ^ cp] * b[nu ^ c ^ ta] *
                                  b[nu ^ cp ^ ta];
                const double sign =
                    (((mu + nu) * (c + cp + d + e)) & 1) ? -1.0 : 1.0;
                for (int lam = 0; lam < 2; ++lam)
                  for (int ep = 0; ep < 2; ++ep) {
                    const Complex g =
                        g268.at(static_cast<std::size_t>(
                                    ((c ^ ta) << 2) | ((c ^ ta ^ ep) << 1) |
                                    (d ^ ta)),
                                static_cast<std::size_t>(
                                    ((cp ^ ta) << 2) | ((cp ^ ta ^ ep) << 1) |
                                    (e ^ ta))) *
                        g479.at(static_cast<std::size_t>(
                                    ((c ^ lam) << 2) | ((d ^ lam) << 1) |
                                    (d ^ lam)),
                                static_cast<std::size_t>(
                                    ((cp ^ lam) << 2) | ((e ^ lam) << 1) |
                                    (e ^ lam)));
                    acc += amp * sign * bs * g;
                  }
              }
        }
  return acc.real();
}

/// Total fidelity via the group tensors of a (possibly noisy) channel.
inline double wide_fidelity(const InputState& in, const SchemeConfig& cfg,
                            const NoiseSpec& noise) {
  ChannelState ch = build_channel(cfg);
  if (!noise.is_none())
    ch.rho = apply_noise(ch.rho, noise.qubit, noise.kind, noise.p,
                         channel_qubit_map());
  if (cfg.scheme == Scheme::epr3)
    return wide_fidelity_epr3(in, cfg.phi, group_gamma(ch, 0),
                              group_gamma(ch, 1), group_gamma(ch, 2));
  return wide_fidelity_ghz2(in, cfg.phi, group_gamma(ch, 0),
                            group_gamma(ch, 1));
}

/// The protocol register: labels 1..9 on slots 0..8.
inline const QubitMap& protocol_map() {
  static const int labels[] = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  static const QubitMap map = QubitMap::contiguous(labels);
  return map;
}

/// Literal 512x512 joint state: input density on (1,3,5) times (noisy)
/// channel density on the channel labels.
inline Matrix dense_full_rho(const InputState& in, const SchemeConfig& cfg,
                             const NoiseSpec& noise) {
  ChannelState ch = build_channel(cfg);
  if (!noise.is_none())
    ch.rho = apply_noise(ch.rho, noise.qubit, noise.kind, noise.p,
                         channel_qubit_map());
  const Matrix rho_in = outer(in.ket(), in.ket());
  const int in_labels[] = {1, 3, 5};
  const auto ch_labels = channel_labels();
  Matrix out(512);
  for (std::size_t row = 0; row < 512; ++row) {
    for (std::size_t col = 0; col < 512; ++col) {
      std::size_t ir = 0, ic = 0, cr = 0, cc = 0;
      for (int i = 0; i < 3; ++i) {
        ir = (ir << 1) | bit_at(row, protocol_map().slot(in_labels[i]), 9);
        ic = (ic << 1) | bit_at(col, protocol_map().slot(in_labels[i]), 9);
      }
      for (int i = 0; i < 6; ++i) {
        cr = (cr << 1) | bit_at(row, protocol_map().slot(ch_labels[i]), 9);
        cc = (cc << 1) | bit_at(col, protocol_map().slot(ch_labels[i]), 9);
      }
      out.at(row, col) = rho_in.at(ir, ic) * ch.rho.matrix().at(cr, cc);
    }
  }
  return out;
}

struct DenseOutcome {
  double probability = 0.0;
  Matrix state_unnormalized;  // on labels (7,8,9), corrected
};

/// Reference A: pre-correction far block by a double sum over near
/// configurations, then the correction conjugation at 8x8.
inline DenseOutcome dense_outcome_sandwich(const Matrix& rho_full, Scheme scheme,
                                           const Outcome& outcome, double phi) {
  const StateVector m = measurement_ket(scheme, outcome, phi);
  Matrix pre(8);
  for (int n = 0; n < 64; ++n) {
    if (m[static_cast<std::size_t>(n)] == Complex{}) continue;
    for (int np = 0; np < 64; ++np) {
      if (m[static_cast<std::size_t>(np)] == Complex{}) continue;
      const Complex coef = std::conj(m[static_cast<std::size_t>(n)]) *
                           m[static_cast<std::size_t>(np)];
      for (int f = 0; f < 8; ++f)
        for (int fp = 0; fp < 8; ++fp)
          pre.at(static_cast<std::size_t>(f), static_cast<std::size_t>(fp)) +=
              coef * rho_full.at(static_cast<std::size_t>(n * 8 + f),
                                 static_cast<std::size_t>(np * 8 + fp));
    }
  }
  DenseOutcome out;
  out.probability = pre.trace().real();
  out.state_unnormalized = sandwich(correction_for(scheme, outcome), pre);
  return out;
}

/// Reference B: everything at 512x512 — embedded projector, embedded
/// correction, dense products, then a partial trace down to (7,8,9).
inline DenseOutcome dense_outcome_matmul(const Matrix& rho_full, Scheme scheme,
                                         const Outcome& outcome, double phi) {
  const int near_labels[] = {1, 2, 3, 4, 5, 6};
  const int far_labels[] = {7, 8, 9};
  const Matrix p9 = embed(projector_for(scheme, outcome, phi), near_labels,
                          protocol_map(), 9);
  const Matrix u9 =
      embed(correction_for(scheme, outcome), far_labels, protocol_map(), 9);
  const Matrix m = sandwich(u9 * p9, rho_full);
  DenseOutcome out;
  out.probability = m.trace().real();
  out.state_unnormalized =
      partial_trace(DensityOperator(9, m), far_labels, protocol_map())
          .matrix();
  return out;
}

}  // namespace triport::testing
