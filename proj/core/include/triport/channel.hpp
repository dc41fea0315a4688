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
#include <span>
#include <vector>

#include "triport/linalg.hpp"

// Entanglement resources for teleporting a three-qubit state held on labels
// (1,3,5).  Two interchangeable channel layouts share the six channel labels
// {2,4,6,7,8,9}:
//
//   epr3: three two-qubit pairs cos(t)|00> + sin(t)|11> on (2,7),(4,8),(6,9);
//         sender measures the pairs (1,2),(3,4),(5,6).
//   ghz2: two three-qubit triples cos(t)|000> + sin(t)|111> on (2,6,8) and
//         (4,7,9); sender measures the triples (1,4,5) and (2,3,6).
//
// Labels 7,8,9 always end up holding the teleported state.

namespace triport {

enum class Scheme { epr3, ghz2 };

const char* scheme_name(Scheme s);

struct SchemeConfig {
  Scheme scheme = Scheme::epr3;
  double theta = 0.0;  // channel angle, strictly inside (0, pi/2)
  double phi = 0.0;    // measurement-basis angle, strictly inside (0, pi/2)
};

/// Throws std::domain_error unless both angles lie strictly inside (0, pi/2).
void validate_config(const SchemeConfig& cfg);

/// Entangled groups of channel qubit labels, in fixed wiring order.
std::span<const std::vector<int>> channel_groups(Scheme s);

/// Groups of labels measured by the sender, in fixed wiring order.
std::span<const std::vector<int>> measured_groups(Scheme s);

/// The six channel labels in slot order: {2,4,6,7,8,9}.
std::span<const int> channel_labels();

/// Map assigning channel labels to register slots 0..5.
const QubitMap& channel_qubit_map();

/// cos(theta)|00> + sin(theta)|11>.
StateVector epr_pair(double theta);

/// cos(theta)|000> + sin(theta)|111>.
StateVector ghz_triple(double theta);

/// Pure pre-noise channel ket on the six channel slots.
StateVector channel_ket(const SchemeConfig& cfg);

/// Channel state on labels {2,4,6,7,8,9} (slots via channel_qubit_map()).
struct ChannelState {
  Scheme scheme = Scheme::epr3;
  DensityOperator rho;
};

ChannelState build_channel(const SchemeConfig& cfg);

/// Matrix element <row-bits| rho_part |col-bits> of the reduced state on one
/// wired channel group.  `part` must equal one of channel_groups(scheme);
/// `indices` holds the group's row bits then its column bits (2x group size).
Complex gamma(const ChannelState& ch, std::span<const int> part,
              std::span<const int> indices);

}  // namespace triport
