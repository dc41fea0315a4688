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

#include "triport/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace triport {

namespace {

const std::vector<std::vector<int>> kEprChannelGroups = {{2, 7}, {4, 8}, {6, 9}};
const std::vector<std::vector<int>> kGhzChannelGroups = {{2, 6, 8}, {4, 7, 9}};
const std::vector<std::vector<int>> kEprMeasuredGroups = {{1, 2}, {3, 4}, {5, 6}};
const std::vector<std::vector<int>> kGhzMeasuredGroups = {{1, 4, 5}, {2, 3, 6}};
const std::array<int, 6> kChannelLabels = {2, 4, 6, 7, 8, 9};

void validate_channel_angle(double theta) {
  if (!(theta > 0.0) || !(theta < std::numbers::pi / 2.0))
    throw std::domain_error(
        "channel angle must lie strictly inside (0, pi/2)");
}

StateVector two_level_ket(int num_qubits, double theta) {
  validate_channel_angle(theta);
  StateVector v(num_qubits);
  v[0] = std::cos(theta);
  v[v.dim() - 1] = std::sin(theta);
  return v;
}

}  // namespace

const char* scheme_name(Scheme s) {
  return s == Scheme::epr3 ? "epr3" : "ghz2";
}

void validate_config(const SchemeConfig& cfg) {
  validate_channel_angle(cfg.theta);
  if (!(cfg.phi > 0.0) || !(cfg.phi < std::numbers::pi / 2.0))
    throw std::domain_error(
        "basis angle must lie strictly inside (0, pi/2)");
}

std::span<const std::vector<int>> channel_groups(Scheme s) {
  return s == Scheme::epr3 ? kEprChannelGroups : kGhzChannelGroups;
}

std::span<const std::vector<int>> measured_groups(Scheme s) {
  return s == Scheme::epr3 ? kEprMeasuredGroups : kGhzMeasuredGroups;
}

std::span<const int> channel_labels() { return kChannelLabels; }

const QubitMap& channel_qubit_map() {
  static const QubitMap map = QubitMap::contiguous(kChannelLabels);
  return map;
}

StateVector epr_pair(double theta) { return two_level_ket(2, theta); }

StateVector ghz_triple(double theta) { return two_level_ket(3, theta); }

StateVector channel_ket(const SchemeConfig& cfg) {
  validate_channel_angle(cfg.theta);
  if (cfg.scheme == Scheme::epr3) {
    const StateVector pair = epr_pair(cfg.theta);
    const StateVector factors[] = {pair, pair, pair};
    // Tensor order carries labels [2,7,4,8,6,9]; permute to slot order.
    const int perm[] = {0, 3, 1, 4, 2, 5};
    return permute_qubits(tensor(factors), perm);
  }
  const StateVector triple = ghz_triple(cfg.theta);
  const StateVector factors[] = {triple, triple};
  // Tensor order carries labels [2,6,8,4,7,9]; permute to slot order.
  const int perm[] = {0, 2, 4, 1, 3, 5};
  return permute_qubits(tensor(factors), perm);
}

ChannelState build_channel(const SchemeConfig& cfg) {
  return ChannelState{cfg.scheme,
                      DensityOperator::from_pure(channel_ket(cfg))};
}

Complex gamma(const ChannelState& ch, std::span<const int> part,
              std::span<const int> indices) {
  const auto groups = channel_groups(ch.scheme);
  const std::vector<int>* group = nullptr;
  for (const auto& g : groups) {
    if (std::equal(g.begin(), g.end(), part.begin(), part.end())) {
      group = &g;
      break;
    }
  }
  if (!group) {
    std::string msg = "gamma part must be a wired channel group; expected one of";
    for (const auto& g : groups) {
      msg += " (";
      for (std::size_t i = 0; i < g.size(); ++i)
        msg += (i ? "," : "") + std::to_string(g[i]);
      msg += ")";
    }
    throw std::invalid_argument(msg);
  }
  const int g = static_cast<int>(group->size());
  if (static_cast<int>(indices.size()) != 2 * g)
    throw std::invalid_argument("gamma needs row bits then column bits");
  for (int b : indices)
    if (b != 0 && b != 1)
      throw std::invalid_argument("gamma indices must be 0 or 1");
  const DensityOperator reduced =
      partial_trace(ch.rho, *group, channel_qubit_map());
  std::size_t row = 0, col = 0;
  for (int i = 0; i < g; ++i) {
    row = (row << 1) | static_cast<unsigned>(indices[i]);
    col = (col << 1) | static_cast<unsigned>(indices[g + i]);
  }
  return reduced.matrix().at(row, col);
}

}  // namespace triport
