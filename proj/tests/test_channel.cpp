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

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "support/oracles.hpp"
#include "triport/channel.hpp"

using namespace triport;

namespace {

const double kPi = std::acos(-1.0);

/// Independent channel-ket builder: writes each product amplitude straight
/// into the register index assembled bit by bit from the wiring tables.
StateVector direct_channel_ket(const SchemeConfig& cfg) {
  const double b[2] = {std::cos(cfg.theta), std::sin(cfg.theta)};
  StateVector v(6);
  const QubitMap& map = channel_qubit_map();
  if (cfg.scheme == Scheme::epr3) {
    for (int a1 = 0; a1 < 2; ++a1)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int a3 = 0; a3 < 2; ++a3) {
          std::size_t idx = 0;
          idx = with_bit(idx, map.slot(2), 6, a1);
          idx = with_bit(idx, map.slot(7), 6, a1);
          idx = with_bit(idx, map.slot(4), 6, a2);
          idx = with_bit(idx, map.slot(8), 6, a2);
          idx = with_bit(idx, map.slot(6), 6, a3);
          idx = with_bit(idx, map.slot(9), 6, a3);
          v[idx] = b[a1] * b[a2] * b[a3];
        }
  } else {
    for (int a = 0; a < 2; ++a)
      for (int d = 0; d < 2; ++d) {
        std::size_t idx = 0;
        idx = with_bit(idx, map.slot(2), 6, a);
        idx = with_bit(idx, map.slot(6), 6, a);
        idx = with_bit(idx, map.slot(8), 6, a);
        idx = with_bit(idx, map.slot(4), 6, d);
        idx = with_bit(idx, map.slot(7), 6, d);
        idx = with_bit(idx, map.slot(9), 6, d);
        v[idx] = b[a] * b[d];
      }
  }
  return v;
}

}  // namespace

TEST_CASE("scheme names and config validation") {
  CHECK(std::string(scheme_name(Scheme::epr3)) == "epr3");
  CHECK(std::string(scheme_name(Scheme::ghz2)) == "ghz2");
  CHECK_NOTHROW(validate_config({Scheme::epr3, 0.3, 0.9}));
  CHECK_THROWS_AS(validate_config({Scheme::epr3, 0.0, 0.5}),
                  std::domain_error);
  CHECK_THROWS_AS(validate_config({Scheme::epr3, 0.5, kPi / 2.0}),
                  std::domain_error);
  CHECK_THROWS_AS(validate_config({Scheme::ghz2, -0.2, 0.5}),
                  std::domain_error);
}

TEST_CASE("wiring tables") {
  const auto epr = channel_groups(Scheme::epr3);
  REQUIRE(epr.size() == 3);
  CHECK(epr[0] == std::vector<int>{2, 7});
  CHECK(epr[1] == std::vector<int>{4, 8});
  CHECK(epr[2] == std::vector<int>{6, 9});
  const auto ghz = channel_groups(Scheme::ghz2);
  REQUIRE(ghz.size() == 2);
  CHECK(ghz[0] == std::vector<int>{2, 6, 8});
  CHECK(ghz[1] == std::vector<int>{4, 7, 9});
  const auto mepr = measured_groups(Scheme::epr3);
  REQUIRE(mepr.size() == 3);
  CHECK(mepr[0] == std::vector<int>{1, 2});
  CHECK(mepr[2] == std::vector<int>{5, 6});
  const auto mghz = measured_groups(Scheme::ghz2);
  REQUIRE(mghz.size() == 2);
  CHECK(mghz[0] == std::vector<int>{1, 4, 5});
  CHECK(mghz[1] == std::vector<int>{2, 3, 6});
  const auto labels = channel_labels();
  CHECK(std::vector<int>(labels.begin(), labels.end()) ==
        std::vector<int>{2, 4, 6, 7, 8, 9});
  CHECK(channel_qubit_map().slot(2) == 0);
  CHECK(channel_qubit_map().slot(9) == 5);
}

TEST_CASE("entangled pair and triple kets") {
  const StateVector bell = epr_pair(kPi / 4.0);
  CHECK(std::abs(bell[0] - Complex(1.0 / std::sqrt(2.0))) <= 1e-15);
  CHECK(std::abs(bell[3] - Complex(1.0 / std::sqrt(2.0))) <= 1e-15);
  CHECK(bell[1] == Complex(0.0));
  CHECK(bell[2] == Complex(0.0));

  const StateVector pair = epr_pair(0.2);
  CHECK(std::abs(pair[0] - Complex(std::cos(0.2))) <= 1e-15);
  CHECK(std::abs(pair[3] - Complex(std::sin(0.2))) <= 1e-15);

  const StateVector triple = ghz_triple(0.7);
  CHECK(std::abs(triple[0] - Complex(std::cos(0.7))) <= 1e-15);
  CHECK(std::abs(triple[7] - Complex(std::sin(0.7))) <= 1e-15);
  for (std::size_t i = 1; i < 7; ++i) CHECK(triple[i] == Complex(0.0));

  CHECK(epr_pair(1.0).is_normalized(1e-14));
  CHECK(ghz_triple(0.3).is_normalized(1e-14));
  CHECK_THROWS_AS(epr_pair(0.0), std::domain_error);
  CHECK_THROWS_AS(ghz_triple(kPi / 2.0), std::domain_error);
}

TEST_CASE("pair-layout channel ket places matched bits on wired labels") {
  const SchemeConfig cfg{Scheme::epr3, kPi / 6.0, kPi / 4.0};
  const StateVector v = channel_ket(cfg);
  CHECK(v.num_qubits() == 6);
  CHECK(v.is_normalized(1e-13));
  const StateVector ref = direct_channel_ket(cfg);
  double dev = 0.0;
  for (std::size_t i = 0; i < 64; ++i)
    dev = std::max(dev, std::abs(v[i] - ref[i]));
  CHECK(dev <= 1e-15);
  // slots are (2,4,6,7,8,9); bits repeat as (a1,a2,a3,a1,a2,a3), so the
  // support sits on indices 9*a1' ... explicitly: a1*36 + a2*18 + a3*9.
  const double c = std::cos(kPi / 6.0), s = std::sin(kPi / 6.0);
  CHECK(std::abs(v[0] - Complex(c * c * c)) <= 1e-15);
  CHECK(std::abs(v[9] - Complex(c * c * s)) <= 1e-15);
  CHECK(std::abs(v[18] - Complex(c * s * c)) <= 1e-15);
  CHECK(std::abs(v[27] - Complex(c * s * s)) <= 1e-15);
  CHECK(std::abs(v[36] - Complex(s * c * c)) <= 1e-15);
  CHECK(std::abs(v[63] - Complex(s * s * s)) <= 1e-15);
  CHECK(v[1] == Complex(0.0));
}

TEST_CASE("triple-layout channel ket places matched bits on wired labels") {
  const SchemeConfig cfg{Scheme::ghz2, 0.8, kPi / 4.0};
  const StateVector v = channel_ket(cfg);
  CHECK(v.is_normalized(1e-13));
  const StateVector ref = direct_channel_ket(cfg);
  double dev = 0.0;
  for (std::size_t i = 0; i < 64; ++i)
    dev = std::max(dev, std::abs(v[i] - ref[i]));
  CHECK(dev <= 1e-15);
  // support: (a,d,a,d,a,d) = a*42 + d*21
  const double c = std::cos(0.8), s = std::sin(0.8);
  CHECK(std::abs(v[0] - Complex(c * c)) <= 1e-15);
  CHECK(std::abs(v[21] - Complex(c * s)) <= 1e-15);
  CHECK(std::abs(v[42] - Complex(s * c)) <= 1e-15);
  CHECK(std::abs(v[63] - Complex(s * s)) <= 1e-15);
  int nonzero = 0;
  for (std::size_t i = 0; i < 64; ++i)
    if (std::abs(v[i]) > 0.0) ++nonzero;
  CHECK(nonzero == 4);
}

TEST_CASE("build_channel yields the pure projector of the channel ket") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 6; ++trial) {
    const Scheme scheme = (trial % 2 == 0) ? Scheme::epr3 : Scheme::ghz2;
    const SchemeConfig cfg{scheme, triport::testing::rand_range(rng, 0.1, 1.4),
                           triport::testing::rand_range(rng, 0.1, 1.4)};
    const ChannelState ch = build_channel(cfg);
    CHECK(ch.scheme == cfg.scheme);
    CHECK(ch.rho.num_qubits() == 6);
    CHECK(ch.rho.trace_real() == doctest::Approx(1.0).epsilon(1e-12));
    // purity: rho^2 == rho
    const Matrix sq = ch.rho.matrix() * ch.rho.matrix();
    CHECK(sq.max_abs_diff(ch.rho.matrix()) <= 1e-12);
    const StateVector ket = channel_ket(cfg);
    CHECK(ch.rho.matrix().max_abs_diff(outer(ket, ket)) <= 1e-13);
  }
}

TEST_CASE("reduced one-qubit state of a pair is diagonal in the angle") {
  const SchemeConfig cfg{Scheme::epr3, kPi / 6.0, kPi / 4.0};
  const ChannelState ch = build_channel(cfg);
  const int keep[] = {2};
  const Matrix red = partial_trace(ch.rho, keep, channel_qubit_map()).matrix();
  CHECK(std::abs(red.at(0, 0) - Complex(0.75)) <= 1e-14);  // cos^2(pi/6)
  CHECK(std::abs(red.at(1, 1) - Complex(0.25)) <= 1e-14);
  CHECK(std::abs(red.at(0, 1)) <= 1e-15);
}

TEST_CASE("group tensor elements of the pair layout") {
  const int part[] = {2, 7};
  {
    const ChannelState ch = build_channel({Scheme::epr3, kPi / 4.0, 0.5});
    const int idx[] = {0, 0, 0, 0};
    CHECK(std::abs(gamma(ch, part, idx) - Complex(0.5)) <= 1e-14);
  }
  {
    const ChannelState ch = build_channel({Scheme::epr3, kPi / 6.0, 0.5});
    const int idx_cross[] = {0, 0, 1, 1};
    CHECK(std::abs(gamma(ch, part, idx_cross) -
                   Complex(std::sqrt(3.0) / 4.0)) <= 1e-14);
    const int idx_dead[] = {0, 1, 0, 1};
    CHECK(std::abs(gamma(ch, part, idx_dead)) <= 1e-15);
    // full tensor: gamma[kl,mn] = B_k B_m delta_kl delta_mn
    const double b[2] = {std::cos(kPi / 6.0), std::sin(kPi / 6.0)};
    for (int k = 0; k < 2; ++k)
      for (int l = 0; l < 2; ++l)
        for (int m = 0; m < 2; ++m)
          for (int n = 0; n < 2; ++n) {
            const int idx[] = {k, l, m, n};
            const Complex expected =
                (k == l && m == n) ? Complex(b[k] * b[m]) : Complex{};
            CHECK(std::abs(gamma(ch, part, idx) - expected) <= 1e-14);
          }
  }
}

TEST_CASE("group tensor elements of the triple layout") {
  const ChannelState ch = build_channel({Scheme::ghz2, 0.9, 0.5});
  const double b[2] = {std::cos(0.9), std::sin(0.9)};
  const int part[] = {2, 6, 8};
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l)
      for (int m = 0; m < 2; ++m)
        for (int kp = 0; kp < 2; ++kp)
          for (int lp = 0; lp < 2; ++lp)
            for (int mp = 0; mp < 2; ++mp) {
              const int idx[] = {k, l, m, kp, lp, mp};
              const Complex expected = (k == l && l == m && kp == lp &&
                                        lp == mp)
                                           ? Complex(b[k] * b[kp])
                                           : Complex{};
              CHECK(std::abs(gamma(ch, part, idx) - expected) <= 1e-14);
            }
  const int part2[] = {4, 7, 9};
  const int idx2[] = {1, 1, 1, 0, 0, 0};
  CHECK(std::abs(gamma(ch, part2, idx2) - Complex(b[1] * b[0])) <= 1e-14);
}

TEST_CASE("gamma rejects unwired parts and lists the wired groups") {
  const ChannelState ch = build_channel({Scheme::epr3, 0.5, 0.5});
  const int bad[] = {2, 8};
  const int idx[] = {0, 0, 0, 0};
  CHECK_THROWS_WITH_AS(gamma(ch, bad, idx),
                       "gamma part must be a wired channel group; expected "
                       "one of (2,7) (4,8) (6,9)",
                       std::invalid_argument);
  const int part[] = {2, 7};
  const int short_idx[] = {0, 0, 0};
  CHECK_THROWS_AS(gamma(ch, part, short_idx), std::invalid_argument);
}

TEST_CASE("triple layout is symmetric under swapping the two triples") {
  // Swapping labels (2<->4, 6<->7, 8<->9) exchanges the wired triples, and
  // the channel state is invariant because both carry the same angle.
  const SchemeConfig cfg{Scheme::ghz2, 0.6, 0.5};
  const StateVector v = channel_ket(cfg);
  const int swap[] = {1, 0, 3, 2, 5, 4};  // slots of (2,4,6,7,8,9)
  const StateVector swapped = permute_qubits(v, swap);
  double dev = 0.0;
  for (std::size_t i = 0; i < 64; ++i)
    dev = std::max(dev, std::abs(v[i] - swapped[i]));
  CHECK(dev <= 1e-15);
}

TEST_CASE("the receiver's three qubits carry no coherences") {
  std::mt19937_64 rng(32);
  const int far[] = {7, 8, 9};
  for (int trial = 0; trial < 8; ++trial) {
    const Scheme scheme = (trial % 2 == 0) ? Scheme::epr3 : Scheme::ghz2;
    const SchemeConfig cfg{scheme, triport::testing::rand_range(rng, 0.1, 1.4),
                           0.7};
    const ChannelState ch = build_channel(cfg);
    const Matrix red =
        partial_trace(ch.rho, far, channel_qubit_map()).matrix();
    double offdiag = 0.0;
    for (std::size_t r = 0; r < 8; ++r)
      for (std::size_t c = 0; c < 8; ++c)
        if (r != c) offdiag = std::max(offdiag, std::abs(red.at(r, c)));
    CHECK(offdiag <= 1e-15);
    CHECK(red.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
  }
}
