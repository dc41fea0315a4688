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

#include <cstddef>
#include <vector>

#include "triport/linalg.hpp"

// One-parameter family of orthonormal N-qubit entangled bases.  Each element
// is labelled by a sign bit mu and flip bits lambda_2..lambda_N:
//
//   |Psi^mu_lambda> = sum_j (-1)^(mu j) b_(mu xor j)
//                       |j, j xor lambda_2, ..., j xor lambda_N>,
//
// with b_0 = cos(phi), b_1 = sin(phi).  At phi = pi/4 this is the GHZ basis
// (the Bell basis for N = 2).  The angle is restricted to the open interval
// (0, pi/2); at the endpoints one amplitude vanishes and the family leaves
// its entangled regime.

namespace triport {

struct BasisLabel {
  int num_qubits = 2;        // N >= 2
  int mu = 0;                // 0 or 1
  std::vector<int> lambda;   // length N-1, entries 0/1
  double basis_angle = 0.0;  // phi, strictly inside (0, pi/2)
};

/// Throws std::domain_error unless 0 < phi < pi/2.
void validate_basis_angle(double phi);

StateVector basis_element(const BasisLabel& label);

/// Label for enumeration index e in [0, 2^N): mu is the most significant
/// bit, then lambda_2..lambda_N.
BasisLabel basis_label_from_index(int num_qubits, double phi,
                                  std::size_t index);

/// All 2^N elements in enumeration order.
std::vector<StateVector> full_basis(int num_qubits, double phi);

}  // namespace triport
