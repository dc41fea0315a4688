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

#include "triport/basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace triport {

void validate_basis_angle(double phi) {
  if (!(phi > 0.0) || !(phi < std::numbers::pi / 2.0))
    throw std::domain_error(
        "basis angle must lie strictly inside (0, pi/2)");
}

StateVector basis_element(const BasisLabel& label) {
  const int n = label.num_qubits;
  if (n < 2) throw std::invalid_argument("basis needs at least two qubits");
  if (label.mu != 0 && label.mu != 1)
    throw std::invalid_argument("mu must be 0 or 1");
  if (static_cast<int>(label.lambda.size()) != n - 1)
    throw std::invalid_argument("lambda must have N-1 entries");
  for (int l : label.lambda)
    if (l != 0 && l != 1)
      throw std::invalid_argument("lambda entries must be 0 or 1");
  validate_basis_angle(label.basis_angle);

  const double b[2] = {std::cos(label.basis_angle),
                       std::sin(label.basis_angle)};
  StateVector out(n);
  for (int j = 0; j < 2; ++j) {
    std::size_t index = 0;
    index = with_bit(index, 0, n, j);
    for (int k = 1; k < n; ++k)
      index = with_bit(index, k, n, j ^ label.lambda[k - 1]);
    const double sign = (label.mu && j) ? -1.0 : 1.0;
    out[index] = sign * b[label.mu ^ j];
  }
  return out;
}

BasisLabel basis_label_from_index(int num_qubits, double phi,
                                  std::size_t index) {
  if (num_qubits < 2)
    throw std::invalid_argument("basis needs at least two qubits");
  if (index >= (std::size_t{1} << num_qubits))
    throw std::invalid_argument("basis enumeration index out of range");
  BasisLabel label;
  label.num_qubits = num_qubits;
  label.basis_angle = phi;
  label.mu = static_cast<int>(index >> (num_qubits - 1)) & 1;
  label.lambda.resize(num_qubits - 1);
  for (int k = 0; k < num_qubits - 1; ++k)
    label.lambda[k] =
        static_cast<int>(index >> (num_qubits - 2 - k)) & 1;
  return label;
}

std::vector<StateVector> full_basis(int num_qubits, double phi) {
  validate_basis_angle(phi);
  std::vector<StateVector> out;
  out.reserve(std::size_t{1} << num_qubits);
  for (std::size_t e = 0; e < (std::size_t{1} << num_qubits); ++e)
    out.push_back(basis_element(basis_label_from_index(num_qubits, phi, e)));
  return out;
}

}  // namespace triport
