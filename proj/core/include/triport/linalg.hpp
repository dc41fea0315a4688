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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

// Exact small-dimension complex linear algebra for multi-qubit registers.
//
// Bit convention used throughout: a register of n qubits occupies slots
// 0..n-1, and slot 0 is the MOST significant bit of a computational-basis
// index, so index i corresponds to the ket |b0 b1 ... b_{n-1}> with
// b_s = (i >> (n-1-s)) & 1.  All functions are pure and safe to call
// concurrently on distinct data.

namespace triport {

using Complex = std::complex<double>;

/// Returns the bit held by `slot` inside an n-qubit basis index.
inline int bit_at(std::size_t index, int slot, int num_qubits) {
  return static_cast<int>((index >> (num_qubits - 1 - slot)) & 1u);
}

/// Returns `index` with the bit of `slot` replaced by `bit`.
inline std::size_t with_bit(std::size_t index, int slot, int num_qubits,
                            int bit) {
  const std::size_t mask = std::size_t{1} << (num_qubits - 1 - slot);
  return bit ? (index | mask) : (index & ~mask);
}

/// Pure state of an n-qubit register; amplitude vector of length 2^n.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(int num_qubits);
  StateVector(int num_qubits, std::vector<Complex> amplitudes);

  static StateVector basis_state(int num_qubits, std::size_t index);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  Complex& operator[](std::size_t i) { return amps_[i]; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }
  const std::vector<Complex>& amplitudes() const { return amps_; }

  double norm_sq() const;
  double norm() const;
  bool is_normalized(double tol = 1e-12) const;

 private:
  int num_qubits_ = 0;
  std::vector<Complex> amps_;
};

/// <a|b>; requires equal dimensions.
Complex inner(const StateVector& a, const StateVector& b);

/// Kronecker product; the first factor supplies the most significant bits.
StateVector tensor(const StateVector& a, const StateVector& b);
StateVector tensor(std::span<const StateVector> factors);

/// Reorders register slots: qubit in old slot s moves to new_slot_of_old[s].
StateVector permute_qubits(const StateVector& v,
                           std::span<const int> new_slot_of_old);

/// Dense square complex matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim);
  Matrix(std::size_t dim, std::vector<Complex> entries);

  static Matrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Complex& at(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Complex& at(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }
  const std::vector<Complex>& entries() const { return data_; }

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator*=(Complex scale);
  Matrix scaled(Complex scale) const;

  Matrix adjoint() const;
  Complex trace() const;
  double max_abs() const;
  double max_abs_diff(const Matrix& rhs) const;
  bool is_hermitian(double tol = 1e-12) const;
  bool is_unitary(double tol = 1e-12) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// A linear operator on k qubits is a 2^k x 2^k matrix.
using LinearOperator = Matrix;

Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron(std::span<const Matrix> factors);

/// |ket><bra|.
Matrix outer(const StateVector& ket, const StateVector& bra);

StateVector apply(const Matrix& op, const StateVector& v);

/// a * rho * a^dagger.
Matrix sandwich(const Matrix& a, const Matrix& rho);

/// Smallest eigenvalue of a Hermitian matrix (cyclic Jacobi sweeps).
double min_eigenvalue_hermitian(const Matrix& m);

/// Mixed state of an n-qubit register.
class DensityOperator {
 public:
  DensityOperator() = default;
  DensityOperator(int num_qubits, Matrix matrix);

  static DensityOperator from_pure(const StateVector& psi);

  int num_qubits() const { return num_qubits_; }
  const Matrix& matrix() const { return mat_; }
  Matrix& matrix() { return mat_; }

  double trace_real() const { return mat_.trace().real(); }
  bool is_hermitian(double tol = 1e-12) const { return mat_.is_hermitian(tol); }
  double min_eigenvalue() const { return min_eigenvalue_hermitian(mat_); }
  DensityOperator normalized() const;

 private:
  int num_qubits_ = 0;
  Matrix mat_;
};

/// Assignment of integer qubit labels to register slots.  Labels are
/// arbitrary ints (the protocol uses 1..9); slots are 0-based register
/// positions in the bit convention above.
class QubitMap {
 public:
  QubitMap() = default;
  QubitMap(std::initializer_list<std::pair<int, int>> label_slot_pairs);

  /// labels[i] -> slot i.
  static QubitMap contiguous(std::span<const int> labels);

  int slot(int label) const;
  bool contains(int label) const;
  int size() const { return static_cast<int>(labels_.size()); }
  /// Labels in slot order.
  const std::vector<int>& labels() const { return labels_; }

 private:
  std::vector<int> labels_;  // labels_[slot] = label
};

/// Places a k-qubit operator on the labelled qubits of an n-qubit register
/// (identity elsewhere).  targets[0] takes the operator's most significant
/// index bit.
Matrix embed(const Matrix& op, std::span<const int> targets,
             const QubitMap& map, int num_qubits);

/// Reduced state on `keep` (in the given order); traces out the rest.
DensityOperator partial_trace(const DensityOperator& rho,
                              std::span<const int> keep, const QubitMap& map);

/// <ket|rho|ket>, real part.
double expectation(const DensityOperator& rho, const StateVector& ket);

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

/// sigma_z^a * sigma_x^b for a,b in {0,1}.
Matrix pauli_zx(int z_power, int x_power);

}  // namespace triport
