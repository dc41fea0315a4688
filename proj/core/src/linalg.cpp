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

#include "triport/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace triport {

namespace {

bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

int log2_exact(std::size_t x) {
  int n = 0;
  while ((std::size_t{1} << n) < x) ++n;
  return n;
}

}  // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 0 || num_qubits > 30)
    throw std::invalid_argument("state vector qubit count out of range");
  amps_.assign(std::size_t{1} << num_qubits, Complex{});
}

StateVector::StateVector(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
  if (num_qubits < 0 || amps_.size() != (std::size_t{1} << num_qubits))
    throw std::invalid_argument("amplitude vector length must be 2^n");
}

StateVector StateVector::basis_state(int num_qubits, std::size_t index) {
  StateVector v(num_qubits);
  if (index >= v.dim())
    throw std::invalid_argument("basis index exceeds register dimension");
  v[index] = 1.0;
  return v;
}

double StateVector::norm_sq() const {
  double s = 0.0;
  for (const Complex& a : amps_) s += std::norm(a);
  return s;
}

double StateVector::norm() const { return std::sqrt(norm_sq()); }

bool StateVector::is_normalized(double tol) const {
  return std::abs(norm_sq() - 1.0) <= tol;
}

Complex inner(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("inner product dimension mismatch");
  Complex s{};
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  StateVector out(a.num_qubits() + b.num_qubits());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] == Complex{}) continue;
    for (std::size_t j = 0; j < b.dim(); ++j)
      out[i * b.dim() + j] = a[i] * b[j];
  }
  return out;
}

StateVector tensor(std::span<const StateVector> factors) {
  if (factors.empty())
    throw std::invalid_argument("tensor product of an empty factor list");
  StateVector out = factors[0];
  for (std::size_t k = 1; k < factors.size(); ++k)
    out = tensor(out, factors[k]);
  return out;
}

StateVector permute_qubits(const StateVector& v,
                           std::span<const int> new_slot_of_old) {
  const int n = v.num_qubits();
  if (static_cast<int>(new_slot_of_old.size()) != n)
    throw std::invalid_argument("permutation length must equal qubit count");
  std::vector<bool> seen(n, false);
  for (int s : new_slot_of_old) {
    if (s < 0 || s >= n || seen[s])
      throw std::invalid_argument("slot permutation is not a bijection");
    seen[s] = true;
  }
  StateVector out(n);
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i] == Complex{}) continue;
    std::size_t j = 0;
    for (int s = 0; s < n; ++s)
      j = with_bit(j, new_slot_of_old[s], n, bit_at(i, s, n));
    out[j] = v[i];
  }
  return out;
}

Matrix::Matrix(std::size_t dim) : dim_(dim), data_(dim * dim, Complex{}) {}

Matrix::Matrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim * dim)
    throw std::invalid_argument("matrix entry count must be dim^2");
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (dim_ != rhs.dim_)
    throw std::invalid_argument("matrix product dimension mismatch");
  Matrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    const Complex* arow = data_.data() + i * dim_;
    Complex* orow = out.data_.data() + i * dim_;
    for (std::size_t k = 0; k < dim_; ++k) {
      const Complex aik = arow[k];
      if (aik == Complex{}) continue;
      const Complex* brow = rhs.data_.data() + k * dim_;
      for (std::size_t j = 0; j < dim_; ++j) orow[j] += aik * brow[j];
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  Matrix out = *this;
  out += rhs;
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (dim_ != rhs.dim_)
    throw std::invalid_argument("matrix sum dimension mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (dim_ != rhs.dim_)
    throw std::invalid_argument("matrix sum dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(Complex scale) {
  for (Complex& x : data_) x *= scale;
  return *this;
}

Matrix Matrix::scaled(Complex scale) const {
  Matrix out = *this;
  out *= scale;
  return out;
}

Matrix Matrix::adjoint() const {
  Matrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      out.at(j, i) = std::conj(at(i, j));
  return out;
}

Complex Matrix::trace() const {
  Complex s{};
  for (std::size_t i = 0; i < dim_; ++i) s += at(i, i);
  return s;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const Complex& x : data_) m = std::max(m, std::abs(x));
  return m;
}

double Matrix::max_abs_diff(const Matrix& rhs) const {
  if (dim_ != rhs.dim_)
    throw std::invalid_argument("matrix comparison dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i)
    m = std::max(m, std::abs(data_[i] - rhs.data_[i]));
  return m;
}

bool Matrix::is_hermitian(double tol) const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      if (std::abs(at(i, j) - std::conj(at(j, i))) > tol) return false;
  return true;
}

bool Matrix::is_unitary(double tol) const {
  return (adjoint() * *this).max_abs_diff(identity(dim_)) <= tol;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Complex aij = a.at(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < b.dim(); ++k)
        for (std::size_t l = 0; l < b.dim(); ++l)
          out.at(i * b.dim() + k, j * b.dim() + l) = aij * b.at(k, l);
    }
  return out;
}

Matrix kron(std::span<const Matrix> factors) {
  if (factors.empty())
    throw std::invalid_argument("kron of an empty factor list");
  Matrix out = factors[0];
  for (std::size_t k = 1; k < factors.size(); ++k) out = kron(out, factors[k]);
  return out;
}

Matrix outer(const StateVector& ket, const StateVector& bra) {
  if (ket.dim() != bra.dim())
    throw std::invalid_argument("outer product dimension mismatch");
  Matrix out(ket.dim());
  for (std::size_t i = 0; i < ket.dim(); ++i) {
    if (ket[i] == Complex{}) continue;
    for (std::size_t j = 0; j < bra.dim(); ++j)
      out.at(i, j) = ket[i] * std::conj(bra[j]);
  }
  return out;
}

StateVector apply(const Matrix& op, const StateVector& v) {
  if (op.dim() != v.dim())
    throw std::invalid_argument("operator/state dimension mismatch");
  StateVector out(v.num_qubits());
  for (std::size_t i = 0; i < op.dim(); ++i) {
    Complex s{};
    for (std::size_t j = 0; j < op.dim(); ++j) s += op.at(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

Matrix sandwich(const Matrix& a, const Matrix& rho) {
  return a * rho * a.adjoint();
}

double min_eigenvalue_hermitian(const Matrix& m) {
  if (!m.is_hermitian(1e-9))
    throw std::invalid_argument("eigenvalue routine requires a Hermitian matrix");
  const std::size_t n = m.dim();
  Matrix a = m;
  // Cyclic Jacobi: annihilate off-diagonal entries with complex Givens
  // rotations until the off-diagonal mass is negligible.
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a.at(p, q));
    if (off < 1e-28 * std::max(1.0, a.max_abs())) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a.at(p, q);
        const double g = std::abs(apq);
        if (g < 1e-300) continue;
        const Complex phase = apq / g;
        const double app = a.at(p, p).real();
        const double aqq = a.at(q, q).real();
        const double tau = (aqq - app) / (2.0 * g);
        const double t = (tau >= 0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const Complex s = phase * (t * c);
        // Columns: [vp vq] <- [vp vq] * [[c, s], [-conj(s), c]]
        for (std::size_t i = 0; i < n; ++i) {
          const Complex vip = a.at(i, p);
          const Complex viq = a.at(i, q);
          a.at(i, p) = c * vip - std::conj(s) * viq;
          a.at(i, q) = s * vip + c * viq;
        }
        // Rows: conjugate-transpose action.
        for (std::size_t j = 0; j < n; ++j) {
          const Complex apj = a.at(p, j);
          const Complex aqj = a.at(q, j);
          a.at(p, j) = c * apj - s * aqj;
          a.at(q, j) = std::conj(s) * apj + c * aqj;
        }
      }
    }
  }
  double mn = a.at(0, 0).real();
  for (std::size_t i = 1; i < n; ++i) mn = std::min(mn, a.at(i, i).real());
  return mn;
}

DensityOperator::DensityOperator(int num_qubits, Matrix matrix)
    : num_qubits_(num_qubits), mat_(std::move(matrix)) {
  if (mat_.dim() != (std::size_t{1} << num_qubits))
    throw std::invalid_argument("density matrix dimension must be 2^n");
}

DensityOperator DensityOperator::from_pure(const StateVector& psi) {
  return DensityOperator(psi.num_qubits(), outer(psi, psi));
}

DensityOperator DensityOperator::normalized() const {
  const double tr = trace_real();
  if (std::abs(tr) < 1e-300)
    throw std::domain_error("cannot normalize a traceless density operator");
  return DensityOperator(num_qubits_, mat_.scaled(1.0 / tr));
}

QubitMap::QubitMap(std::initializer_list<std::pair<int, int>> pairs) {
  labels_.assign(pairs.size(), 0);
  std::vector<bool> used(pairs.size(), false);
  for (const auto& [label, slot] : pairs) {
    if (slot < 0 || slot >= static_cast<int>(pairs.size()) || used[slot])
      throw std::invalid_argument("qubit map slots must be a 0-based bijection");
    used[slot] = true;
    labels_[slot] = label;
  }
  for (std::size_t i = 0; i < labels_.size(); ++i)
    for (std::size_t j = i + 1; j < labels_.size(); ++j)
      if (labels_[i] == labels_[j])
        throw std::invalid_argument("qubit map labels must be distinct");
}

QubitMap QubitMap::contiguous(std::span<const int> labels) {
  QubitMap m;
  m.labels_.assign(labels.begin(), labels.end());
  for (std::size_t i = 0; i < m.labels_.size(); ++i)
    for (std::size_t j = i + 1; j < m.labels_.size(); ++j)
      if (m.labels_[i] == m.labels_[j])
        throw std::invalid_argument("qubit map labels must be distinct");
  return m;
}

int QubitMap::slot(int label) const {
  for (std::size_t s = 0; s < labels_.size(); ++s)
    if (labels_[s] == label) return static_cast<int>(s);
  throw std::invalid_argument("unknown qubit label " + std::to_string(label));
}

bool QubitMap::contains(int label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

Matrix embed(const Matrix& op, std::span<const int> targets,
             const QubitMap& map, int num_qubits) {
  const int arity = static_cast<int>(targets.size());
  if (!is_power_of_two(op.dim()) || log2_exact(op.dim()) != arity)
    throw std::invalid_argument("operator dimension must be 2^#targets");
  if (num_qubits < arity || num_qubits > 30)
    throw std::invalid_argument("register too small for embedded operator");
  std::vector<int> slots(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    slots[i] = map.slot(targets[i]);
    if (slots[i] >= num_qubits)
      throw std::invalid_argument("target slot exceeds register size");
    for (std::size_t j = 0; j < i; ++j)
      if (slots[j] == slots[i])
        throw std::invalid_argument("duplicate embed target");
  }
  const std::size_t dim = std::size_t{1} << num_qubits;
  const std::size_t op_dim = op.dim();
  Matrix out(dim);
  for (std::size_t row = 0; row < dim; ++row) {
    std::size_t op_row = 0;
    for (int i = 0; i < arity; ++i)
      op_row = (op_row << 1) | bit_at(row, slots[i], num_qubits);
    for (std::size_t op_col = 0; op_col < op_dim; ++op_col) {
      const Complex val = op.at(op_row, op_col);
      if (val == Complex{}) continue;
      std::size_t col = row;
      for (int i = 0; i < arity; ++i)
        col = with_bit(col, slots[i], num_qubits,
                       static_cast<int>((op_col >> (arity - 1 - i)) & 1u));
      out.at(row, col) = val;
    }
  }
  return out;
}

DensityOperator partial_trace(const DensityOperator& rho,
                              std::span<const int> keep, const QubitMap& map) {
  const int n = rho.num_qubits();
  if (keep.empty())
    throw std::invalid_argument("partial trace must keep at least one qubit");
  std::vector<int> kept_slots(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    kept_slots[i] = map.slot(keep[i]);
    if (kept_slots[i] >= n)
      throw std::invalid_argument("kept slot exceeds register size");
    for (std::size_t j = 0; j < i; ++j)
      if (kept_slots[j] == kept_slots[i])
        throw std::invalid_argument("duplicate kept qubit");
  }
  std::vector<int> rest_slots;
  for (int s = 0; s < n; ++s)
    if (std::find(kept_slots.begin(), kept_slots.end(), s) == kept_slots.end())
      rest_slots.push_back(s);
  const int k = static_cast<int>(kept_slots.size());
  const int r = static_cast<int>(rest_slots.size());
  const std::size_t out_dim = std::size_t{1} << k;
  Matrix out(out_dim);
  for (std::size_t a = 0; a < out_dim; ++a) {
    for (std::size_t b = 0; b < out_dim; ++b) {
      Complex s{};
      for (std::size_t rest = 0; rest < (std::size_t{1} << r); ++rest) {
        std::size_t row = 0, col = 0;
        for (int i = 0; i < k; ++i) {
          row = with_bit(row, kept_slots[i], n, bit_at(a, i, k));
          col = with_bit(col, kept_slots[i], n, bit_at(b, i, k));
        }
        for (int i = 0; i < r; ++i) {
          const int bit = bit_at(rest, i, r);
          row = with_bit(row, rest_slots[i], n, bit);
          col = with_bit(col, rest_slots[i], n, bit);
        }
        s += rho.matrix().at(row, col);
      }
      out.at(a, b) = s;
    }
  }
  return DensityOperator(k, std::move(out));
}

double expectation(const DensityOperator& rho, const StateVector& ket) {
  if (rho.matrix().dim() != ket.dim())
    throw std::invalid_argument("expectation dimension mismatch");
  Complex s{};
  for (std::size_t i = 0; i < ket.dim(); ++i) {
    if (ket[i] == Complex{}) continue;
    for (std::size_t j = 0; j < ket.dim(); ++j)
      s += std::conj(ket[i]) * rho.matrix().at(i, j) * ket[j];
  }
  return s.real();
}

Matrix pauli_x() {
  Matrix m(2);
  m.at(0, 1) = 1.0;
  m.at(1, 0) = 1.0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2);
  m.at(0, 1) = Complex(0.0, -1.0);
  m.at(1, 0) = Complex(0.0, 1.0);
  return m;
}

Matrix pauli_z() {
  Matrix m(2);
  m.at(0, 0) = 1.0;
  m.at(1, 1) = -1.0;
  return m;
}

Matrix pauli_zx(int z_power, int x_power) {
  if ((z_power & ~1) || (x_power & ~1))
    throw std::invalid_argument("pauli powers must be 0 or 1");
  // sigma_z^a sigma_x^b = sum_k (-1)^(a k) |k><k xor b|
  Matrix m(2);
  for (int kbit = 0; kbit < 2; ++kbit)
    m.at(kbit, kbit ^ x_power) = (z_power && kbit) ? -1.0 : 1.0;
  return m;
}

}  // namespace triport
