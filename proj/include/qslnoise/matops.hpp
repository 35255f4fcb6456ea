// Copyright 2026 The qslnoise Authors
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

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <vector>

// Dense complex-matrix kernel for one- and two-qubit work.
//
// Basis convention used throughout: single-qubit states are ordered
// |1>, |0> (excited first), so sigma_minus = |0><1| has its unit entry at
// (1, 0).  Two-qubit states are ordered |11>, |10>, |01>, |00>; tensor
// factors follow kron(first qubit, second qubit).
//
// Matrix arithmetic (products, sums, scalar multiples, trace) is Eigen's;
// the helpers below add the quantum-specific pieces on top.

namespace qslnoise {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

struct NotHermitianError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DimensionMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotDensityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ---------- elementary operators ----------

inline Matrix identity(int dim) { return Matrix::Identity(dim, dim); }

inline Matrix sigma_x() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

// sigma1 sigma2 = i sigma3 with the |1>, |0> ordering above.
inline Matrix sigma_y() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = Complex(0.0, -1.0);
  m(1, 0) = Complex(0.0, 1.0);
  return m;
}

// +1 on the excited state.
inline Matrix sigma_z() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

// |0><1|
inline Matrix sigma_minus() {
  Matrix m = Matrix::Zero(2, 2);
  m(1, 0) = 1.0;
  return m;
}

// |1><0|
inline Matrix sigma_plus() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  return m;
}

inline Vector basis_ket(int dim, int index) {
  if (dim < 1 || index < 0 || index >= dim) {
    throw std::invalid_argument("basis_ket: index out of range");
  }
  Vector v = Vector::Zero(dim);
  v(index) = 1.0;
  return v;
}

// ---------- products and geometry ----------

Matrix kron(const Matrix& a, const Matrix& b);

inline Matrix dagger(const Matrix& a) { return a.adjoint(); }

inline Complex trace(const Matrix& a) { return a.trace(); }

// Hilbert-Schmidt (Frobenius) norm; the only norm used in this library.
inline double hs_norm(const Matrix& a) { return a.norm(); }

inline Complex hs_inner(const Matrix& a, const Matrix& b) {
  return (a.adjoint() * b).trace();
}

bool is_hermitian(const Matrix& a, double tol = 1e-10);

// All eigenvalues of a Hermitian matrix, ascending.  Throws NotHermitianError
// if the symmetry check (tolerance 1e-10 on the largest asymmetry) fails.
std::vector<double> hermitian_eigenvalues(const Matrix& a);

// ---------- density matrices ----------

// A validated state: Hermitian within 1e-12, unit trace within 1e-12,
// eigenvalues above -positivity_tol, purity in [1/dim, 1] up to slack.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m, double positivity_tol = 1e-10);

  const Matrix& matrix() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }
  double purity() const { return purity_; }

  static DensityMatrix pure(const Vector& ket);
  static DensityMatrix maximally_mixed(int dim);
  // (|11> + |00>)/sqrt(2) as a projector.
  static DensityMatrix bell_phi_plus();

 private:
  Matrix m_;
  double purity_ = 0.0;
};

}  // namespace qslnoise
