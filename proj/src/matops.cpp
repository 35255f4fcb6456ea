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

#include "qslnoise/matops.hpp"

#include <cmath>
#include <string>

namespace qslnoise {

Matrix kron(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols()) {
    throw DimensionMismatchError("kron: inputs must be square");
  }
  const Eigen::Index na = a.rows();
  const Eigen::Index nb = b.rows();
  Matrix out(na * nb, na * nb);
  for (Eigen::Index i = 0; i < na; ++i) {
    for (Eigen::Index j = 0; j < na; ++j) {
      out.block(i * nb, j * nb, nb, nb) = a(i, j) * b;
    }
  }
  return out;
}

bool is_hermitian(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

std::vector<double> hermitian_eigenvalues(const Matrix& a) {
  if (!is_hermitian(a)) {
    throw NotHermitianError("hermitian_eigenvalues: input is not Hermitian");
  }
  // Symmetrize first so the solver sees an exactly Hermitian input.
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (a + a.adjoint()),
                                               Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigenvalues: eigensolver failed");
  }
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

DensityMatrix::DensityMatrix(Matrix m, double positivity_tol) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1) {
    throw NotDensityError("DensityMatrix: matrix must be square");
  }
  if (!is_hermitian(m_, 1e-12)) {
    throw NotDensityError("DensityMatrix: matrix is not Hermitian");
  }
  const double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > 1e-12) {
    throw NotDensityError("DensityMatrix: trace differs from 1 by " +
                          std::to_string(tr - 1.0));
  }
  const auto eigs = hermitian_eigenvalues(m_);
  if (eigs.front() < -positivity_tol) {
    throw NotDensityError("DensityMatrix: negative eigenvalue " +
                          std::to_string(eigs.front()));
  }
  purity_ = (m_ * m_).trace().real();
  const double dim_inv = 1.0 / static_cast<double>(m_.rows());
  if (purity_ < dim_inv - 1e-10 || purity_ > 1.0 + 1e-10) {
    throw NotDensityError("DensityMatrix: purity out of range");
  }
}

DensityMatrix DensityMatrix::pure(const Vector& ket) {
  if (std::abs(ket.norm() - 1.0) > 1e-12) {
    throw NotDensityError("DensityMatrix::pure: ket is not normalized");
  }
  return DensityMatrix(ket * ket.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  if (dim < 1) throw NotDensityError("DensityMatrix::maximally_mixed: dim < 1");
  return DensityMatrix(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::bell_phi_plus() {
  Vector ket = Vector::Zero(4);
  ket(0) = 1.0 / std::sqrt(2.0);  // |11>
  ket(3) = 1.0 / std::sqrt(2.0);  // |00>
  return pure(ket);
}

}  // namespace qslnoise
