// Copyright 2026 su2lift authors
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

#include "su2lift/two_qubit.hpp"

#include "su2lift/group_kernel.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <sstream>

namespace su2lift {

namespace {

double real_trace(const Eigen::Matrix4cd& M, const char* what) {
  const Complex t = M.trace();
  if (std::abs(t.imag()) > kDensityTol) {
    std::ostringstream msg;
    msg << what << " has imaginary residue " << t.imag();
    throw InvalidInputError(msg.str());
  }
  return t.real();
}

}  // namespace

void validate_density(const DensityMatrix4& rho) {
  const double herm = (rho - rho.adjoint()).norm();
  if (herm > kDensityTol) {
    std::ostringstream msg;
    msg << "density matrix fails hermiticity: ||rho - rho+||_F = " << herm;
    throw InvalidInputError(msg.str());
  }
  const double trace_dev = std::abs(rho.trace() - Complex(1, 0));
  if (trace_dev > kDensityTol) {
    std::ostringstream msg;
    msg << "density matrix fails unit trace: |tr(rho) - 1| = " << trace_dev;
    throw InvalidInputError(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<DensityMatrix4> es(rho, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < kPsdFloor) {
    std::ostringstream msg;
    msg << "density matrix fails positivity: smallest eigenvalue = " << min_eig;
    throw InvalidInputError(msg.str());
  }
}

BlochForm to_bloch(const DensityMatrix4& rho) {
  validate_density(rho);
  const auto& sigma = pauli_matrices();
  const Eigen::Matrix2cd I2 = Eigen::Matrix2cd::Identity();
  BlochForm bf;
  for (int i = 0; i < 3; ++i) {
    bf.a(i) = real_trace(Eigen::kroneckerProduct(sigma[i], I2) * rho, "Bloch vector a entry");
    bf.b(i) = real_trace(Eigen::kroneckerProduct(I2, sigma[i]) * rho, "Bloch vector b entry");
    for (int j = 0; j < 3; ++j) {
      bf.T(i, j) =
          real_trace(Eigen::kroneckerProduct(sigma[i], sigma[j]) * rho, "correlation entry");
    }
  }
  return bf;
}

DensityMatrix4 from_bloch(const BlochForm& bf) {
  const auto& sigma = pauli_matrices();
  const Eigen::Matrix2cd I2 = Eigen::Matrix2cd::Identity();
  DensityMatrix4 rho = Eigen::kroneckerProduct(I2, I2);
  for (int i = 0; i < 3; ++i) {
    rho += bf.a(i) * Eigen::kroneckerProduct(sigma[i], I2);
    rho += bf.b(i) * Eigen::kroneckerProduct(I2, sigma[i]);
    for (int j = 0; j < 3; ++j) {
      rho += bf.T(i, j) * Eigen::kroneckerProduct(sigma[i], sigma[j]);
    }
  }
  rho *= 0.25;
  Eigen::SelfAdjointEigenSolver<DensityMatrix4> es(rho, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < kPsdFloor) {
    std::ostringstream msg;
    msg << "Bloch form does not describe a state: smallest eigenvalue = " << min_eig;
    throw NotAStateError(msg.str());
  }
  return rho;
}

DensityMatrix4 apply_local(const DensityMatrix4& rho, const SpecialUnitary2& UL,
                           const SpecialUnitary2& UR) {
  validate_density(rho);
  validate_special_unitary(UL);
  validate_special_unitary(UR);
  const Eigen::Matrix4cd U = Eigen::kroneckerProduct(UL, UR);
  return U * rho * U.adjoint();
}

BlochForm transform_bloch(const BlochForm& bf, const Rotation3& L, const Rotation3& R) {
  validate_rotation(L);
  validate_rotation(R);
  BlochForm out;
  out.a = L * bf.a;
  out.b = R * bf.b;
  out.T = L * bf.T * R.transpose();
  return out;
}

}  // namespace su2lift
