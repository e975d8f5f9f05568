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

#include "su2lift/group_kernel.hpp"

#include <cmath>
#include <sstream>

namespace su2lift {

namespace {

AlgebraConstants make_constants() {
  AlgebraConstants c;
  c.L1 << 0, -1, 0, 1, 0, 0, 0, 0, 0;
  c.L2 << 0, 0, 1, 0, 0, 0, -1, 0, 0;
  c.L3 << 0, 0, 0, 0, 0, -1, 0, 1, 0;
  c.absL1 = c.L1.cwiseAbs();
  c.absL2 = c.L2.cwiseAbs();
  c.absL3 = c.L3.cwiseAbs();
  c.T_PhiPlus = Vec3(1, -1, 1).asDiagonal();
  c.T_PhiMinus = Vec3(-1, 1, 1).asDiagonal();
  c.T_PsiPlus = Vec3(1, 1, -1).asDiagonal();
  c.T_PsiMinus = Vec3(-1, -1, -1).asDiagonal();
  return c;
}

std::array<Eigen::Matrix2cd, 3> make_paulis() {
  const Complex i(0, 1);
  std::array<Eigen::Matrix2cd, 3> s;
  s[0] << 0, 1, 1, 0;
  s[1] << 0, -i, i, 0;
  s[2] << 1, 0, 0, -1;
  return s;
}

}  // namespace

const AlgebraConstants& algebra_constants() {
  static const AlgebraConstants c = make_constants();
  return c;
}

const std::array<Eigen::Matrix2cd, 3>& pauli_matrices() {
  static const std::array<Eigen::Matrix2cd, 3> s = make_paulis();
  return s;
}

bool is_special_unitary(const SpecialUnitary2& U, double tol) {
  const double unitarity = (U * U.adjoint() - Eigen::Matrix2cd::Identity()).norm();
  const double det_dev = std::abs(U.determinant() - Complex(1, 0));
  return unitarity <= tol && det_dev <= tol;
}

void validate_special_unitary(const SpecialUnitary2& U, double tol) {
  const double unitarity = (U * U.adjoint() - Eigen::Matrix2cd::Identity()).norm();
  if (unitarity > tol) {
    std::ostringstream msg;
    msg << "matrix fails unitarity: ||U U+ - I||_F = " << unitarity;
    throw InvalidInputError(msg.str());
  }
  const double det_dev = std::abs(U.determinant() - Complex(1, 0));
  if (det_dev > tol) {
    std::ostringstream msg;
    msg << "matrix fails determinant-one: |det(U) - 1| = " << det_dev;
    throw InvalidInputError(msg.str());
  }
}

bool is_rotation(const Rotation3& O, double tol) {
  const double orthogonality = (O.transpose() * O - Mat3::Identity()).norm();
  const double det_dev = std::abs(O.determinant() - 1.0);
  return orthogonality <= tol && det_dev <= tol;
}

void validate_rotation(const Rotation3& O, double tol) {
  const double orthogonality = (O.transpose() * O - Mat3::Identity()).norm();
  if (orthogonality > tol) {
    std::ostringstream msg;
    msg << "matrix fails orthogonality: ||O^T O - I||_F = " << orthogonality;
    throw InvalidInputError(msg.str());
  }
  const double det_dev = std::abs(O.determinant() - 1.0);
  if (det_dev > tol) {
    std::ostringstream msg;
    msg << "matrix fails determinant-one: |det(O) - 1| = " << det_dev;
    throw InvalidInputError(msg.str());
  }
}

void validate_unit_quaternion(const UnitQuaternion& q, double tol) {
  const double dev = std::abs(q.squared_norm() - 1.0);
  if (dev > tol) {
    std::ostringstream msg;
    msg << "quaternion fails unit norm: |a1^2 + a2^2 + b1^2 + b2^2 - 1| = " << dev;
    throw InvalidInputError(msg.str());
  }
}

SpecialUnitary2 su2_from_quat(const UnitQuaternion& q) {
  validate_unit_quaternion(q);
  SpecialUnitary2 U;
  U << Complex(q.a1, q.a2), Complex(q.b1, q.b2), Complex(-q.b1, q.b2), Complex(q.a1, -q.a2);
  return U;
}

UnitQuaternion quat_from_su2(const SpecialUnitary2& U) {
  validate_special_unitary(U);
  return {U(0, 0).real(), U(0, 0).imag(), U(0, 1).real(), U(0, 1).imag()};
}

Rotation3 adjoint_so3(const SpecialUnitary2& U) {
  validate_special_unitary(U);
  const auto& sigma = pauli_matrices();
  const Eigen::Matrix2cd Udag = U.adjoint();
  Rotation3 O;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Complex entry = 0.5 * (sigma[i] * U * sigma[j] * Udag).trace();
      if (std::abs(entry.imag()) > 1e-9) {
        std::ostringstream msg;
        msg << "adjoint entry (" << i << "," << j << ") has imaginary residue " << entry.imag();
        throw InternalConsistencyError(msg.str());
      }
      O(i, j) = entry.real();
    }
  }
  return O;
}

Rotation3 euler_rodrigues(const UnitQuaternion& q) {
  validate_unit_quaternion(q);
  const double a1 = q.a1, a2 = q.a2, b1 = q.b1, b2 = q.b2;
  const double tau1 = a1 * a1 - a2 * a2 - b1 * b1 + b2 * b2;
  const double tau2 = a1 * a1 - a2 * a2 + b1 * b1 - b2 * b2;
  const double tau3 = a1 * a1 + a2 * a2 - b1 * b1 - b2 * b2;
  const double chi11 = a1 * b1, chi12 = a1 * b2, chi21 = a2 * b1, chi22 = a2 * b2;
  const double mu12 = a1 * a2, nu12 = b1 * b2;
  Rotation3 O;
  O << tau1, 2 * (mu12 + nu12), 2 * (-chi11 + chi22),  //
      2 * (-mu12 + nu12), tau2, 2 * (chi21 + chi12),   //
      2 * (chi11 + chi22), 2 * (chi21 - chi12), tau3;
  return O;
}

int sgn_eps(double t, double eps) {
  if (std::abs(t) <= eps) return 0;
  return t > 0 ? 1 : -1;
}

AxisRotation axis_rotation(Axis axis, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  const double ch = std::cos(theta / 2), sh = std::sin(theta / 2);
  const Complex i(0, 1);
  AxisRotation out;
  switch (axis) {
    case Axis::X:
      out.rotation << 1, 0, 0, 0, c, -s, 0, s, c;
      out.unitary << ch, -i * sh, -i * sh, ch;
      break;
    case Axis::Y:
      out.rotation << c, 0, s, 0, 1, 0, -s, 0, c;
      out.unitary << ch, -sh, sh, ch;
      break;
    case Axis::Z:
      out.rotation << c, -s, 0, s, c, 0, 0, 0, 1;
      out.unitary << std::exp(-i * (theta / 2)), 0, 0, std::exp(i * (theta / 2));
      break;
  }
  return out;
}

Vec3 rotate_vector(const Rotation3& O, const Vec3& w) {
  validate_rotation(O);
  return O * w;
}

OrthogonalityCheck check_orthogonality(const SpecialUnitary2& U1, const SpecialUnitary2& U2,
                                       double eps) {
  validate_special_unitary(U1);
  validate_special_unitary(U2);
  OrthogonalityCheck out;
  out.su2_trace = (U1 * U2.adjoint()).trace();
  out.so3_trace = (adjoint_so3(U1).transpose() * adjoint_so3(U2)).trace();
  out.orthogonal = std::abs(out.su2_trace) <= eps;
  return out;
}

}  // namespace su2lift
