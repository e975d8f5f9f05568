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

#pragma once

#include "su2lift/types.hpp"

#include <array>

namespace su2lift {

// Fixed constant matrices: the so(3) basis L1, L2, L3, their entrywise
// absolute values, and the four Bell-state correlation matrices.
struct AlgebraConstants {
  Mat3 L1, L2, L3;
  Mat3 absL1, absL2, absL3;
  Mat3 T_PhiPlus, T_PhiMinus, T_PsiPlus, T_PsiMinus;
};

const AlgebraConstants& algebra_constants();

// Standard Pauli matrices (sigma1 = X, sigma2 = Y, sigma3 = Z).
const std::array<Eigen::Matrix2cd, 3>& pauli_matrices();

// Validation helpers. The validate_* forms throw InvalidInputError naming the
// violated invariant; the is_* forms just report.
bool is_special_unitary(const SpecialUnitary2& U, double tol = kUnitaryTol);
void validate_special_unitary(const SpecialUnitary2& U, double tol = kUnitaryTol);
bool is_rotation(const Rotation3& O, double tol = kRotationTol);
void validate_rotation(const Rotation3& O, double tol = kRotationTol);
void validate_unit_quaternion(const UnitQuaternion& q, double tol = kQuatNormTol);

// q = a1 + a2 i + b1 j + b2 k  ->  [[a1 + i a2, b1 + i b2], [-b1 + i b2, a1 - i a2]]
SpecialUnitary2 su2_from_quat(const UnitQuaternion& q);

// Exact component extraction, inverse of su2_from_quat.
UnitQuaternion quat_from_su2(const SpecialUnitary2& U);

// Adjoint map O_ij = (1/2) tr(sigma_i U sigma_j U+). U and -U give the same O.
Rotation3 adjoint_so3(const SpecialUnitary2& U);

// The explicit 9-entry rotation matrix of the quaternion parameters. Agrees
// with adjoint_so3(su2_from_quat(q)) to machine precision.
Rotation3 euler_rodrigues(const UnitQuaternion& q);

// Thresholded sign: 0 if |t| <= eps, else the sign of t.
int sgn_eps(double t, double eps = kSignEps);

enum class Axis { X, Y, Z };

struct AxisRotation {
  Rotation3 rotation;
  SpecialUnitary2 unitary;  // the (+)-branch SU(2) representative
};

// Rotation by theta about a coordinate axis, paired with its SU(2) lift.
AxisRotation axis_rotation(Axis axis, double theta);

Vec3 rotate_vector(const Rotation3& O, const Vec3& w);

struct OrthogonalityCheck {
  Complex su2_trace;  // tr(U1 U2+)
  double so3_trace;   // tr(O1^T O2)
  bool orthogonal;    // |su2_trace| <= eps
};

// tr(U1 U2+) = 0 iff tr(O1^T O2) = -1 for the adjoint images.
OrthogonalityCheck check_orthogonality(const SpecialUnitary2& U1, const SpecialUnitary2& U2,
                                       double eps = kSignEps);

}  // namespace su2lift
