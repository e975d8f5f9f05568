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

#include "su2lift/group_kernel.hpp"
#include "su2lift/types.hpp"

#include <array>

namespace su2lift {

// The closed-form SO(3) -> SU(2) lift. Every rotation has exactly two SU(2)
// preimages {U, -U}; the functions below return one canonical representative:
// the quaternion has a1 > 0, or, when a1 vanishes, its first nonzero
// component among (a2, b1, b2) is positive.

enum class LiftBranch { Real, Vector };

struct LiftResult {
  SpecialUnitary2 representative;
  LiftBranch branch;
  UnitQuaternion quaternion;  // quaternion of the representative
  double residual;            // ||adjoint_so3(representative) - input||_F
};

struct BellTraceMagnitudes {
  double a1, a2, b1, b2;  // |alpha1|, |alpha2|, |beta1|, |beta2|
};

// Component magnitudes from the Bell correlation-matrix traces:
// |a1| = (1/2) sqrt(1 - tr(O T_Psi-)), and cyclically for the other three.
// Radicands are clamped to [0, 4]; violations beyond kRadicandSlack reject
// the input as non-special-orthogonal.
BellTraceMagnitudes bell_trace_magnitudes(const Rotation3& O);

// Signs of the six pairwise component products, read off the traces against
// L1, L2, L3, |L1|, |L2|, |L3|. Order:
// sgn(a1 a2), sgn(a1 b1), sgn(a1 b2), sgn(b1 b2), sgn(a2 b2), sgn(a2 b1).
std::array<int, 6> sign_table(const Rotation3& O, double eps = kSignEps);

// Real-quaternion branch. Requires 1 + tr(O) above the branch tolerance.
SpecialUnitary2 lift_real(const Rotation3& O, double eps = kSignEps);

// The W matrix function used to assemble the vector branch: its sign
// selectors are traces against the caller-chosen matrices X, Y, Z.
Eigen::Matrix2cd w_matrix(const Rotation3& O, const Mat3& X, const Mat3& Y, const Mat3& Z,
                          double eps = kSignEps);

// Vector-quaternion branch (a1 = 0, i.e. tr(O) = -1): the W-matrix sum with
// the gamma selectors pulling out each degenerate component pattern.
SpecialUnitary2 lift_vector(const Rotation3& O, double eps = kSignEps);

// General lift. Dispatches on 1 + tr(O): at or below eps the vector branch
// applies; inside (eps, kBranchBand) both branches are evaluated and the
// smaller adjoint residual wins.
LiftResult lift(const Rotation3& O, double eps = kSignEps);

}  // namespace su2lift
