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

#include "su2lift/lift.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace su2lift {

namespace {

// Clamps a Bell-trace radicand to [0, 4]; deviations beyond kRadicandSlack
// mean the input was not special orthogonal.
double clamp_radicand(double r) {
  if (r < -kRadicandSlack || r > 4.0 + kRadicandSlack) {
    std::ostringstream msg;
    msg << "Bell-trace radicand " << r << " outside [0, 4]: matrix not special orthogonal";
    throw InvalidInputError(msg.str());
  }
  return std::min(std::max(r, 0.0), 4.0);
}

double half_sqrt_bell(const Rotation3& O, const Mat3& bell) {
  return 0.5 * std::sqrt(clamp_radicand(1.0 - (O * bell).trace()));
}

UnitQuaternion canonical_sign(UnitQuaternion q, double eps) {
  double lead = q.a1;
  if (std::abs(q.a1) <= eps) {
    if (std::abs(q.a2) > eps) {
      lead = q.a2;
    } else if (std::abs(q.b1) > eps) {
      lead = q.b1;
    } else {
      lead = q.b2;
    }
  }
  return lead < 0 ? -q : q;
}

// Vector-branch assembly without the branch precondition check, so the
// general lift can evaluate it inside the ambiguous band.
SpecialUnitary2 assemble_vector(const Rotation3& O, double eps) {
  const auto& c = algebra_constants();
  const Mat3 I = Mat3::Identity();

  const int s1 = sgn_eps((O * c.absL1).trace(), eps);
  const int s2 = sgn_eps((O * c.absL2).trace(), eps);
  const int s3 = sgn_eps((O * c.absL3).trace(), eps);
  const int g1 = 1 - s1 * s1;
  const int g2 = 1 - s2 * s2;
  const int g3 = 1 - s3 * s3;

  Eigen::Matrix2cd UV = w_matrix(O, c.absL1, c.absL2, c.absL3, eps);
  if ((1 - g1) * g2 * g3 != 0) UV += w_matrix(O, I, I, -c.absL1, eps);
  if (g1 * (1 - g2) * g3 != 0) UV += w_matrix(O, -c.absL2, I, I, eps);
  if (g1 * g2 * (1 - g3) != 0) UV += w_matrix(O, I, -c.absL3, I, eps);
  if (g1 * g2 * g3 != 0) UV += w_matrix(O, -I, -I, -I, eps);

  UnitQuaternion q{UV(0, 0).real(), UV(0, 0).imag(), UV(0, 1).real(), UV(0, 1).imag()};
  if (q.norm() < 0.5) {
    throw InternalConsistencyError("vector-branch assembly produced a degenerate matrix");
  }
  q = canonical_sign(q.normalized(), eps);
  return su2_from_quat(q);
}

}  // namespace

BellTraceMagnitudes bell_trace_magnitudes(const Rotation3& O) {
  const auto& c = algebra_constants();
  return {half_sqrt_bell(O, c.T_PsiMinus), half_sqrt_bell(O, c.T_PsiPlus),
          half_sqrt_bell(O, c.T_PhiPlus), half_sqrt_bell(O, c.T_PhiMinus)};
}

std::array<int, 6> sign_table(const Rotation3& O, double eps) {
  const auto& c = algebra_constants();
  return {sgn_eps((O * c.L1).trace(), eps),    sgn_eps((O * c.L2).trace(), eps),
          sgn_eps((O * c.L3).trace(), eps),    sgn_eps((O * c.absL1).trace(), eps),
          sgn_eps((O * c.absL2).trace(), eps), sgn_eps((O * c.absL3).trace(), eps)};
}

SpecialUnitary2 lift_real(const Rotation3& O, double eps) {
  if (1.0 + O.trace() <= eps) {
    throw InvalidInputError("lift_real called on the vector branch: 1 + tr(O) is zero");
  }
  const BellTraceMagnitudes m = bell_trace_magnitudes(O);
  const std::array<int, 6> s = sign_table(O, eps);
  const UnitQuaternion q{m.a1, s[0] * m.a2, s[1] * m.b1, s[2] * m.b2};
  return su2_from_quat(q.normalized());
}

Eigen::Matrix2cd w_matrix(const Rotation3& O, const Mat3& X, const Mat3& Y, const Mat3& Z,
                          double eps) {
  const auto& c = algebra_constants();
  const double a2 = sgn_eps((O * X).trace(), eps) * half_sqrt_bell(O, c.T_PsiPlus);
  const double b1 = sgn_eps((O * Y).trace(), eps) * half_sqrt_bell(O, c.T_PhiPlus);
  const double b2 = sgn_eps((O * Z).trace(), eps) * half_sqrt_bell(O, c.T_PhiMinus);
  Eigen::Matrix2cd W;
  W << Complex(0, a2), Complex(b1, b2), Complex(-b1, b2), Complex(0, -a2);
  return W;
}

SpecialUnitary2 lift_vector(const Rotation3& O, double eps) {
  if (std::abs(1.0 + O.trace()) > eps) {
    throw InvalidInputError("lift_vector called on the real branch: tr(O) differs from -1");
  }
  return assemble_vector(O, eps);
}

LiftResult lift(const Rotation3& O, double eps) {
  validate_rotation(O);
  const double v = 1.0 + O.trace();
  const double band = std::max(eps, kBranchBand);

  bool try_real = v > eps;
  bool try_vector = v < band;

  LiftResult best;
  best.residual = std::numeric_limits<double>::infinity();
  if (try_real) {
    LiftResult cand;
    cand.representative = lift_real(O, eps);
    cand.branch = LiftBranch::Real;
    cand.residual = (adjoint_so3(cand.representative) - O).norm();
    best = cand;
  }
  if (try_vector) {
    LiftResult cand;
    cand.representative = assemble_vector(O, eps);
    cand.branch = LiftBranch::Vector;
    cand.residual = (adjoint_so3(cand.representative) - O).norm();
    if (cand.residual < best.residual) best = cand;
  }

  if (best.residual > kLiftResidualMax) {
    std::ostringstream msg;
    msg << "lift residual " << best.residual << " exceeds " << kLiftResidualMax;
    throw InternalConsistencyError(msg.str());
  }
  best.quaternion = quat_from_su2(best.representative);
  return best;
}

}  // namespace su2lift
