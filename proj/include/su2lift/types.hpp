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

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace su2lift {

using Complex = std::complex<double>;

// 2x2 complex unitary with determinant 1.
using SpecialUnitary2 = Eigen::Matrix2cd;

// 3x3 real special orthogonal matrix.
using Rotation3 = Eigen::Matrix3d;

// 4x4 complex density matrix, basis order |00>, |01>, |10>, |11>.
using DensityMatrix4 = Eigen::Matrix4cd;

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Default tolerances. kSignEps is the single numerical-zero threshold used
// by every sign decision; callers can override it per call.
inline constexpr double kSignEps = 1e-9;
inline constexpr double kBranchBand = 1e-6;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kRotationTol = 1e-8;
inline constexpr double kQuatNormTol = 1e-10;
inline constexpr double kDensityTol = 1e-10;
inline constexpr double kPsdFloor = -1e-9;
inline constexpr double kRadicandSlack = 1e-8;
inline constexpr double kLiftResidualMax = 1e-6;

class InvalidInputError : public std::runtime_error {
 public:
  explicit InvalidInputError(const std::string& what) : std::runtime_error(what) {}
};

// from_bloch produced a matrix that is not positive semidefinite: the input
// was well-formed but does not describe a physical state.
class NotAStateError : public InvalidInputError {
 public:
  explicit NotAStateError(const std::string& what) : InvalidInputError(what) {}
};

class InternalConsistencyError : public std::runtime_error {
 public:
  explicit InternalConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

// Unit quaternion q = a1 + a2 i + b1 j + b2 k housing the four real
// parameters of an SU(2) element.
struct UnitQuaternion {
  double a1 = 1.0;
  double a2 = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;

  double squared_norm() const { return a1 * a1 + a2 * a2 + b1 * b1 + b2 * b2; }
  double norm() const { return std::sqrt(squared_norm()); }

  UnitQuaternion normalized() const {
    const double n = norm();
    return {a1 / n, a2 / n, b1 / n, b2 / n};
  }

  UnitQuaternion operator-() const { return {-a1, -a2, -b1, -b2}; }

  // Euclidean distance in R^4.
  double distance(const UnitQuaternion& o) const {
    const double d0 = a1 - o.a1, d1 = a2 - o.a2, d2 = b1 - o.b1, d3 = b2 - o.b2;
    return std::sqrt(d0 * d0 + d1 * d1 + d2 * d2 + d3 * d3);
  }

  // Distance modulo the double cover: min over {o, -o}.
  double distance_up_to_sign(const UnitQuaternion& o) const {
    return std::min(distance(o), distance(-o));
  }
};

// Local Bloch vectors a, b and the 3x3 correlation matrix T of a two-qubit
// state.
struct BlochForm {
  Vec3 a = Vec3::Zero();
  Vec3 b = Vec3::Zero();
  Mat3 T = Mat3::Zero();
};

}  // namespace su2lift
