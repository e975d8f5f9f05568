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

#include "su2lift/decomp.hpp"

#include "su2lift/two_qubit.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <vector>

namespace su2lift {

namespace {

constexpr double kPivotTol = 1e-12;

// Deterministic completion of a partial orthonormal set: the cross product of
// the two earlier columns when both exist, otherwise the first coordinate
// axis with a non-negligible rejection.
Vec3 completion_direction(const std::vector<Vec3>& q) {
  if (q.size() == 2) {
    const Vec3 cross = q[0].cross(q[1]);
    if (cross.norm() > kPivotTol) return cross.normalized();
  }
  for (int axis = 0; axis < 3; ++axis) {
    Vec3 v = Vec3::Unit(axis);
    for (const Vec3& qi : q) v -= qi.dot(v) * qi;
    if (v.norm() > kPivotTol) return v.normalized();
  }
  return Vec3::Unit(2);  // unreachable: at most two prior directions
}

}  // namespace

SignedSvd signed_svd(const Mat3& T) {
  Eigen::JacobiSVD<Mat3> svd(T, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3 U = svd.matrixU();
  Mat3 V = svd.matrixV();
  Vec3 sigma = svd.singularValues();
  if (U.determinant() < 0) {
    U.col(2) *= -1;
    sigma(2) *= -1;
  }
  if (V.determinant() < 0) {
    V.col(2) *= -1;
    sigma(2) *= -1;
  }
  return {U, sigma, V.transpose()};
}

QrResult qr_so3(const Mat3& T) {
  std::vector<Vec3> q;
  Mat3 Rtri = Mat3::Zero();
  for (int k = 0; k < 3; ++k) {
    Vec3 v = T.col(k);
    // Two projection passes keep the basis orthonormal to machine precision;
    // the accumulated coefficients preserve T = Q Rtri exactly.
    for (int pass = 0; pass < 2; ++pass) {
      for (int j = 0; j < static_cast<int>(q.size()); ++j) {
        const double proj = q[j].dot(v);
        Rtri(j, k) += proj;
        v -= proj * q[j];
      }
    }
    const double pivot = v.norm();
    if (pivot > kPivotTol) {
      Rtri(k, k) = pivot;
      q.push_back(v / pivot);
    } else {
      Rtri(k, k) = 0.0;
      q.push_back(completion_direction(q));
    }
  }
  QrResult out;
  out.Q << q[0], q[1], q[2];
  if (out.Q.determinant() < 0) {
    out.Q.col(2) *= -1;
    Rtri.row(2) *= -1;
  }
  out.Rtri = Rtri;
  return out;
}

DiagonalizeResult diagonalize(const BlochForm& bf, double eps) {
  const SignedSvd svd = signed_svd(bf.T);
  DiagonalizeResult out;
  out.UL = lift(svd.L.transpose(), eps).representative;
  out.UR = lift(svd.R, eps).representative;
  out.out = transform_bloch(bf, svd.L.transpose(), svd.R);
  return out;
}

OneSidedResult triangularize(const BlochForm& bf, Side side, double eps) {
  OneSidedResult out;
  if (side == Side::Left) {
    const QrResult qr = qr_so3(bf.T);
    const Rotation3 rot = qr.Q.transpose();
    out.U = lift(rot, eps).representative;
    out.out = transform_bloch(bf, rot, Mat3::Identity());
  } else {
    const QrResult qr = qr_so3(bf.T.transpose());
    const Rotation3 rot = qr.Q.transpose();
    out.U = lift(rot, eps).representative;
    out.out = transform_bloch(bf, Mat3::Identity(), rot);
  }
  return out;
}

OneSidedResult symmetrize_one_sided(const BlochForm& bf, Side side, double eps) {
  const SignedSvd svd = signed_svd(bf.T);
  OneSidedResult out;
  if (side == Side::Left) {
    const Rotation3 rot = svd.R.transpose() * svd.L.transpose();
    out.U = lift(rot, eps).representative;
    out.out = transform_bloch(bf, rot, Mat3::Identity());
  } else {
    const Rotation3 rot = svd.L * svd.R;
    out.U = lift(rot, eps).representative;
    out.out = transform_bloch(bf, Mat3::Identity(), rot);
  }
  return out;
}

}  // namespace su2lift
