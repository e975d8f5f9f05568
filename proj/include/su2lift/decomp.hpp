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

#include "su2lift/lift.hpp"
#include "su2lift/types.hpp"

namespace su2lift {

// T = L diag(sigma) R with L, R in SO(3). Sigma is ordered by descending
// absolute value with sigma1, sigma2 >= 0; any sign forced by det(T) sits in
// sigma3.
struct SignedSvd {
  Rotation3 L;
  Vec3 sigma;
  Rotation3 R;
};

SignedSvd signed_svd(const Mat3& T);

// T = Q Rtri with Q in SO(3) and Rtri upper triangular (diagonal entries may
// be negative).
struct QrResult {
  Rotation3 Q;
  Mat3 Rtri;
};

// Modified Gram-Schmidt with determinant repair into Q's third column and
// Rtri's third row. Rank-deficient inputs are completed via cross products of
// the earlier columns, falling back to the coordinate axes.
QrResult qr_so3(const Mat3& T);

enum class Side { Left, Right };

struct DiagonalizeResult {
  SpecialUnitary2 UL;
  SpecialUnitary2 UR;
  BlochForm out;
};

// Local unitaries whose induced rotations bring bf.T to the diagonal of its
// signed SVD: out.T = L^T (L Sigma R) R^T = Sigma.
DiagonalizeResult diagonalize(const BlochForm& bf, double eps = kSignEps);

struct OneSidedResult {
  SpecialUnitary2 U;
  BlochForm out;
};

// One-sided triangularization. Left applies Q^T from qr_so3(bf.T) on the left
// (upper triangular result); Right applies the rotation built from
// qr_so3(bf.T^T) on the right slot (lower triangular result).
OneSidedResult triangularize(const BlochForm& bf, Side side, double eps = kSignEps);

// One-sided symmetrization via the signed SVD: Left applies R^T L^T giving
// out.T = R^T Sigma R; Right applies L R in the right slot giving
// out.T = L Sigma L^T.
OneSidedResult symmetrize_one_sided(const BlochForm& bf, Side side, double eps = kSignEps);

}  // namespace su2lift
