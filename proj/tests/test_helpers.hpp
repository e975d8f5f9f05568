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
#include "su2lift/verify.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <random>

namespace su2lift::testing {

inline UnitQuaternion random_quaternion(std::mt19937_64& rng) {
  UnitQuaternion q{gaussian(rng), gaussian(rng), gaussian(rng), gaussian(rng)};
  return q.normalized();
}

inline SpecialUnitary2 random_su2(std::mt19937_64& rng) {
  return su2_from_quat(random_quaternion(rng));
}

template <typename A, typename B>
double dist(const A& a, const B& b) {
  return (a - b).norm();
}

// Distance modulo the global-sign pair {M, -M}.
template <typename A, typename B>
double dist_up_to_sign(const A& a, const B& b) {
  return std::min((a - b).norm(), (a + b).norm());
}

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Mixture of pure states drawn from seeded Gaussians with Dirichlet-uniform
// weights (normalized exponentials).
inline DensityMatrix4 random_density(std::mt19937_64& rng, int n_pure = 4) {
  DensityMatrix4 rho = DensityMatrix4::Zero();
  double total = 0;
  std::vector<double> weights;
  for (int k = 0; k < n_pure; ++k) {
    double u = 0;
    while (u <= 0) u = uniform01(rng);
    const double w = -std::log(u);
    weights.push_back(w);
    total += w;
  }
  for (int k = 0; k < n_pure; ++k) {
    Eigen::Vector4cd psi;
    for (int i = 0; i < 4; ++i) psi(i) = Complex(gaussian(rng), gaussian(rng));
    psi.normalize();
    rho += (weights[k] / total) * (psi * psi.adjoint());
  }
  return rho;
}

// The worked diagonalization fixture: T = L Sigma R with all three factors
// as published, the initial density matrix, and the two lifted unitaries.
struct WorkedExample {
  Mat3 L, R;
  Vec3 sigma;
  Mat3 T;
  DensityMatrix4 rho;
  SpecialUnitary2 U_LT, U_R;
};

inline const WorkedExample& worked_example() {
  static const WorkedExample ex = [] {
    WorkedExample e;
    e.L << 0, 0, 1, 1, 0, 0, 0, 1, 0;
    e.sigma << 1, -1, 1;
    e.R << 0, 0, -1, 1, 0, 0, 0, -1, 0;
    e.T << 0, -1, 0, 0, 0, -1, -1, 0, 0;
    const Complex i(0, 1);
    e.rho << 1, -1, i, i,  //
        -1, 1, -i, -i,     //
        -i, i, 1, 1,       //
        -i, i, 1, 1;
    e.rho *= 0.25;
    e.U_LT << Complex(0.5, 0.5), Complex(0.5, 0.5), Complex(-0.5, 0.5), Complex(0.5, -0.5);
    e.U_R << Complex(0.5, -0.5), Complex(0.5, 0.5), Complex(-0.5, 0.5), Complex(0.5, 0.5);
    return e;
  }();
  return ex;
}

inline DensityMatrix4 bell_density(int which) {
  // 0: Phi+, 1: Phi-, 2: Psi+, 3: Psi-
  Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
  const double s = 1.0 / std::sqrt(2.0);
  switch (which) {
    case 0: psi(0) = s; psi(3) = s; break;
    case 1: psi(0) = s; psi(3) = -s; break;
    case 2: psi(1) = s; psi(2) = s; break;
    default: psi(1) = s; psi(2) = -s; break;
  }
  return psi * psi.adjoint();
}

}  // namespace su2lift::testing
