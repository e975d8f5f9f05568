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

#include <cstdint>
#include <random>

namespace su2lift {

// Gaussian deviate from std::mt19937_64 via the Box-Muller transform, so the
// stream is fully determined by the engine state.
double gaussian(std::mt19937_64& rng);

// Rotation from a unit quaternion of four Gaussian deviates drawn from
// std::mt19937_64 seeded with `seed` (uniform on the 3-sphere). Same seed,
// same matrix.
Rotation3 random_rotation(std::uint64_t seed);

// ||adjoint_so3(lift(O).representative) - O||_F.
double roundtrip_residual(const Rotation3& O);

struct BruteLiftResult {
  UnitQuaternion quaternion;
  double residual;
};

// Derivative-free search oracle for the closed-form lift. Samples n_samples
// unit quaternions, keeps the minimizer of ||euler_rodrigues(q) - O||_F, then
// runs n_refine rounds of per-coordinate perturbation with the step halving
// from 0.1. Never calls the closed-form lift.
BruteLiftResult brute_lift(const Rotation3& O, int n_samples = 50000, int n_refine = 200,
                           std::uint64_t seed = 20260801);

struct OracleReport {
  double residual_closed_form = 0;  // max over samples
  double residual_brute = 0;        // max over brute-checked samples
  double quaternion_distance = 0;   // max over samples of min-over-± distance
  int samples = 0;
  int brute_samples = 0;
  int real_branch = 0;
  int vector_branch = 0;
};

// Round-trip sweep over `n_rotations` seeded rotations, with the brute-force
// oracle cross-check on the first `n_brute` of them.
OracleReport run_verification(int n_rotations, int n_brute = 0, std::uint64_t seed_base = 1);

}  // namespace su2lift
