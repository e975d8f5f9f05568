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

#include "su2lift/verify.hpp"

#include "su2lift/group_kernel.hpp"
#include "su2lift/lift.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace su2lift {

namespace {

double uniform01(std::mt19937_64& rng) {
  // 53-bit mantissa in [0, 1); independent of library distribution internals.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

UnitQuaternion random_unit_quaternion(std::mt19937_64& rng) {
  UnitQuaternion q{gaussian(rng), gaussian(rng), gaussian(rng), gaussian(rng)};
  return q.normalized();
}

double brute_residual(const UnitQuaternion& q, const Rotation3& O) {
  return (euler_rodrigues(q) - O).norm();
}

}  // namespace

double gaussian(std::mt19937_64& rng) {
  double u1 = uniform01(rng);
  while (u1 <= 0.0) u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Rotation3 random_rotation(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return euler_rodrigues(random_unit_quaternion(rng));
}

double roundtrip_residual(const Rotation3& O) {
  return (adjoint_so3(lift(O).representative) - O).norm();
}

BruteLiftResult brute_lift(const Rotation3& O, int n_samples, int n_refine, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  UnitQuaternion best = random_unit_quaternion(rng);
  double best_res = brute_residual(best, O);
  for (int i = 1; i < n_samples; ++i) {
    const UnitQuaternion q = random_unit_quaternion(rng);
    const double res = brute_residual(q, O);
    if (res < best_res) {
      best = q;
      best_res = res;
    }
  }

  double step = 0.1;
  for (int round = 0; round < n_refine; ++round) {
    for (int coord = 0; coord < 4; ++coord) {
      for (const double dir : {+1.0, -1.0}) {
        UnitQuaternion probe = best;
        double* fields[4] = {&probe.a1, &probe.a2, &probe.b1, &probe.b2};
        *fields[coord] += dir * step;
        probe = probe.normalized();
        const double res = brute_residual(probe, O);
        if (res < best_res) {
          best = probe;
          best_res = res;
        }
      }
    }
    step *= 0.5;
  }
  return {best, best_res};
}

OracleReport run_verification(int n_rotations, int n_brute, std::uint64_t seed_base) {
  OracleReport report;
  report.samples = n_rotations;
  report.brute_samples = std::min(n_brute, n_rotations);
  for (int i = 0; i < n_rotations; ++i) {
    const Rotation3 O = random_rotation(seed_base + static_cast<std::uint64_t>(i));
    const LiftResult lifted = lift(O);
    const double res = (adjoint_so3(lifted.representative) - O).norm();
    report.residual_closed_form = std::max(report.residual_closed_form, res);
    if (lifted.branch == LiftBranch::Real) {
      ++report.real_branch;
    } else {
      ++report.vector_branch;
    }
    if (i < report.brute_samples) {
      const BruteLiftResult brute = brute_lift(O);
      report.residual_brute = std::max(report.residual_brute, brute.residual);
      report.quaternion_distance = std::max(
          report.quaternion_distance, brute.quaternion.distance_up_to_sign(lifted.quaternion));
    }
  }
  return report;
}

}  // namespace su2lift
