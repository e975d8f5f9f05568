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

namespace su2lift {

// Hermitian, trace one, eigenvalues >= kPsdFloor. Throws InvalidInputError
// naming the violated invariant.
void validate_density(const DensityMatrix4& rho);

// Pauli-trace extraction: a_i = tr(sigma_i x I rho), b_j = tr(I x sigma_j rho),
// t_ij = tr(sigma_i x sigma_j rho).
BlochForm to_bloch(const DensityMatrix4& rho);

// rho = (1/4)(I x I + a.sigma x I + I x b.sigma + sum t_ij sigma_i x sigma_j).
// Throws NotAStateError when the assembled matrix is not positive
// semidefinite.
DensityMatrix4 from_bloch(const BlochForm& bf);

// (UL x UR) rho (UL x UR)+.
DensityMatrix4 apply_local(const DensityMatrix4& rho, const SpecialUnitary2& UL,
                           const SpecialUnitary2& UR);

// a -> L a, b -> R b, T -> L T R^T.
BlochForm transform_bloch(const BlochForm& bf, const Rotation3& L, const Rotation3& R);

}  // namespace su2lift
