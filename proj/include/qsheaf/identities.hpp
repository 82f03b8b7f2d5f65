/*
   Copyright 2026 The qsheaf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qsheaf/presentation.hpp"

namespace qsheaf {

struct IdentityCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct IdentityOptions {
    std::uint32_t p = 11;
    std::uint64_t samples = 1000;
    std::uint64_t seed = 42;
    /// Largest extension degree for the enumeration cross-check of zero sets;
    /// 0 picks the largest k <= 3 with at most 2^18 points in P^2.
    unsigned max_enumeration_degree = 0;
};

using DeterminantFn = std::function<std::optional<HomogPoly>(const M0Presentation&)>;

/// det of the standard form equals x1x2q0 - x0x2q1 - x0x1q2 on random quadric triples.
IdentityCheck check_standard_determinant(const IdentityOptions& o, const DeterminantFn& det = {});
/// The three partial-derivative formulas hold as polynomial identities.
IdentityCheck check_partials(const IdentityOptions& o);
/// In standard position the zero sets of I_min and I_Z + I_SingC agree.
IdentityCheck check_zero_sets(const IdentityOptions& o);
/// Boundary example: non-singular, curve x1(x2^3 + x0^2x1), Z = {<0,0,1>, <0,1,0>}
/// non-reduced, <0,1,0> in Z and Sing C.
IdentityCheck check_boundary_example(std::uint32_t p, const DeterminantFn& det = {});
/// Standard position: minors of (x0 x0; x1 0; 0 x2) vanish exactly at the coordinate points.
IdentityCheck check_standard_position(std::uint32_t p);
/// (0, y2, -y1) is a syzygy of the cofactors of (y1 y2; y0 0; 0 y0) and the
/// twisted family keeps det.
IdentityCheck check_twist_family(const IdentityOptions& o);
/// Equal (lin, det) pairs are related by a unipotent column operation.
IdentityCheck check_same_orbit(const IdentityOptions& o);
/// build_from_flag followed by flag_of returns the flag.
IdentityCheck check_round_trip(const IdentityOptions& o);
/// 36 coefficients, group 19, dim M 17, dim M' 15, codim 2.
IdentityCheck check_dimensions();

/// Every check above, in that order.
std::vector<IdentityCheck> verify_known_identities(const IdentityOptions& o);

}  // namespace qsheaf
