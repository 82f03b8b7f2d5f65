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

#include <doctest.h>

#include "qsheaf/identities.hpp"

using namespace qsheaf;

TEST_CASE("known identities hold") {
    IdentityOptions o;
    o.p = 7;
    o.samples = 50;
    o.seed = 3;
    for (const auto& c : verify_known_identities(o)) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.passed);
    }
}

TEST_CASE("a flipped cofactor sign is caught") {
    // det with cofactors (m12, m02, m01), as if the middle sign were dropped.
    DeterminantFn mutated = [](const M0Presentation& a) -> std::optional<HomogPoly> {
        const auto m = a.linear_part().minors();
        HomogPoly d = m[2] * a.at(0, 2) + m[1] * a.at(1, 2) + m[0] * a.at(2, 2);
        if (d.is_zero()) return std::nullopt;
        return d;
    };
    CHECK_FALSE(check_boundary_example(11, mutated).passed);
    IdentityOptions o;
    o.samples = 20;
    CHECK_FALSE(check_standard_determinant(o, mutated).passed);
    CHECK(check_boundary_example(11).passed);
}
