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

#include "qsheaf/examples.hpp"

namespace qsheaf::examples {

namespace {

HomogPoly var(const FieldPtr& f, int i) { return HomogPoly::variable(f, i); }

}  // namespace

KroneckerModule standard_kronecker(const FieldPtr& f) {
    HomogPoly zero(f, 1);
    return KroneckerModule({{{var(f, 0), var(f, 0)}, {var(f, 1), zero}, {zero, var(f, 2)}}});
}

M0Presentation standard_form(const HomogPoly& q0, const HomogPoly& q1, const HomogPoly& q2) {
    return M0Presentation(standard_kronecker(q0.field()), {q0, q1, q2});
}

M0Presentation boundary_example(const FieldPtr& f) {
    HomogPoly z1(f, 1), z2(f, 2);
    return M0Presentation({{{var(f, 0), var(f, 1), z2},
                            {z1, var(f, 0), var(f, 2) * var(f, 2)},
                            {var(f, 2), z1, var(f, 1) * var(f, 1)}}});
}

HomogPoly boundary_curve(const FieldPtr& f) {
    auto x0 = var(f, 0), x1 = var(f, 1), x2 = var(f, 2);
    return x1 * (x2 * x2 * x2 + x0 * x0 * x1);
}

KroneckerModule common_factor_normal_form(const HomogPoly& y0, const HomogPoly& y1, const HomogPoly& y2) {
    HomogPoly zero(y0.field(), 1);
    return KroneckerModule({{{y1, y2}, {y0, zero}, {zero, y0}}});
}

}  // namespace qsheaf::examples
