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

#include "qsheaf/presentation.hpp"

namespace qsheaf::examples {

/// alpha = (x0 x0; x1 0; 0 x2); its minors cut out the three coordinate points.
KroneckerModule standard_kronecker(const FieldPtr& f);

/// (x0 x0 q0; x1 0 q1; 0 x2 q2), with det = x1x2 q0 - x0x2 q1 - x0x1 q2.
M0Presentation standard_form(const HomogPoly& q0, const HomogPoly& q1, const HomogPoly& q2);

/// (x0 x1 0; 0 x0 x2^2; x2 0 x1^2): a non-singular sheaf over a non-reduced Z
/// (simple point <0,0,1>, double point <0,1,0>) whose support
/// x1 (x2^3 + x0^2 x1) is singular at <0,1,0>.
M0Presentation boundary_example(const FieldPtr& f);

/// The curve x1 (x2^3 + x0^2 x1) carried by boundary_example.
HomogPoly boundary_curve(const FieldPtr& f);

/// (y1 y2; y0 0; 0 y0), minors with the common factor y0.
KroneckerModule common_factor_normal_form(const HomogPoly& y0, const HomogPoly& y1, const HomogPoly& y2);

}  // namespace qsheaf::examples
