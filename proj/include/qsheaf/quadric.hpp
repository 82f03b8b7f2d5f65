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

#include <vector>

#include "qsheaf/poly.hpp"

namespace qsheaf {

enum class QuadricKind { double_line, line_pair, irreducible };

const char* to_string(QuadricKind k) noexcept;

/// Factorization of a plane conic read off the rank of its symmetric matrix.
struct QuadricSplit {
    QuadricKind kind = QuadricKind::irreducible;
    int matrix_rank = 3;
    /// Monic linear factors: one for a double line, two for a line pair,
    /// none when irreducible. A conjugate pair lives over F_{p^2}.
    std::vector<HomogPoly> factors;
    /// q == scale * l^2 (double line) or scale * l1 * l2 (line pair), over
    /// the field of the factors.
    Elem scale = 0;
    bool rational = true;  ///< factors defined over the field of q
};

/// Classifies q by the rank of its symmetric matrix. Throws on q == 0,
/// degree != 2, or a line pair whose lines need more than F_{p^2}.
QuadricSplit quadric_split(const HomogPoly& q);

}  // namespace qsheaf
