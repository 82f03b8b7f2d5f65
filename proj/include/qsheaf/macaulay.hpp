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

#include <cstddef>
#include <span>

#include "qsheaf/poly.hpp"

namespace qsheaf {

/// Shape and rank of a degree-N Macaulay matrix.
struct MacaulayRank {
    int degree = 0;         ///< N
    std::size_t rows = 0;   ///< rows actually reduced (early exit stops short)
    std::size_t cols = 0;   ///< C(N+2, 2)
    std::size_t rank = 0;
};

/// N = (d1 - 1) + (d2 - 1) + (d3 - 1) + 1 over the three largest degrees of
/// the nonzero generators. Needs at least three nonzero generators of positive degree.
int macaulay_degree(std::span<const HomogPoly> gens);

/// Rank of the matrix whose rows are m * g for every generator g and every
/// monomial m of degree N - deg g, in the degree-N piece. With
/// `stop_at_full` the reduction ends as soon as the rank reaches C(N+2, 2).
MacaulayRank macaulay_rank(std::span<const HomogPoly> gens, bool stop_at_full = true);

/// True iff the forms have no common zero in P^2 over the algebraic closure.
///
/// A nonzero constant makes the set empty; fewer than three nonzero forms
/// always meet. Otherwise the answer is "the degree-N Macaulay matrix has
/// full column rank". Throws InvalidInput on an empty list, all-zero input
/// or mixed fields.
bool is_projectively_empty(std::span<const HomogPoly> gens);

}  // namespace qsheaf
