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

#include <optional>
#include <vector>

#include "qsheaf/plane.hpp"
#include "qsheaf/presentation.hpp"

namespace qsheaf {

/// One Frobenius orbit of geometric points, recorded by a representative.
struct PointOrbit {
    ProjPoint point;
    int degree = 1;

    friend bool operator==(const PointOrbit&, const PointOrbit&) = default;
};

/// Support of the zero scheme of the Kronecker minors.
struct ZeroScheme {
    std::vector<PointOrbit> orbits;
    /// Sum of orbit degrees is below 3.
    bool non_reduced = false;

    int degree_sum() const noexcept;
    bool three_rational_points() const noexcept;
};

/// Pair (C, Z) with C the canonical support quartic and Z the minors' zeros.
struct Flag {
    HomogPoly curve;
    std::vector<PointOrbit> points;
};

/// Witness that B = A * (1 0 a; 0 1 b; 0 0 scale).
struct SyzygyCertificate {
    HomogPoly a, b;  ///< linear forms
    Elem scale = 1;
};

/// Linear part of the presentation.
KroneckerModule nu(const M0Presentation& a);

/// Determinant with first nonzero coefficient 1. Throws InvalidPresentation if det = 0.
HomogPoly mu(const M0Presentation& a);

/// A linear form dividing all three quadric minors, if any. For rational
/// alpha the factor is rational; over F_{p^2}-valued alpha it lives there.
std::optional<HomogPoly> common_linear_factor(const KroneckerModule& alpha);

/// Common zeros of the quadric minors over F_{p^k}, k <= 3, one orbit per
/// entry represented by its smallest point, sorted by degree then
/// coordinates. A zero is a point x with alpha(x) (s, t)^T = 0 for
/// some [s:t], so the points are read off the roots of the binary cubic
/// det(s A0 + t A1) on P^1. Throws InvalidInput if alpha is unstable or
/// in V_l.
ZeroScheme h_points(const KroneckerModule& alpha, const FieldTower& tower);
ZeroScheme h_points(const KroneckerModule& alpha);

/// (mu(A), h_points(nu(A))), checking that every point lies on the curve.
Flag flag_of(const M0Presentation& a, const FieldTower& tower);
Flag flag_of(const M0Presentation& a);

/// Presentation with determinant f whose minors vanish at the given points.
/// Points must be rational, distinct and not collinear, and f must vanish
/// at them; throws InvalidInput otherwise.
M0Presentation build_from_flag(const HomogPoly& f, std::span<const ProjPoint, 3> pts);

/// Certificate identifying B with A when nu(A) == nu(B) and the
/// determinants agree up to a scalar. Throws InvalidInput when the
/// preconditions fail and LemmaViolation if the syzygy system has no solution.
SyzygyCertificate same_orbit_test(const M0Presentation& a, const M0Presentation& b);

/// Applies the certificate: returns A * (1 0 a; 0 1 b; 0 0 scale).
M0Presentation apply_certificate(const M0Presentation& a, const SyzygyCertificate& c);

/// For lin(A) = (y1 y2; y0 0; 0 y0): p1 += xi y2, p2 -= xi y1.
/// Throws InvalidInput when lin(A) is not of that shape.
M0Presentation fiber_twist(const M0Presentation& a, const HomogPoly& xi);

/// Quadric minors of lin(A) together with the partials of det A.
std::vector<HomogPoly> z_and_sing_generators(const M0Presentation& a);

/// Sing C meets Z (over the algebraic closure).
bool sing_curve_meets_Z(const M0Presentation& a);

}  // namespace qsheaf
