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

#include "qsheaf/flags.hpp"

#include <algorithm>

#include "qsheaf/errors.hpp"
#include "qsheaf/examples.hpp"
#include "qsheaf/linalg.hpp"
#include "qsheaf/macaulay.hpp"
#include "qsheaf/quadric.hpp"

namespace qsheaf {

namespace {

using Row3 = std::array<Elem, 3>;

Row3 cross(const Field& f, const Row3& u, const Row3& v) {
    return {f.sub(f.mul(u[1], v[2]), f.mul(u[2], v[1])), f.sub(f.mul(u[2], v[0]), f.mul(u[0], v[2])),
            f.sub(f.mul(u[0], v[1]), f.mul(u[1], v[0]))};
}

/// Smallest point of the Frobenius orbit.
ProjPoint orbit_representative(const ProjPoint& pt) {
    ProjPoint best = pt, c = pt;
    for (int i = 1; i < pt.residue_degree(); ++i) {
        c = c.frobenius();
        if (c < best) best = c;
    }
    return best;
}

/// Adds the coefficients of `term` into column `col` of `m`.
void put_column(DenseMatrix& m, std::size_t col, const HomogPoly& term) {
    for (std::size_t i = 0; i < term.coeffs().size(); ++i) m.at(i, col) = term.coeffs()[i];
}

}  // namespace

int ZeroScheme::degree_sum() const noexcept {
    int s = 0;
    for (const auto& o : orbits) s += o.degree;
    return s;
}

bool ZeroScheme::three_rational_points() const noexcept {
    return orbits.size() == 3 && std::all_of(orbits.begin(), orbits.end(), [](const auto& o) { return o.degree == 1; });
}

KroneckerModule nu(const M0Presentation& a) { return a.linear_part(); }

HomogPoly mu(const M0Presentation& a) {
    auto det = determinant(a);
    if (!det) throw InvalidPresentation("determinant vanishes identically");
    return det->monic();
}

std::optional<HomogPoly> common_linear_factor(const KroneckerModule& alpha) {
    const auto m = alpha.minors();
    auto first = std::find_if(m.begin(), m.end(), [](const HomogPoly& g) { return !g.is_zero(); });
    if (first == m.end()) return std::nullopt;
    QuadricSplit split;
    try {
        split = quadric_split(*first);
    } catch (const InvalidInput&) {
        return std::nullopt;
    }
    for (const auto& l : split.factors) {
        bool divides = true;
        for (const auto& g : m)
            if (!g.is_zero() && !divide_by_linear(g.lifted(l.field()), l)) {
                divides = false;
                break;
            }
        if (divides) return l;
    }
    return std::nullopt;
}

ZeroScheme h_points(const KroneckerModule& alpha, const FieldTower& tower) {
    const auto& base = *alpha.field();
    if (base.k() != 1) throw InvalidInput("h_points needs a Kronecker module over a prime field");
    if (tower.level(1)->p() != base.p()) throw InvalidInput("tower over a different prime");
    if (!is_stable(alpha)) throw InvalidInput("Kronecker module is not stable");
    if (common_linear_factor(alpha)) throw InvalidInput("Kronecker module lies in V_l: minors share a linear factor");

    std::array<Row3, 3> a0{}, a1{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            a0[i][j] = alpha.at(i, 0).coeffs()[j];
            a1[i][j] = alpha.at(i, 1).coeffs()[j];
        }

    ZeroScheme out;
    for (unsigned k = 1; k <= 3; ++k) {
        const FieldPtr& ext = tower.level(k);
        const Field& e = *ext;
        std::vector<ProjPoint> found;
        auto visit = [&](Elem s, Elem t) {
            Mat3 m{};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) m[i][j] = e.add(e.mul(s, a0[i][j]), e.mul(t, a1[i][j]));
            if (det3(e, m) != 0) return;
            Row3 x{};
            for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
                x = cross(e, m[i], m[j]);
                if (x != Row3{}) break;
            }
            if (x == Row3{}) throw LemmaViolation("rank-one pencil member: minors have a common curve");
            const ProjPoint pt(ext, x);
            if (pt.residue_degree() != static_cast<int>(k)) return;
            const ProjPoint rep = orbit_representative(pt);
            if (std::find(found.begin(), found.end(), rep) == found.end()) found.push_back(rep);
        };
        for (Elem t = 0; t < e.order(); ++t) visit(1, t);
        visit(0, 1);
        std::sort(found.begin(), found.end());
        for (auto& pt : found) out.orbits.push_back({std::move(pt), static_cast<int>(k)});
    }
    if (out.degree_sum() > 3) throw LemmaViolation("zero scheme of the minors has more than three points");
    out.non_reduced = out.degree_sum() < 3;
    return out;
}

ZeroScheme h_points(const KroneckerModule& alpha) { return h_points(alpha, FieldTower(alpha.field()->p())); }

Flag flag_of(const M0Presentation& a, const FieldTower& tower) {
    require_valid(a);
    Flag flag{mu(a), h_points(nu(a), tower).orbits};
    for (const auto& o : flag.points)
        if (eval(flag.curve, o.point.coords(), *o.point.field()) != 0)
            throw LemmaViolation("zero of the minors off the determinant curve: " + to_string(o.point));
    return flag;
}

Flag flag_of(const M0Presentation& a) { return flag_of(a, FieldTower(a.field()->p())); }

M0Presentation build_from_flag(const HomogPoly& f, std::span<const ProjPoint, 3> pts) {
    const FieldPtr& fp = f.field();
    if (fp->k() != 1) throw InvalidInput("build_from_flag needs a curve over a prime field");
    if (f.degree() != 4 || f.is_zero()) throw InvalidInput("build_from_flag needs a nonzero quartic");
    const ProjTransform t = transform_to_standard(pts);
    for (const auto& pt : pts)
        if (eval(f, pt.coords(), *pt.field()) != 0)
            throw InvalidInput("curve does not pass through " + to_string(pt));

    const HomogPoly g = substitute(f, t.matrix());
    const auto x = [&](int i) { return HomogPoly::variable(fp, i); };
    const std::array<HomogPoly, 3> d{x(1) * x(2), -(x(0) * x(2)), -(x(0) * x(1))};
    const auto quads = monomials::of_degree(2);
    DenseMatrix m(monomials::count(4), 3 * quads.size());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < quads.size(); ++j)
            put_column(m, i * quads.size() + j, d[i] * HomogPoly::monomial(fp, quads[j]));
    auto sol = solve(*fp, m, {g.coeffs().begin(), g.coeffs().end()});
    if (!sol) throw LemmaViolation("quartic through the standard points is not in (x1x2, x0x2, x0x1)");

    std::array<HomogPoly, 3> q{HomogPoly(fp, 2), HomogPoly(fp, 2), HomogPoly(fp, 2)};
    for (std::size_t i = 0; i < 3; ++i)
        q[i] = HomogPoly(fp, 2, {sol->begin() + i * quads.size(), sol->begin() + (i + 1) * quads.size()});
    return substitute(examples::standard_form(q[0], q[1], q[2]), t.inverse_matrix());
}

SyzygyCertificate same_orbit_test(const M0Presentation& a, const M0Presentation& b) {
    require_valid(a);
    require_valid(b);
    const KroneckerModule alpha = nu(a);
    if (!(alpha == nu(b))) throw InvalidInput("same_orbit_test needs identical linear parts");
    if (common_linear_factor(alpha)) throw InvalidInput("same_orbit_test is undefined over V_l");

    const FieldPtr& fp = a.field();
    const Field& f = *fp;
    const HomogPoly da = *determinant(a), db = *determinant(b);
    std::size_t lead = 0;
    while (da.coeffs()[lead] == 0) ++lead;
    const Elem c = f.div(db.coeffs()[lead], da.coeffs()[lead]);
    if (!(da.scaled(c) == db)) throw InvalidInput("determinants differ by more than a scalar");

    // q_b - c q_a = a z + b w: three rows of quadrics in the six coefficients of a, b.
    constexpr std::size_t n = monomials::count(2);
    DenseMatrix m(3 * n, 6);
    std::vector<Elem> rhs(3 * n);
    for (int r = 0; r < 3; ++r) {
        const HomogPoly diff = b.at(r, 2) - a.at(r, 2).scaled(c);
        for (int j = 0; j < 3; ++j) {
            const HomogPoly xz = HomogPoly::variable(fp, j) * a.at(r, 0);
            const HomogPoly xw = HomogPoly::variable(fp, j) * a.at(r, 1);
            for (std::size_t i = 0; i < n; ++i) {
                m.at(r * n + i, j) = xz.coeffs()[i];
                m.at(r * n + i, 3 + j) = xw.coeffs()[i];
            }
        }
        for (std::size_t i = 0; i < n; ++i) rhs[r * n + i] = diff.coeffs()[i];
    }
    auto sol = solve(f, m, rhs);
    if (!sol)
        throw LemmaViolation("no syzygy certificate for presentations with equal linear part and determinant");
    return {HomogPoly::linear(fp, {(*sol)[0], (*sol)[1], (*sol)[2]}),
            HomogPoly::linear(fp, {(*sol)[3], (*sol)[4], (*sol)[5]}), c};
}

M0Presentation apply_certificate(const M0Presentation& a, const SyzygyCertificate& c) {
    return act(M0GroupElement{identity3(), {{{1, 0}, {0, 1}}}, c.scale, c.a, c.b}, a);
}

M0Presentation fiber_twist(const M0Presentation& a, const HomogPoly& xi) {
    if (xi.degree() != 1 || !xi.field()->same_as(*a.field())) throw InvalidInput("twist parameter must be a linear form");
    const HomogPoly &y0 = a.at(1, 0), &y1 = a.at(0, 0), &y2 = a.at(0, 1);
    if (y0.is_zero() || !a.at(1, 1).is_zero() || !a.at(2, 0).is_zero() || !(a.at(2, 1) == y0))
        throw InvalidInput("linear part is not of the form (y1 y2; y0 0; 0 y0)");
    auto e = a.entries();
    e[1][2] += xi * y2;
    e[2][2] -= xi * y1;
    M0Presentation out(e);
    if (determinant(out) != determinant(a)) throw LemmaViolation("twist changed the determinant");
    return out;
}

std::vector<HomogPoly> z_and_sing_generators(const M0Presentation& a) {
    require_valid(a);
    const auto m = a.linear_part().minors();
    const HomogPoly det = *determinant(a);
    return {m[0], m[1], m[2], partial(det, 0), partial(det, 1), partial(det, 2)};
}

bool sing_curve_meets_Z(const M0Presentation& a) {
    const auto gens = z_and_sing_generators(a);
    return !is_projectively_empty(gens);
}

}  // namespace qsheaf
