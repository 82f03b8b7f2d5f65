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

#include "qsheaf/quadric.hpp"

#include "qsheaf/errors.hpp"
#include "qsheaf/linalg.hpp"

namespace qsheaf {

namespace {

using Vec3 = std::array<Elem, 3>;

Vec3 cross(const Field& f, const Vec3& a, const Vec3& b) {
    return {f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])), f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
            f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
}

Elem bilinear(const Field& f, const Mat3& m, const Vec3& a, const Vec3& b) {
    Elem s = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s = f.add(s, f.mul(a[i], f.mul(m[i][j], b[j])));
    return s;
}

// q == scale * prod, read at the first coefficient where prod is nonzero.
Elem ratio(const HomogPoly& q, const HomogPoly& prod) {
    const Field& f = prod.f();
    for (std::size_t i = 0; i < prod.coeffs().size(); ++i)
        if (prod.coeffs()[i] != 0) return f.div(q.coeffs()[i], prod.coeffs()[i]);
    throw LemmaViolation("zero product of linear factors");
}

}  // namespace

const char* to_string(QuadricKind k) noexcept {
    switch (k) {
        case QuadricKind::double_line: return "double_line";
        case QuadricKind::line_pair: return "line_pair";
        case QuadricKind::irreducible: return "irreducible";
    }
    return "?";
}

QuadricSplit quadric_split(const HomogPoly& q) {
    if (q.degree() != 2) throw InvalidInput("quadric_split needs a degree-2 form");
    if (q.is_zero()) throw InvalidInput("quadric_split of the zero form");
    const Field& f = q.f();
    const Elem half = f.inv(2);

    Mat3 m{};
    for (int i = 0; i < 3; ++i) {
        Exponents sq{0, 0, 0};
        sq[static_cast<std::size_t>(i)] = 2;
        m[i][i] = q.coeff(sq);
        for (int j = i + 1; j < 3; ++j) {
            Exponents mix{0, 0, 0};
            mix[static_cast<std::size_t>(i)] = mix[static_cast<std::size_t>(j)] = 1;
            m[i][j] = m[j][i] = f.mul(q.coeff(mix), half);
        }
    }
    DenseMatrix dm(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) dm.at(i, j) = m[i][j];
    const auto r = rank(f, dm);

    QuadricSplit out;
    out.matrix_rank = static_cast<int>(r);
    if (r == 3) return out;

    if (r == 1) {
        // M = c * l l^T, so any nonzero row is proportional to l.
        Vec3 row{};
        for (int i = 0; i < 3 && row == Vec3{}; ++i) row = m[i];
        auto l = HomogPoly::linear(q.field(), row).monic();
        out.kind = QuadricKind::double_line;
        out.scale = ratio(q, l * l);
        out.factors.push_back(std::move(l));
        return out;
    }

    // Rank 2: two distinct lines through the vertex v = ker M.
    auto ker = kernel_basis(f, dm);
    const Vec3 v{ker.at(0)[0], ker.at(0)[1], ker.at(0)[2]};
    Vec3 u{}, w{};
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            Vec3 ea{}, eb{};
            ea[a] = 1;
            eb[b] = 1;
            Mat3 frame{{v, ea, eb}};
            if (u == Vec3{} && det3(f, frame) != 0) {
                u = ea;
                w = eb;
            }
        }
    const Elem qa = bilinear(f, m, u, u), qc = bilinear(f, m, w, w);
    const Elem qb = f.mul(2, bilinear(f, m, u, w));
    const Elem disc = f.sub(f.mul(qb, qb), f.mul(4, f.mul(qa, qc)));

    FieldPtr lf = q.field();
    auto root = f.sqrt(disc);
    if (!root) {
        if (f.k() != 1) throw InvalidInput("line pair not defined over F_{p^2}");
        lf = Field::make(f.p(), 2);
        root = lf->sqrt(disc);
        out.rational = false;
    }
    const Field& g = *lf;
    // Roots (s : t) of qa s^2 + qb s t + qc t^2.
    std::array<Vec3, 2> params;
    if (qa != 0) {
        const Elem inv2a = g.inv(g.mul(2, qa));
        params[0] = {g.mul(g.add(g.neg(qb), *root), inv2a), 1, 0};
        params[1] = {g.mul(g.sub(g.neg(qb), *root), inv2a), 1, 0};
    } else {
        params[0] = {1, 0, 0};
        params[1] = {g.neg(qc), qb, 0};
    }
    HomogPoly prod = HomogPoly::monomial(lf, {0, 0, 0});
    for (const auto& st : params) {
        Vec3 pt{};
        for (int i = 0; i < 3; ++i) pt[i] = g.add(g.mul(st[0], u[i]), g.mul(st[1], w[i]));
        auto l = HomogPoly::linear(lf, cross(g, v, pt)).monic();
        prod = prod * l;
        out.factors.push_back(std::move(l));
    }
    out.kind = QuadricKind::line_pair;
    out.scale = ratio(q.lifted(lf), prod);
    return out;
}

}  // namespace qsheaf
