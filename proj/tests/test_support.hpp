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

// Shared generators and slow oracles for the test suites. Nothing in here
// calls into the code paths it is used to check.

#include <map>
#include <vector>

#include "qsheaf/field.hpp"
#include "qsheaf/linalg.hpp"
#include "qsheaf/plane.hpp"
#include "qsheaf/poly.hpp"
#include "qsheaf/presentation.hpp"
#include "qsheaf/rng.hpp"

namespace qsheaf::testing {

inline HomogPoly random_poly(Rng& rng, const FieldPtr& f, int degree) {
    std::vector<Elem> c(monomials::count(degree));
    for (auto& x : c) x = static_cast<Elem>(rng.below(f->order()));
    return HomogPoly(f, degree, std::move(c));
}

inline HomogPoly random_nonzero_poly(Rng& rng, const FieldPtr& f, int degree) {
    for (;;) {
        auto g = random_poly(rng, f, degree);
        if (!g.is_zero()) return g;
    }
}

inline Mat3 random_invertible(Rng& rng, const Field& f) {
    for (;;) {
        Mat3 m{};
        for (auto& row : m)
            for (auto& x : row) x = static_cast<Elem>(rng.below(f.order()));
        if (det3(f, m) != 0) return m;
    }
}

inline std::array<Elem, 3> random_nonzero_vector(Rng& rng, const Field& f) {
    for (;;) {
        std::array<Elem, 3> v{};
        for (auto& x : v) x = static_cast<Elem>(rng.below(f.order()));
        if (v != std::array<Elem, 3>{}) return v;
    }
}

/// Schoolbook product over exponent maps with plain integer arithmetic.
inline std::map<Exponents, long long> naive_product(const HomogPoly& a, const HomogPoly& b) {
    std::map<Exponents, long long> out;
    const long long p = a.f().p();
    auto ea = monomials::of_degree(a.degree());
    auto eb = monomials::of_degree(b.degree());
    for (std::size_t i = 0; i < ea.size(); ++i)
        for (std::size_t j = 0; j < eb.size(); ++j) {
            Exponents e{ea[i][0] + eb[j][0], ea[i][1] + eb[j][1], ea[i][2] + eb[j][2]};
            out[e] = (out[e] + static_cast<long long>(a.coeffs()[i]) * b.coeffs()[j]) % p;
        }
    return out;
}

/// Common zeros of the forms over P^2(F_{p^k}), by exhaustive evaluation.
inline std::vector<ProjPoint> common_zeros(const std::vector<HomogPoly>& gens, const FieldPtr& ext) {
    std::vector<ProjPoint> out;
    for_each_point(*ext, [&](const std::array<Elem, 3>& c) {
        for (const auto& g : gens)
            if (eval_unchecked(g, c, *ext) != 0) return true;
        out.emplace_back(ext, c);
        return true;
    });
    return out;
}

/// "Has a common zero over F_{p^k} for some k <= 3."
inline bool has_common_zero_up_to_cubic(const std::vector<HomogPoly>& gens, const FieldTower& tower) {
    for (unsigned k = 1; k <= 3; ++k) {
        bool found = false;
        for_each_point(*tower.level(k), [&](const std::array<Elem, 3>& c) {
            for (const auto& g : gens)
                if (eval_unchecked(g, c, *tower.level(k)) != 0) return true;
            found = true;
            return false;
        });
        if (found) return true;
    }
    return false;
}

inline M0GroupElement random_m0_group(Rng& rng, const FieldPtr& f) {
    M0GroupElement g{random_invertible(rng, *f), {}, 0, random_poly(rng, f, 1), random_poly(rng, f, 1)};
    do {
        for (auto& row : g.linear_cols)
            for (auto& x : row) x = static_cast<Elem>(rng.below(f->p()));
    } while (f->sub(f->mul(g.linear_cols[0][0], g.linear_cols[1][1]),
                    f->mul(g.linear_cols[0][1], g.linear_cols[1][0])) == 0);
    g.q_scale = 1 + static_cast<Elem>(rng.below(f->p() - 1));
    return g;
}

inline M1GroupElement random_m1_group(Rng& rng, const FieldPtr& f) {
    M1GroupElement g{1 + static_cast<Elem>(rng.below(f->p() - 1)), 1 + static_cast<Elem>(rng.below(f->p() - 1)),
                     random_poly(rng, f, 2), {}};
    do {
        for (auto& row : g.cols)
            for (auto& x : row) x = static_cast<Elem>(rng.below(f->p()));
    } while (f->sub(f->mul(g.cols[0][0], g.cols[1][1]), f->mul(g.cols[0][1], g.cols[1][0])) == 0);
    return g;
}

/// Cofactor expansion of a 3x3 polynomial matrix along row `r`.
inline HomogPoly det_along_row(const M0Presentation::Entries& a, int r) {
    HomogPoly out(a[0][0].field(), a[0][0].degree() + a[0][1].degree() + a[0][2].degree());
    for (int c = 0; c < 3; ++c) {
        int rows[2], cols[2], ri = 0, ci = 0;
        for (int i = 0; i < 3; ++i)
            if (i != r) rows[ri++] = i;
        for (int j = 0; j < 3; ++j)
            if (j != c) cols[ci++] = j;
        auto minor = a[rows[0]][cols[0]] * a[rows[1]][cols[1]] - a[rows[0]][cols[1]] * a[rows[1]][cols[0]];
        auto term = a[r][c] * minor;
        if ((r + c) % 2 == 0) out += term;
        else out -= term;
    }
    return out;
}

/// A valid M0 presentation whose rank drops at a random rational point:
/// rows 1 and 2 vanish at <1,0,0>, then a random coordinate change moves it.
inline M0Presentation planted_singular_m0(Rng& rng, const FieldPtr& f) {
    for (;;) {
        M0Presentation::Entries e{{{random_poly(rng, f, 1), random_poly(rng, f, 1), random_poly(rng, f, 2)},
                                   {random_poly(rng, f, 1), random_poly(rng, f, 1), random_poly(rng, f, 2)},
                                   {random_poly(rng, f, 1), random_poly(rng, f, 1), random_poly(rng, f, 2)}}};
        for (int r = 1; r < 3; ++r) {
            e[r][0].set_coeff({1, 0, 0}, 0);
            e[r][1].set_coeff({1, 0, 0}, 0);
            e[r][2].set_coeff({2, 0, 0}, 0);
        }
        auto a = substitute(M0Presentation(e), random_invertible(rng, *f));
        if (validate(a) == Validity::ok) return a;
    }
}

inline M1Presentation planted_singular_m1(Rng& rng, const FieldPtr& f) {
    for (;;) {
        M1Presentation::Entries e{{{random_poly(rng, f, 1), random_poly(rng, f, 1)},
                                   {random_poly(rng, f, 3), random_poly(rng, f, 3)}}};
        for (int c = 0; c < 2; ++c) {
            e[0][c].set_coeff({1, 0, 0}, 0);
            e[1][c].set_coeff({3, 0, 0}, 0);
        }
        auto a = substitute(M1Presentation(e), random_invertible(rng, *f));
        if (validate(a) == Validity::ok) return a;
    }
}

/// Random nonzero form of the given degree vanishing at the rational points,
/// drawn from the kernel of the evaluation map.
inline HomogPoly random_form_through(Rng& rng, const FieldPtr& f, int degree, std::span<const ProjPoint> pts) {
    const auto mons = monomials::of_degree(degree);
    DenseMatrix ev(pts.size(), mons.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < mons.size(); ++j)
            ev.at(i, j) = eval(HomogPoly::monomial(f, mons[j]), pts[i].coords(), *f);
    const auto basis = kernel_basis(*f, ev);
    for (;;) {
        std::vector<Elem> c(mons.size(), 0);
        for (const auto& v : basis) {
            const auto s = static_cast<Elem>(rng.below(f->p()));
            for (std::size_t j = 0; j < c.size(); ++j) c[j] = f->add(c[j], f->mul(s, v[j]));
        }
        HomogPoly g(f, degree, std::move(c));
        if (!g.is_zero()) return g;
    }
}

inline std::array<ProjPoint, 3> random_triangle(Rng& rng, const FieldPtr& f) {
    for (;;) {
        std::array<ProjPoint, 3> pts{ProjPoint(f, random_nonzero_vector(rng, *f)),
                                     ProjPoint(f, random_nonzero_vector(rng, *f)),
                                     ProjPoint(f, random_nonzero_vector(rng, *f))};
        if (!collinear(pts)) return pts;
    }
}

inline KroneckerModule random_kronecker(Rng& rng, const FieldPtr& f) {
    return KroneckerModule({{{random_poly(rng, f, 1), random_poly(rng, f, 1)},
                             {random_poly(rng, f, 1), random_poly(rng, f, 1)},
                             {random_poly(rng, f, 1), random_poly(rng, f, 1)}}});
}

inline HomogPoly P(const FieldPtr& f, int degree, const std::string& text) { return parse_poly(text, f, degree); }

}  // namespace qsheaf::testing
