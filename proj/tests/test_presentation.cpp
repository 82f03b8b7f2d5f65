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

#include "qsheaf/errors.hpp"
#include "qsheaf/examples.hpp"
#include "qsheaf/linalg.hpp"
#include "qsheaf/macaulay.hpp"
#include "qsheaf/presentation.hpp"
#include "test_support.hpp"

using namespace qsheaf;
using qsheaf::testing::P;

namespace {

HomogPoly x(const FieldPtr& f, int i) { return HomogPoly::variable(f, i); }

}  // namespace

TEST_CASE("is_stable") {
    auto f = Field::make(7);
    auto alpha = examples::standard_kronecker(f);
    CHECK(is_stable(alpha));
    auto m = alpha.minors();
    CHECK(m[0] == -P(f, 2, "x0*x1"));
    CHECK(m[1] == P(f, 2, "x0*x2"));
    CHECK(m[2] == P(f, 2, "x1*x2"));
    auto d = alpha.cofactors();
    CHECK(d[0] == P(f, 2, "x1*x2"));
    CHECK(d[1] == -P(f, 2, "x0*x2"));
    CHECK(d[2] == -P(f, 2, "x0*x1"));

    KroneckerModule equal_cols({{{x(f, 0), x(f, 0)}, {x(f, 1), x(f, 1)}, {x(f, 2), x(f, 2)}}});
    CHECK_FALSE(is_stable(equal_cols));

    auto vl = examples::common_factor_normal_form(x(f, 0), x(f, 1), x(f, 2));
    CHECK(is_stable(vl));
    auto dv = vl.cofactors();
    CHECK(dv[0] == P(f, 2, "x0^2"));
    CHECK(dv[1] == -P(f, 2, "x0*x1"));
    CHECK(dv[2] == -P(f, 2, "x0*x2"));

    CHECK_THROWS_AS(KroneckerModule({{{x(f, 0), P(f, 2, "x0^2")}, {x(f, 1), x(f, 1)}, {x(f, 2), x(f, 2)}}}),
                    InvalidInput);
}

TEST_CASE("minors2x2") {
    auto f = Field::make(7);
    Rng rng(11);
    SUBCASE("zero quadric column leaves only the Kronecker minors") {
        HomogPoly z(f, 2);
        auto a = examples::standard_form(z, z, z);
        auto m = minors2x2(a);
        auto k = a.linear_part().minors();
        CHECK(m[0] == k[0]);
        CHECK(m[3] == k[1]);
        CHECK(m[6] == k[2]);
        for (int i : {1, 2, 4, 5, 7, 8}) CHECK(m[i].is_zero());
    }
    SUBCASE("standard form spans the recomputed generator list") {
        for (int t = 0; t < 50; ++t) {
            auto q0 = testing::random_poly(rng, f, 2), q1 = testing::random_poly(rng, f, 2),
                 q2 = testing::random_poly(rng, f, 2);
            auto m = minors2x2(examples::standard_form(q0, q1, q2));
            // Cubics x0q1, x0q2, x1q0, x1q2, x2q0, x2q1 span the same space as the six cubic minors.
            std::vector<HomogPoly> listed{x(f, 0) * q1, x(f, 0) * q2, x(f, 1) * q0,
                                          x(f, 1) * q2, x(f, 2) * q0, x(f, 2) * q1};
            std::vector<HomogPoly> cubic_minors{m[1], m[2], m[4], m[5], m[7], m[8]};
            auto rank_of = [&](const std::vector<HomogPoly>& polys) {
                DenseMatrix mat(polys.size(), 10);
                for (std::size_t i = 0; i < polys.size(); ++i)
                    for (std::size_t j = 0; j < 10; ++j) mat.at(i, j) = polys[i].coeffs()[j];
                return rank(*f, mat);
            };
            auto both = listed;
            both.insert(both.end(), cubic_minors.begin(), cubic_minors.end());
            CHECK(rank_of(both) == rank_of(listed));
            CHECK(rank_of(both) == rank_of(cubic_minors));
        }
    }
    SUBCASE("boundary example minors have no common zero") {
        auto m = minors2x2(examples::boundary_example(f));
        CHECK(is_projectively_empty(m));
    }
}

TEST_CASE("determinant") {
    auto f = Field::make(11);
    auto q = P(f, 2, "x0^2");
    HomogPoly z(f, 2);
    CHECK(*determinant(examples::standard_form(q, z, z)) == P(f, 4, "x0^2*x1*x2"));
    // Cofactor expansion oracle fixes the sign: the boundary example has det = +x1 (x2^3 + x0^2 x1).
    auto b = examples::boundary_example(f);
    CHECK(testing::det_along_row(b.entries(), 0) == examples::boundary_curve(f));
    CHECK(*determinant(b) == examples::boundary_curve(f));

    M1Presentation m1({{{x(f, 0), x(f, 1)}, {P(f, 3, "x1^3"), P(f, 3, "x0^3")}}});
    CHECK(*determinant(m1) == P(f, 4, "x0^4 - x1^4"));

    CHECK_FALSE(determinant(examples::standard_form(z, z, z)).has_value());

    SUBCASE("standard form determinant is x1x2q0 - x0x2q1 - x0x1q2") {
        Rng rng(12);
        for (int t = 0; t < 100; ++t) {
            auto q0 = testing::random_poly(rng, f, 2), q1 = testing::random_poly(rng, f, 2),
                 q2 = testing::random_poly(rng, f, 2);
            auto expect = x(f, 1) * x(f, 2) * q0 - x(f, 0) * x(f, 2) * q1 - x(f, 0) * x(f, 1) * q2;
            auto got = determinant(examples::standard_form(q0, q1, q2));
            if (expect.is_zero()) CHECK_FALSE(got);
            else CHECK(*got == expect);
        }
    }
    SUBCASE("expansion along different rows agrees") {
        Rng rng(13);
        for (int t = 0; t < 50; ++t) {
            auto a = sample_presentation(Stratum::m0, f, rng).presentation;
            const auto& e = std::get<M0Presentation>(a).entries();
            auto d = *determinant(a);
            CHECK(testing::det_along_row(e, 0) == d);
            CHECK(testing::det_along_row(e, 1) == d);
            CHECK(testing::det_along_row(e, 2) == d);
        }
    }
}

TEST_CASE("rank_at_point") {
    auto f = Field::make(7);
    const ProjPoint e0(f, {1, 0, 0}), e1(f, {0, 1, 0}), e2(f, {0, 0, 1});
    auto x1x2 = P(f, 2, "x1*x2");
    Presentation a = examples::standard_form(P(f, 2, "x0^2"), x1x2, x1x2);
    CHECK(rank_at_point(a, e0) == 1);

    Presentation b = examples::standard_form(P(f, 2, "x1^2"), P(f, 2, "x2^2"), P(f, 2, "x0^2"));
    CHECK(rank_at_point(b, e0) == 2);
    CHECK(rank_at_point(b, e1) == 2);
    CHECK(rank_at_point(b, e2) == 2);

    // Off the support curve the matrix is invertible.
    auto det = *determinant(b);
    int off_curve = 0;
    for (const auto& pt : enumerate_plane(f)) {
        if (eval(det, pt.coords(), *f) == 0) continue;
        CHECK(rank_at_point(b, pt) == 3);
        ++off_curve;
    }
    CHECK(off_curve > 0);

    SUBCASE("independent of the representative") {
        auto f2 = Field::make(7, 2);
        Rng rng(14);
        for (int t = 0; t < 50; ++t) {
            auto v = testing::random_nonzero_vector(rng, *f2);
            const Elem lambda = 1 + static_cast<Elem>(rng.below(f2->order() - 1));
            const ProjPoint pt(f2, v);
            // Rescaled coordinates normalize to the same point, so compare values directly.
            std::array<Elem, 9> raw{}, scaled{};
            const auto& e = std::get<M0Presentation>(b).entries();
            std::array<Elem, 3> w{f2->mul(lambda, v[0]), f2->mul(lambda, v[1]), f2->mul(lambda, v[2])};
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) {
                    raw[r * 3 + c] = eval(e[r][c], v, *f2);
                    scaled[r * 3 + c] = eval(e[r][c], w, *f2);
                }
            CHECK(scalar_rank(*f2, raw, 3, 3) == scalar_rank(*f2, scaled, 3, 3));
            CHECK(scalar_rank(*f2, raw, 3, 3) == rank_at_point(b, pt));
        }
    }
}

TEST_CASE("is_singular examples") {
    auto f = Field::make(7);
    Presentation bnd = examples::boundary_example(f);
    CHECK_FALSE(is_singular(bnd).singular);
    CHECK_FALSE(is_singular(bnd, Method::enumeration).singular);

    auto x1x2 = P(f, 2, "x1*x2");
    Presentation sing = examples::standard_form(P(f, 2, "x0^2"), x1x2, x1x2);
    CHECK(is_singular(sing).singular);
    auto v = is_singular(sing, Method::enumeration);
    CHECK(v.singular);
    REQUIRE(v.witness);
    CHECK(*v.witness == ProjPoint(f, {1, 0, 0}));
    CHECK(rank_at_point(sing, *v.witness) <= 1);

    Presentation smooth = examples::standard_form(P(f, 2, "x1^2"), P(f, 2, "x2^2"), P(f, 2, "x0^2"));
    CHECK_FALSE(is_singular(smooth).singular);
    CHECK_FALSE(is_singular(smooth, Method::enumeration).singular);

    SUBCASE("invalid presentations are rejected") {
        HomogPoly z(f, 2);
        Presentation zero_det = examples::standard_form(z, z, z);
        CHECK_THROWS_AS(is_singular(zero_det), InvalidPresentation);
        KroneckerModule unstable({{{x(f, 0), x(f, 0)}, {x(f, 1), x(f, 1)}, {x(f, 2), x(f, 2)}}});
        Presentation bad = M0Presentation(unstable, {P(f, 2, "x0^2"), z, z});
        CHECK(validate(bad) == Validity::unstable);
        CHECK_THROWS_AS(is_singular(bad, Method::enumeration), InvalidPresentation);
        CHECK_THROWS_AS(is_singular(sing, Method::support_point), InvalidInput);
    }
    SUBCASE("enumeration budget") {
        CHECK_THROWS_AS(is_singular(smooth, Method::enumeration, 1000), BudgetExceeded);
    }
}

TEST_CASE("Macaulay and enumeration verdicts agree") {
    for (std::uint32_t p : {5u, 7u}) {
        auto f = Field::make(p);
        FieldTower tower(p);
        Rng rng(100 + p);
        int singular = 0;
        for (int t = 0; t < 60; ++t) {
            Presentation a = t % 3 == 0 ? Presentation(testing::planted_singular_m0(rng, f))
                                        : sample_presentation(Stratum::m0, f, rng).presentation;
            auto mac = is_singular(a, Method::macaulay, tower);
            auto en = is_singular(a, Method::enumeration, tower);
            CHECK(mac.singular == en.singular);
            if (en.witness) CHECK(rank_at_point(a, *en.witness) <= 1);
            singular += mac.singular;
        }
        CHECK(singular >= 20);
        for (int t = 0; t < 60; ++t) {
            Presentation a = t % 3 == 0 ? Presentation(testing::planted_singular_m1(rng, f))
                                        : sample_presentation(Stratum::m1, f, rng).presentation;
            auto mac = is_singular(a, Method::macaulay, tower);
            CHECK(mac.singular == is_singular(a, Method::enumeration, tower).singular);
            CHECK(mac.singular == is_singular(a, Method::support_point, tower).singular);
        }
    }
}

TEST_CASE("M1 singularity is the universal singular locus") {
    auto f = Field::make(7);
    Rng rng(15);
    int singular = 0;
    for (int t = 0; t < 1000; ++t) {
        const auto a = t % 4 == 0 ? testing::planted_singular_m1(rng, f)
                                  : std::get<M1Presentation>(sample_presentation(Stratum::m1, f, rng).presentation);
        auto det = *determinant(a);
        auto pt = support_point(a);
        bool jacobian_vanishes = true;
        for (int i = 0; i < 3; ++i) jacobian_vanishes = jacobian_vanishes && eval(partial(det, i), pt.coords(), *f) == 0;
        const bool s = is_singular(Presentation(a)).singular;
        CHECK(s == jacobian_vanishes);
        singular += s;
    }
    CHECK(singular >= 250);
}

TEST_CASE("group action and coordinate invariance") {
    auto f = Field::make(7);
    Rng rng(16);
    for (int t = 0; t < 100; ++t) {
        auto a = t % 2 ? testing::planted_singular_m0(rng, f)
                       : std::get<M0Presentation>(sample_presentation(Stratum::m0, f, rng).presentation);
        auto g = testing::random_m0_group(rng, f);
        auto b = act(g, a);
        REQUIRE(validate(b) == Validity::ok);
        CHECK(is_singular(Presentation(a)).singular == is_singular(Presentation(b)).singular);
        auto da = *determinant(a), db = *determinant(b);
        CHECK(da.monic() == db.monic());

        auto tm = testing::random_invertible(rng, *f);
        auto c = substitute(a, tm);
        CHECK(is_singular(Presentation(a)).singular == is_singular(Presentation(c)).singular);
    }
    for (int t = 0; t < 100; ++t) {
        auto a = t % 2 ? testing::planted_singular_m1(rng, f)
                       : std::get<M1Presentation>(sample_presentation(Stratum::m1, f, rng).presentation);
        auto b = act(testing::random_m1_group(rng, f), a);
        CHECK(is_singular(Presentation(a)).singular == is_singular(Presentation(b)).singular);
        CHECK(determinant(a)->monic() == determinant(b)->monic());
        auto c = substitute(a, testing::random_invertible(rng, *f));
        CHECK(is_singular(Presentation(a)).singular == is_singular(Presentation(c)).singular);
    }
}

TEST_CASE("sample_presentation") {
    auto f11 = Field::make(11);
    Rng rng(42);
    auto s = sample_presentation(Stratum::m0, f11, rng);
    CHECK(validate(s.presentation) == Validity::ok);
    CHECK(stratum_of(s.presentation) == Stratum::m0);

    Rng rng7(42);
    auto s1 = sample_presentation(Stratum::m1, Field::make(7), rng7);
    CHECK(validate(s1.presentation) == Validity::ok);
    CHECK(stratum_of(s1.presentation) == Stratum::m1);

    SUBCASE("deterministic given the seed") {
        Rng r1(9), r2(9);
        for (int t = 0; t < 10; ++t)
            CHECK(sample_presentation(Stratum::m0, f11, r1).presentation ==
                  sample_presentation(Stratum::m0, f11, r2).presentation);
    }
    SUBCASE("acceptance rate at p = 11") {
        Rng r(123);
        std::uint64_t rejected = 0;
        const int draws = 2000;
        for (int t = 0; t < draws; ++t) rejected += sample_presentation(Stratum::m0, f11, r).rejections;
        const double rate = static_cast<double>(draws) / static_cast<double>(draws + rejected);
        CHECK(rate >= 0.5);
    }
    CHECK_THROWS_AS(sample_presentation(Stratum::m0, Field::make(7, 2), rng), InvalidInput);
}
