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
#include "qsheaf/field.hpp"
#include "qsheaf/rng.hpp"

using namespace qsheaf;

TEST_CASE("field construction rejects small and composite characteristics") {
    CHECK_THROWS_AS(Field::make(2), InvalidInput);
    CHECK_THROWS_AS(Field::make(3), InvalidInput);
    CHECK_THROWS_AS(Field::make(9), InvalidInput);
    CHECK_THROWS_AS(Field::make(7, 4), InvalidInput);
    CHECK_NOTHROW(Field::make(5));
}

TEST_CASE("default moduli are the first irreducibles in code order") {
    // x^2 + c1 x + c0 over F_5: codes 0..1 have the root 0, code 2 (x^2+2) has no root.
    CHECK(default_modulus(5, 2) == std::vector<std::uint32_t>{2, 0});
    CHECK(default_modulus(7, 2) == std::vector<std::uint32_t>{1, 0});  // -1 is a non-square mod 7
    auto m = default_modulus(7, 3);
    REQUIRE(m.size() == 3);
    // No roots in F_7.
    for (std::uint64_t t = 0; t < 7; ++t) {
        const std::uint64_t v = (t * t * t + m[2] * t * t + m[1] * t + m[0]) % 7;
        CHECK(v != 0);
    }
    CHECK_THROWS_AS(Field::make(FieldSpec{7, 2, {0, 0}}), InvalidInput);
}

TEST_CASE("field axioms and Frobenius on random samples") {
    for (auto [p, k] : {std::pair{5u, 1u}, {7u, 2u}, {7u, 3u}, {11u, 2u}, {13u, 3u}, {101u, 3u}}) {
        auto f = Field::make(p, k);
        Rng rng(p * 31 + k);
        for (int t = 0; t < 300; ++t) {
            const Elem a = static_cast<Elem>(rng.below(f->order()));
            const Elem b = static_cast<Elem>(rng.below(f->order()));
            const Elem c = static_cast<Elem>(rng.below(f->order()));
            CHECK(f->add(a, b) == f->add(b, a));
            CHECK(f->mul(a, b) == f->mul(b, a));
            CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
            CHECK(f->pow(a, f->order()) == a);
            // Frobenius is additive.
            CHECK(f->frobenius(f->add(a, b)) == f->add(f->frobenius(a), f->frobenius(b)));
            if (auto r = f->sqrt(f->mul(a, a))) CHECK(f->mul(*r, *r) == f->mul(a, a));
            else FAIL("square without a root");
        }
    }
}

TEST_CASE("prime field embeds into its extensions") {
    auto base = Field::make(11);
    auto ext = Field::make(11, 3);
    for (Elem a = 0; a < 11; ++a)
        for (Elem b = 0; b < 11; ++b) {
            CHECK(ext->add(a, b) == base->add(a, b));
            CHECK(ext->mul(a, b) == base->mul(a, b));
            CHECK(ext->sub(a, b) == base->sub(a, b));
        }
    CHECK(ext->frobenius(7) == 7);
}

TEST_CASE("non-squares have no root in F_p but do in F_p^2") {
    auto f = Field::make(7);
    auto f2 = Field::make(7, 2);
    CHECK_FALSE(f->sqrt(3).has_value());  // squares mod 7: 1, 2, 4
    auto r = f2->sqrt(3);
    REQUIRE(r.has_value());
    CHECK(f2->mul(*r, *r) == 3);
    CHECK_THROWS_AS(f->inv(0), InvalidInput);
}

TEST_CASE("residue round trip") {
    auto f = Field::make(13, 3);
    std::array<std::uint32_t, 3> r{4, 0, 12};
    auto e = f->from_residues(r);
    CHECK(f->residues(e) == r);
    CHECK_THROWS_AS(f->from_residues(std::array<std::uint32_t, 2>{1, 2}), InvalidInput);
}
