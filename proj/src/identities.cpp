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

#include "qsheaf/identities.hpp"

#include <set>
#include <sstream>

#include "qsheaf/errors.hpp"
#include "qsheaf/examples.hpp"
#include "qsheaf/experiments.hpp"
#include "qsheaf/flags.hpp"
#include "qsheaf/linalg.hpp"
#include "qsheaf/macaulay.hpp"

namespace qsheaf {

namespace {

HomogPoly random_form(Rng& rng, const FieldPtr& f, int degree) {
    std::vector<Elem> c(monomials::count(degree));
    for (auto& x : c) x = static_cast<Elem>(rng.below(f->p()));
    return HomogPoly(f, degree, std::move(c));
}

std::array<HomogPoly, 3> random_triple(Rng& rng, const FieldPtr& f) {
    return {random_form(rng, f, 2), random_form(rng, f, 2), random_form(rng, f, 2)};
}

std::set<ProjPoint> zero_set(const std::vector<HomogPoly>& gens, const FieldPtr& ext) {
    std::set<ProjPoint> out;
    for_each_point(*ext, [&](const std::array<Elem, 3>& c) {
        for (const auto& g : gens)
            if (eval_unchecked(g, c, *ext) != 0) return true;
        out.emplace(ext, c);
        return true;
    });
    return out;
}

unsigned enumeration_degree(const IdentityOptions& o) {
    if (o.max_enumeration_degree > 0) return o.max_enumeration_degree;
    unsigned k = 1;
    while (k < 3 && plane_size(*Field::make(o.p, k + 1)) <= (std::uint64_t{1} << 18)) ++k;
    return k;
}

IdentityCheck result(std::string name, std::uint64_t failures, std::uint64_t total, const std::string& first) {
    std::ostringstream d;
    d << (total - failures) << "/" << total << " passed";
    if (failures) d << "; first failure: " << first;
    return {std::move(name), failures == 0, d.str()};
}

std::string describe(const std::array<HomogPoly, 3>& q) {
    return "q = (" + to_string(q[0]) + ", " + to_string(q[1]) + ", " + to_string(q[2]) + ")";
}

}  // namespace

IdentityCheck check_standard_determinant(const IdentityOptions& o, const DeterminantFn& det) {
    const auto f = Field::make(o.p);
    Rng rng(derive_seed(o.seed, 1));
    const auto x0 = HomogPoly::variable(f, 0), x1 = HomogPoly::variable(f, 1), x2 = HomogPoly::variable(f, 2);
    std::uint64_t failures = 0;
    std::string first;
    for (std::uint64_t i = 0; i < o.samples; ++i) {
        const auto q = random_triple(rng, f);
        const auto a = examples::standard_form(q[0], q[1], q[2]);
        const auto got = det ? det(a) : determinant(a);
        const HomogPoly expect = x1 * x2 * q[0] - x0 * x2 * q[1] - x0 * x1 * q[2];
        const bool ok = got ? *got == expect : expect.is_zero();
        if (!ok && failures++ == 0) first = describe(q);
    }
    return result("determinant of the standard form is x1x2q0 - x0x2q1 - x0x1q2", failures, o.samples, first);
}

IdentityCheck check_partials(const IdentityOptions& o) {
    const auto f = Field::make(o.p);
    Rng rng(derive_seed(o.seed, 2));
    const auto x0 = HomogPoly::variable(f, 0), x1 = HomogPoly::variable(f, 1), x2 = HomogPoly::variable(f, 2);
    std::uint64_t failures = 0;
    std::string first;
    for (std::uint64_t i = 0; i < o.samples; ++i) {
        const auto q = random_triple(rng, f);
        const HomogPoly fq = x1 * x2 * q[0] - x0 * x2 * q[1] - x0 * x1 * q[2];
        auto d = [&](int v) { return std::array{partial(q[0], v), partial(q[1], v), partial(q[2], v)}; };
        const auto d0 = d(0), d1 = d(1), d2 = d(2);
        const bool ok =
            partial(fq, 0) == x1 * x2 * d0[0] - x2 * q[1] - x0 * x2 * d0[1] - x1 * q[2] - x0 * x1 * d0[2] &&
            partial(fq, 1) == x2 * q[0] + x1 * x2 * d1[0] - x0 * x2 * d1[1] - x0 * q[2] - x0 * x1 * d1[2] &&
            partial(fq, 2) == x1 * q[0] + x1 * x2 * d2[0] - x0 * q[1] - x0 * x2 * d2[1] - x0 * x1 * d2[2];
        if (!ok && failures++ == 0) first = describe(q);
    }
    return result("partial derivatives of x1x2q0 - x0x2q1 - x0x1q2", failures, o.samples, first);
}

IdentityCheck check_zero_sets(const IdentityOptions& o) {
    const auto f = Field::make(o.p);
    const FieldTower tower(o.p);
    const unsigned kmax = enumeration_degree(o);
    Rng rng(derive_seed(o.seed, 3));
    const auto x0 = HomogPoly::variable(f, 0), x1 = HomogPoly::variable(f, 1), x2 = HomogPoly::variable(f, 2);
    std::uint64_t failures = 0;
    std::string first;
    for (std::uint64_t i = 0; i < o.samples; ++i) {
        const auto q = random_triple(rng, f);
        const auto a = examples::standard_form(q[0], q[1], q[2]);
        const auto m = minors2x2(a);
        const std::vector<HomogPoly> i_min(m.begin(), m.end());
        const std::vector<HomogPoly> z_sing{x0 * x1, x0 * x2, x1 * x2, -(x2 * q[1]) - x1 * q[2],
                                            x2 * q[0] - x0 * q[2], x1 * q[0] - x0 * q[1]};
        std::vector<HomogPoly> both = i_min;
        both.insert(both.end(), z_sing.begin(), z_sing.end());
        const bool e1 = is_projectively_empty(i_min), e2 = is_projectively_empty(z_sing),
                   e3 = is_projectively_empty(both);
        bool ok = e1 == e2 && e2 == e3;
        for (unsigned k = 1; ok && k <= kmax; ++k) ok = zero_set(i_min, tower.level(k)) == zero_set(z_sing, tower.level(k));
        if (!ok && failures++ == 0) first = describe(q);
    }
    return result("zero sets of I_min and I_Z + I_SingC agree in standard position (enumeration up to F_" +
                      std::to_string(o.p) + "^" + std::to_string(kmax) + ")",
                  failures, o.samples, first);
}

IdentityCheck check_boundary_example(std::uint32_t p, const DeterminantFn& det) {
    const auto f = Field::make(p);
    const auto a = examples::boundary_example(f);
    std::vector<std::string> problems;
    const auto d = det ? det(a) : determinant(a);
    if (!d || !(d->monic() == examples::boundary_curve(f).monic()))
        problems.push_back("curve is " + (d ? to_string(d->monic()) : std::string("0")));
    if (is_singular(Presentation(a)).singular) problems.push_back("reported singular");
    const auto zs = h_points(nu(a));
    const std::vector<PointOrbit> expect_z{{ProjPoint(f, {0, 0, 1}), 1}, {ProjPoint(f, {0, 1, 0}), 1}};
    if (zs.orbits != expect_z || !zs.non_reduced) problems.push_back("Z is not {<0,0,1>, double <0,1,0>}");
    const HomogPoly real = *determinant(a);
    for (int i = 0; i < 3; ++i)
        if (eval(partial(real, i), std::array<Elem, 3>{0, 1, 0}, *f) != 0) problems.push_back("<0,1,0> not in Sing C");
    if (!sing_curve_meets_Z(a)) problems.push_back("Z and Sing C do not meet");
    std::string detail = problems.empty() ? "non-singular; curve x1(x2^3 + x0^2x1); <0,1,0> in Z and Sing C" : "";
    for (const auto& s : problems) detail += (detail.empty() ? "" : "; ") + s;
    return {"boundary example (x0 x1 0; 0 x0 x2^2; x2 0 x1^2)", problems.empty(), detail};
}

IdentityCheck check_standard_position(std::uint32_t p) {
    const auto f = Field::make(p);
    std::vector<std::string> problems;
    const auto zs = h_points(examples::standard_kronecker(f));
    const std::vector<PointOrbit> expect{
        {ProjPoint(f, {0, 0, 1}), 1}, {ProjPoint(f, {0, 1, 0}), 1}, {ProjPoint(f, {1, 0, 0}), 1}};
    if (zs.orbits != expect) problems.push_back("Z of (x0 x0; x1 0; 0 x2) is not the coordinate triangle");
    const auto d = examples::standard_kronecker(f).cofactors();
    const auto x = [&](int i) { return HomogPoly::variable(f, i); };
    if (!(d[0] == x(1) * x(2)) || !(d[1] == -(x(0) * x(2))) || !(d[2] == -(x(0) * x(1))))
        problems.push_back("cofactors are not (x1x2, -x0x2, -x0x1)");
    const auto x1x2 = x(1) * x(2);
    const Presentation sing = examples::standard_form(x(0) * x(0), x1x2, x1x2);
    const auto v = is_singular(sing, Method::enumeration);
    if (!v.singular || !v.witness || !(*v.witness == ProjPoint(f, {1, 0, 0})))
        problems.push_back("(x0^2, x1x2, x1x2) not singular at <1,0,0>");
    std::string detail = problems.empty() ? "coordinate triangle; singular example witnessed at <1,0,0>" : "";
    for (const auto& s : problems) detail += (detail.empty() ? "" : "; ") + s;
    return {"standard position", problems.empty(), detail};
}

IdentityCheck check_twist_family(const IdentityOptions& o) {
    const auto f = Field::make(o.p);
    Rng rng(derive_seed(o.seed, 4));
    std::uint64_t failures = 0;
    std::string first;
    for (std::uint64_t i = 0; i < o.samples; ++i) {
        Mat3 t{};
        do {
            for (auto& row : t)
                for (auto& c : row) c = static_cast<Elem>(rng.below(f->p()));
        } while (det3(*f, t) == 0);
        const auto y0 = substitute(HomogPoly::variable(f, 0), t), y1 = substitute(HomogPoly::variable(f, 1), t),
                   y2 = substitute(HomogPoly::variable(f, 2), t);
        const auto alpha = examples::common_factor_normal_form(y0, y1, y2);
        const auto d = alpha.cofactors();
        const auto q = random_triple(rng, f);
        const M0Presentation a(alpha, q);
        const auto xi = random_form(rng, f, 1);
        bool ok = (y2 * d[1] - y1 * d[2]).is_zero() && d[0] == y0 * y0;
        try {
            const auto b = fiber_twist(a, xi);
            ok = ok && determinant(b) == determinant(a) && nu(b) == nu(a);
        } catch (const LemmaViolation&) {
            ok = false;
        }
        if (!ok && failures++ == 0) first = describe(q) + ", xi = " + to_string(xi);
    }
    return result("syzygy (0, y2, -y1) and det(A_xi) = det(A)", failures, o.samples, first);
}

IdentityCheck check_same_orbit(const IdentityOptions& o) {
    const auto f = Field::make(o.p);
    Rng rng(derive_seed(o.seed, 5));
    std::uint64_t failures = 0, done = 0;
    std::string first;
    while (done < o.samples) {
        const auto a = std::get<M0Presentation>(sample_presentation(Stratum::m0, f, rng).presentation);
        if (common_linear_factor(nu(a))) continue;
        ++done;
        // Random q' with sum d_i q'_i = c det A: c q_A plus a random kernel vector.
        const auto d = nu(a).cofactors();
        const auto quads = monomials::of_degree(2);
        DenseMatrix m(monomials::count(4), 3 * quads.size());
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < quads.size(); ++j) {
                const auto col = d[i] * HomogPoly::monomial(f, quads[j]);
                for (std::size_t r = 0; r < col.coeffs().size(); ++r) m.at(r, i * quads.size() + j) = col.coeffs()[r];
            }
        const auto kernel = kernel_basis(*f, m);
        const Elem c = 1 + static_cast<Elem>(rng.below(f->p() - 1));
        std::array<HomogPoly, 3> q{a.at(0, 2).scaled(c), a.at(1, 2).scaled(c), a.at(2, 2).scaled(c)};
        for (const auto& v : kernel) {
            const auto s = static_cast<Elem>(rng.below(f->p()));
            for (std::size_t i = 0; i < 3; ++i)
                q[i] += HomogPoly(f, 2, {v.begin() + i * quads.size(), v.begin() + (i + 1) * quads.size()}).scaled(s);
        }
        const M0Presentation b(nu(a), q);
        bool ok = false;
        try {
            ok = apply_certificate(a, same_orbit_test(a, b)) == b;
        } catch (const LemmaViolation&) {
        }
        if (!ok && failures++ == 0) first = "A q-column " + to_string(a.at(0, 2)) + ", ...";
    }
    return result("equal (lin, det) pairs are related by (1 0 a; 0 1 b; 0 0 c)", failures, o.samples, first);
}

IdentityCheck check_round_trip(const IdentityOptions& o) {
    const auto f = Field::make(o.p);
    const FieldTower tower(o.p);
    Rng rng(derive_seed(o.seed, 6));
    std::uint64_t failures = 0;
    std::string first;
    for (std::uint64_t i = 0; i < o.samples; ++i) {
        const auto tri = sample_triangle(f, rng);
        const auto quartic = sample_form_through(f, 4, tri, rng);
        const auto fl = flag_of(build_from_flag(quartic, tri), tower);
        std::set<ProjPoint> got, want(tri.begin(), tri.end());
        for (const auto& pt : fl.points) got.insert(pt.point);
        const bool ok = fl.curve == quartic.monic() && got == want && fl.points.size() == 3;
        if (!ok && failures++ == 0) first = "curve " + to_string(quartic);
    }
    return result("build_from_flag then flag_of returns the flag", failures, o.samples, first);
}

IdentityCheck check_dimensions() {
    const auto table = dimension_bookkeeping();
    std::ostringstream d;
    bool ok = table.size() == 5;
    const int expect[] = {36, 19, 17, 15, 2};
    for (std::size_t i = 0; i < table.size(); ++i) {
        d << (i ? ", " : "") << table[i].quantity << " = " << table[i].value;
        ok = ok && i < 5 && table[i].value == expect[i];
    }
    return {"dimension count", ok, d.str()};
}

std::vector<IdentityCheck> verify_known_identities(const IdentityOptions& o) {
    return {check_standard_determinant(o), check_partials(o), check_zero_sets(o), check_boundary_example(o.p),
            check_standard_position(o.p), check_twist_family(o), check_same_orbit(o), check_round_trip(o),
            check_dimensions()};
}

}  // namespace qsheaf
