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

#include "qsheaf/presentation.hpp"

#include <vector>

#include "qsheaf/errors.hpp"
#include "qsheaf/linalg.hpp"
#include "qsheaf/macaulay.hpp"

namespace qsheaf {

namespace {

void require_degree(const HomogPoly& g, int degree, const char* what) {
    if (g.degree() != degree)
        throw InvalidInput(std::string(what) + " must have degree " + std::to_string(degree) + ", got " +
                           std::to_string(g.degree()));
}

template <class Entries>
void require_common_field(const Entries& entries) {
    const Field& f = entries[0][0].f();
    for (const auto& row : entries)
        for (const auto& e : row)
            if (!e.f().same_as(f)) throw InvalidInput("presentation entries over different fields");
}

HomogPoly det2(const HomogPoly& a, const HomogPoly& b, const HomogPoly& c, const HomogPoly& d) {
    return a * d - b * c;
}

bool independent(std::span<const HomogPoly> forms) {
    const Field& f = forms.front().f();
    DenseMatrix m(forms.size(), forms.front().coeffs().size());
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = forms[i].coeffs()[j];
    return rank(f, std::move(m)) == forms.size();
}

HomogPoly combine(std::span<const Elem> coeffs, std::span<const HomogPoly* const> polys) {
    HomogPoly out(polys.front()->field(), polys.front()->degree());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) out += polys[i]->scaled(coeffs[i]);
    return out;
}

}  // namespace

const char* to_string(Stratum s) noexcept { return s == Stratum::m0 ? "m0" : "m1"; }

Stratum parse_stratum(const std::string& s) {
    if (s == "m0") return Stratum::m0;
    if (s == "m1") return Stratum::m1;
    throw InvalidInput("unknown stratum '" + s + "' (expected m0 or m1)");
}

KroneckerModule::KroneckerModule(Entries entries) : entries_(std::move(entries)) {
    for (const auto& row : entries_)
        for (const auto& e : row) require_degree(e, 1, "Kronecker module entries");
    require_common_field(entries_);
}

std::array<HomogPoly, 3> KroneckerModule::minors() const {
    const auto& a = entries_;
    return {det2(a[0][0], a[0][1], a[1][0], a[1][1]), det2(a[0][0], a[0][1], a[2][0], a[2][1]),
            det2(a[1][0], a[1][1], a[2][0], a[2][1])};
}

std::array<HomogPoly, 3> KroneckerModule::cofactors() const {
    auto m = minors();
    return {m[2], -m[1], m[0]};
}

bool is_stable(const KroneckerModule& alpha) {
    auto m = alpha.minors();
    return independent(m);
}

KroneckerModule substitute(const KroneckerModule& alpha, const Mat3& t) {
    auto e = alpha.entries();
    for (auto& row : e)
        for (auto& x : row) x = substitute(x, t);
    return KroneckerModule(std::move(e));
}

M0Presentation::M0Presentation(Entries entries) : entries_(std::move(entries)) {
    for (const auto& row : entries_) {
        require_degree(row[0], 1, "M0 column 0");
        require_degree(row[1], 1, "M0 column 1");
        require_degree(row[2], 2, "M0 column 2");
    }
    require_common_field(entries_);
}

M0Presentation::M0Presentation(const KroneckerModule& alpha, std::array<HomogPoly, 3> q)
    : M0Presentation(Entries{{{alpha.at(0, 0), alpha.at(0, 1), std::move(q[0])},
                              {alpha.at(1, 0), alpha.at(1, 1), std::move(q[1])},
                              {alpha.at(2, 0), alpha.at(2, 1), std::move(q[2])}}}) {}

KroneckerModule M0Presentation::linear_part() const {
    return KroneckerModule({{{entries_[0][0], entries_[0][1]},
                             {entries_[1][0], entries_[1][1]},
                             {entries_[2][0], entries_[2][1]}}});
}

std::array<HomogPoly, 3> M0Presentation::quadric_column() const {
    return {entries_[0][2], entries_[1][2], entries_[2][2]};
}

M1Presentation::M1Presentation(Entries entries) : entries_(std::move(entries)) {
    require_degree(entries_[0][0], 1, "M1 row 0");
    require_degree(entries_[0][1], 1, "M1 row 0");
    require_degree(entries_[1][0], 3, "M1 row 1");
    require_degree(entries_[1][1], 3, "M1 row 1");
    require_common_field(entries_);
}

Stratum stratum_of(const Presentation& a) noexcept {
    return std::holds_alternative<M0Presentation>(a) ? Stratum::m0 : Stratum::m1;
}

const FieldPtr& field_of(const Presentation& a) noexcept {
    return std::visit([](const auto& x) -> const FieldPtr& { return x.field(); }, a);
}

const char* to_string(Validity v) noexcept {
    switch (v) {
        case Validity::ok: return "ok";
        case Validity::unstable: return "unstable linear part";
        case Validity::dependent_linear_forms: return "linearly dependent linear forms";
        case Validity::zero_determinant: return "determinant vanishes identically";
    }
    return "?";
}

Validity validate(const M0Presentation& a) {
    if (!is_stable(a.linear_part())) return Validity::unstable;
    if (!determinant(a)) return Validity::zero_determinant;
    return Validity::ok;
}

Validity validate(const M1Presentation& a) {
    std::array<HomogPoly, 2> z{a.at(0, 0), a.at(0, 1)};
    if (!independent(z)) return Validity::dependent_linear_forms;
    if (!determinant(a)) return Validity::zero_determinant;
    return Validity::ok;
}

Validity validate(const Presentation& a) {
    return std::visit([](const auto& x) { return validate(x); }, a);
}

void require_valid(const Presentation& a) {
    const auto v = validate(a);
    if (v != Validity::ok) throw InvalidPresentation(std::string("invalid presentation: ") + to_string(v));
}

std::array<HomogPoly, 9> minors2x2(const M0Presentation& a) {
    constexpr std::array<std::array<int, 2>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
    std::array<std::optional<HomogPoly>, 9> tmp;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) {
            const auto [i, j] = pairs[r];
            const auto [u, v] = pairs[c];
            tmp[r * 3 + c] = det2(a.at(i, u), a.at(i, v), a.at(j, u), a.at(j, v));
        }
    return {*tmp[0], *tmp[1], *tmp[2], *tmp[3], *tmp[4], *tmp[5], *tmp[6], *tmp[7], *tmp[8]};
}

std::optional<HomogPoly> determinant(const M0Presentation& a) {
    auto d = a.linear_part().cofactors();
    HomogPoly det = d[0] * a.at(0, 2);
    det += d[1] * a.at(1, 2);
    det += d[2] * a.at(2, 2);
    if (det.is_zero()) return std::nullopt;
    return det;
}

std::optional<HomogPoly> determinant(const M1Presentation& a) {
    auto det = det2(a.at(0, 0), a.at(0, 1), a.at(1, 0), a.at(1, 1));
    if (det.is_zero()) return std::nullopt;
    return det;
}

std::optional<HomogPoly> determinant(const Presentation& a) {
    return std::visit([](const auto& x) { return determinant(x); }, a);
}

int scalar_rank(const Field& f, std::span<Elem> v, int rows, int cols) {
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = r;
        while (sel < rows && v[static_cast<std::size_t>(sel * cols + c)] == 0) ++sel;
        if (sel == rows) continue;
        if (sel != r)
            for (int j = 0; j < cols; ++j) std::swap(v[static_cast<std::size_t>(sel * cols + j)], v[static_cast<std::size_t>(r * cols + j)]);
        const Elem inv = f.inv(v[static_cast<std::size_t>(r * cols + c)]);
        for (int i = r + 1; i < rows; ++i) {
            const Elem factor = f.mul(v[static_cast<std::size_t>(i * cols + c)], inv);
            if (factor == 0) continue;
            for (int j = c; j < cols; ++j) {
                auto& x = v[static_cast<std::size_t>(i * cols + j)];
                x = f.sub(x, f.mul(factor, v[static_cast<std::size_t>(r * cols + j)]));
            }
        }
        ++r;
    }
    return r;
}

int rank_at_point(const Presentation& a, const ProjPoint& pt) {
    const Field& target = *pt.field();
    return std::visit(
        [&](const auto& m) {
            const auto& e = m.entries();
            const int rows = static_cast<int>(e.size()), cols = static_cast<int>(e[0].size());
            std::vector<Elem> v;
            for (const auto& row : e)
                for (const auto& x : row) v.push_back(eval(x, pt.coords(), target));
            return scalar_rank(target, v, rows, cols);
        },
        a);
}

const char* to_string(Method m) noexcept {
    switch (m) {
        case Method::macaulay: return "macaulay";
        case Method::enumeration: return "enumeration";
        case Method::support_point: return "support_point";
    }
    return "?";
}

ProjPoint support_point(const M1Presentation& a) {
    const Field& f = *a.field();
    auto z1 = a.at(0, 0).coeffs(), z2 = a.at(0, 1).coeffs();
    std::array<Elem, 3> c{f.sub(f.mul(z1[1], z2[2]), f.mul(z1[2], z2[1])),
                          f.sub(f.mul(z1[2], z2[0]), f.mul(z1[0], z2[2])),
                          f.sub(f.mul(z1[0], z2[1]), f.mul(z1[1], z2[0]))};
    if (c == std::array<Elem, 3>{}) throw InvalidPresentation("z1 and z2 are linearly dependent");
    return ProjPoint(a.field(), c);
}

namespace {

SingularityVerdict enumerate_m0(const M0Presentation& a, const FieldTower& tower, std::uint64_t budget) {
    SingularityVerdict out{false, std::nullopt, Method::enumeration};
    for (unsigned k = 1; k <= 3 && !out.singular; ++k) {
        const FieldPtr& fp = tower.level(k);
        const Field& f = *fp;
        check_plane_budget(f, budget);
        for_each_point(f, [&](const std::array<Elem, 3>& c) {
            std::array<Elem, 6> lin{};
            for (int r = 0; r < 3; ++r)
                for (int col = 0; col < 2; ++col)
                    lin[static_cast<std::size_t>(r * 2 + col)] = eval_unchecked(a.at(r, col), c, f);
            // rank(A(pt)) <= 1 forces rank <= 1 on the linear columns.
            if (scalar_rank(f, lin, 3, 2) > 1) return true;
            std::array<Elem, 9> full{};
            for (int r = 0; r < 3; ++r)
                for (int col = 0; col < 3; ++col)
                    full[static_cast<std::size_t>(r * 3 + col)] = eval_unchecked(a.at(r, col), c, f);
            if (scalar_rank(f, full, 3, 3) > 1) return true;
            out.singular = true;
            out.witness = ProjPoint(fp, c);
            return false;
        });
    }
    return out;
}

SingularityVerdict enumerate_m1(const M1Presentation& a, const FieldTower& tower, std::uint64_t budget) {
    SingularityVerdict out{false, std::nullopt, Method::enumeration};
    for (unsigned k = 1; k <= 3 && !out.singular; ++k) {
        const FieldPtr& fp = tower.level(k);
        const Field& f = *fp;
        check_plane_budget(f, budget);
        for_each_point(f, [&](const std::array<Elem, 3>& c) {
            std::array<Elem, 4> v{};
            for (int r = 0; r < 2; ++r)
                for (int col = 0; col < 2; ++col) {
                    v[static_cast<std::size_t>(r * 2 + col)] = eval_unchecked(a.at(r, col), c, f);
                    if (v[static_cast<std::size_t>(r * 2 + col)] != 0) return true;
                }
            out.singular = true;
            out.witness = ProjPoint(fp, c);
            return false;
        });
    }
    return out;
}

SingularityVerdict decide(const Presentation& a, Method method, const FieldTower* tower, std::uint64_t budget);

}  // namespace

SingularityVerdict is_singular(const Presentation& a, Method method, std::uint64_t budget) {
    if (method == Method::enumeration) {
        require_valid(a);
        const FieldTower tower(field_of(a)->p());
        return decide(a, method, &tower, budget);
    }
    return decide(a, method, nullptr, budget);
}

SingularityVerdict is_singular(const Presentation& a, Method method, const FieldTower& tower, std::uint64_t budget) {
    if (tower.level(1)->p() != field_of(a)->p()) throw InvalidInput("extension tower has the wrong characteristic");
    return decide(a, method, &tower, budget);
}

namespace {

SingularityVerdict decide(const Presentation& a, Method method, const FieldTower* tower, std::uint64_t budget) {
    require_valid(a);
    if (field_of(a)->k() != 1) throw InvalidInput("presentations must be defined over a prime field");

    if (const auto* m0 = std::get_if<M0Presentation>(&a)) {
        switch (method) {
            case Method::macaulay: {
                auto minors = minors2x2(*m0);
                return {!is_projectively_empty(minors), std::nullopt, Method::macaulay};
            }
            case Method::enumeration: return enumerate_m0(*m0, *tower, budget);
            case Method::support_point: throw InvalidInput("support_point method applies to M1 presentations only");
        }
    }
    const auto& m1 = std::get<M1Presentation>(a);
    switch (method) {
        case Method::macaulay: {
            std::array<HomogPoly, 4> entries{m1.at(0, 0), m1.at(0, 1), m1.at(1, 0), m1.at(1, 1)};
            return {!is_projectively_empty(entries), std::nullopt, Method::macaulay};
        }
        case Method::enumeration: return enumerate_m1(m1, *tower, budget);
        case Method::support_point: {
            auto pt = support_point(m1);
            const Field& f = *m1.field();
            const bool sing = eval(m1.at(1, 0), pt.coords(), f) == 0 && eval(m1.at(1, 1), pt.coords(), f) == 0;
            return {sing, sing ? std::optional<ProjPoint>(pt) : std::nullopt, Method::support_point};
        }
    }
    throw InvalidInput("unknown method");
}

}  // namespace

M0Presentation substitute(const M0Presentation& a, const Mat3& t) {
    auto e = a.entries();
    for (auto& row : e)
        for (auto& x : row) x = substitute(x, t);
    return M0Presentation(std::move(e));
}

M1Presentation substitute(const M1Presentation& a, const Mat3& t) {
    auto e = a.entries();
    for (auto& row : e)
        for (auto& x : row) x = substitute(x, t);
    return M1Presentation(std::move(e));
}

Presentation substitute(const Presentation& a, const Mat3& t) {
    return std::visit([&](const auto& x) -> Presentation { return substitute(x, t); }, a);
}

M0Presentation act(const M0GroupElement& g, const M0Presentation& a) {
    const FieldPtr& fp = a.field();
    const Field& f = *fp;
    if (det3(f, g.rows) == 0) throw InvalidInput("row transformation is singular");
    const auto& lc = g.linear_cols;
    if (f.sub(f.mul(lc[0][0], lc[1][1]), f.mul(lc[0][1], lc[1][0])) == 0)
        throw InvalidInput("column transformation is singular");
    if (g.q_scale == 0) throw InvalidInput("column scale must be nonzero");
    if (g.a.degree() != 1 || g.b.degree() != 1) throw InvalidInput("unipotent part needs linear forms");

    // R * A
    auto e = a.entries();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            std::array<const HomogPoly*, 3> col{&a.at(0, j), &a.at(1, j), &a.at(2, j)};
            e[i][j] = combine(g.rows[i], col);
        }
    // (R A) * C
    auto out = e;
    for (int i = 0; i < 3; ++i) {
        out[i][0] = e[i][0].scaled(lc[0][0]) + e[i][1].scaled(lc[1][0]);
        out[i][1] = e[i][0].scaled(lc[0][1]) + e[i][1].scaled(lc[1][1]);
        out[i][2] = g.a * e[i][0] + g.b * e[i][1] + e[i][2].scaled(g.q_scale);
    }
    return M0Presentation(std::move(out));
}

M1Presentation act(const M1GroupElement& g, const M1Presentation& a) {
    const Field& f = *a.field();
    if (g.row0_scale == 0 || g.row1_scale == 0) throw InvalidInput("row scales must be nonzero");
    if (f.sub(f.mul(g.cols[0][0], g.cols[1][1]), f.mul(g.cols[0][1], g.cols[1][0])) == 0)
        throw InvalidInput("column transformation is singular");
    if (g.h.degree() != 2) throw InvalidInput("row operation needs a quadric");
    auto e = a.entries();
    for (int j = 0; j < 2; ++j) {
        e[0][j] = a.at(0, j).scaled(g.row0_scale);
        e[1][j] = a.at(1, j).scaled(g.row1_scale) + g.h * a.at(0, j);
    }
    auto out = e;
    for (int i = 0; i < 2; ++i) {
        out[i][0] = e[i][0].scaled(g.cols[0][0]) + e[i][1].scaled(g.cols[1][0]);
        out[i][1] = e[i][0].scaled(g.cols[0][1]) + e[i][1].scaled(g.cols[1][1]);
    }
    return M1Presentation(std::move(out));
}

namespace {

HomogPoly draw(Rng& rng, const FieldPtr& f, int degree) {
    std::vector<Elem> c(monomials::count(degree));
    for (auto& x : c) x = static_cast<Elem>(rng.below(f->p()));
    return HomogPoly(f, degree, std::move(c));
}

}  // namespace

SampledPresentation sample_presentation(Stratum stratum, const FieldPtr& field, Rng& rng,
                                        std::uint64_t max_rejections) {
    if (field->k() != 1) throw InvalidInput("sampling is over the prime field only");
    for (std::uint64_t rejected = 0; rejected <= max_rejections; ++rejected) {
        if (stratum == Stratum::m0) {
            M0Presentation::Entries e{{{draw(rng, field, 1), draw(rng, field, 1), draw(rng, field, 2)},
                                       {draw(rng, field, 1), draw(rng, field, 1), draw(rng, field, 2)},
                                       {draw(rng, field, 1), draw(rng, field, 1), draw(rng, field, 2)}}};
            M0Presentation a(std::move(e));
            if (validate(a) == Validity::ok) return {Presentation(std::move(a)), rejected};
        } else {
            M1Presentation::Entries e{{{draw(rng, field, 1), draw(rng, field, 1)},
                                       {draw(rng, field, 3), draw(rng, field, 3)}}};
            M1Presentation a(std::move(e));
            if (validate(a) == Validity::ok) return {Presentation(std::move(a)), rejected};
        }
    }
    throw BudgetExceeded("sample_presentation: rejection budget exhausted");
}

}  // namespace qsheaf
