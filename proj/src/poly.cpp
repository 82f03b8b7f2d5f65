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

#include "qsheaf/poly.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "qsheaf/errors.hpp"

namespace qsheaf {

namespace monomials {

namespace {

struct Tables {
    std::array<std::vector<Exponents>, kMaxDegree + 1> by_degree;
    Tables() {
        for (int d = 0; d <= kMaxDegree; ++d) {
            auto& v = by_degree[static_cast<std::size_t>(d)];
            for (int e0 = d; e0 >= 0; --e0)
                for (int e1 = d - e0; e1 >= 0; --e1) v.push_back({e0, e1, d - e0 - e1});
        }
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

}  // namespace

std::span<const Exponents> of_degree(int d) {
    if (d < 0 || d > kMaxDegree) throw InvalidInput("monomial degree out of range");
    return tables().by_degree[static_cast<std::size_t>(d)];
}

}  // namespace monomials

Mat3 identity3() noexcept { return Mat3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

Mat3 mat_mul(const Field& f, const Mat3& a, const Mat3& b) noexcept {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Elem s = 0;
            for (int l = 0; l < 3; ++l) s = f.add(s, f.mul(a[i][l], b[l][j]));
            r[i][j] = s;
        }
    return r;
}

Elem det3(const Field& f, const Mat3& m) noexcept {
    auto minor = [&](int r0, int r1, int c0, int c1) {
        return f.sub(f.mul(m[r0][c0], m[r1][c1]), f.mul(m[r0][c1], m[r1][c0]));
    };
    Elem d = f.mul(m[0][0], minor(1, 2, 1, 2));
    d = f.sub(d, f.mul(m[0][1], minor(1, 2, 0, 2)));
    return f.add(d, f.mul(m[0][2], minor(1, 2, 0, 1)));
}

Mat3 inverse3(const Field& f, const Mat3& m) {
    const Elem d = det3(f, m);
    if (d == 0) throw InvalidInput("matrix is singular");
    const Elem di = f.inv(d);
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            // adjugate: r[i][j] = cofactor(j, i)
            const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            Elem c = f.sub(f.mul(m[r0][c0], m[r1][c1]), f.mul(m[r0][c1], m[r1][c0]));
            r[i][j] = f.mul(c, di);
        }
    return r;
}

std::array<Elem, 3> apply3(const Field& f, const Mat3& m, std::span<const Elem, 3> v) noexcept {
    std::array<Elem, 3> r{};
    for (int i = 0; i < 3; ++i)
        r[i] = f.add(f.add(f.mul(m[i][0], v[0]), f.mul(m[i][1], v[1])), f.mul(m[i][2], v[2]));
    return r;
}

HomogPoly::HomogPoly(FieldPtr field, int degree)
    : field_(std::move(field)), degree_(degree), coeffs_(monomials::count(degree), 0) {
    if (!field_) throw InvalidInput("polynomial needs a field");
    if (degree < 0 || degree > monomials::kMaxDegree) throw InvalidInput("polynomial degree out of range");
}

HomogPoly::HomogPoly(FieldPtr field, int degree, std::vector<Elem> coeffs) : HomogPoly(std::move(field), degree) {
    if (coeffs.size() != coeffs_.size())
        throw InvalidInput("coefficient vector of length " + std::to_string(coeffs.size()) + " for degree " +
                           std::to_string(degree));
    for (auto c : coeffs)
        if (c >= field_->order()) throw InvalidInput("coefficient out of field range");
    coeffs_ = std::move(coeffs);
}

HomogPoly HomogPoly::monomial(FieldPtr field, Exponents e, Elem c) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw InvalidInput("negative exponent");
    HomogPoly m(std::move(field), e[0] + e[1] + e[2]);
    m.set_coeff(e, c);
    return m;
}

HomogPoly HomogPoly::variable(FieldPtr field, int axis) {
    if (axis < 0 || axis > 2) throw InvalidInput("axis must be 0, 1 or 2");
    Exponents e{0, 0, 0};
    e[static_cast<std::size_t>(axis)] = 1;
    return monomial(std::move(field), e);
}

HomogPoly HomogPoly::linear(FieldPtr field, std::array<Elem, 3> c) {
    return HomogPoly(std::move(field), 1, {c[0], c[1], c[2]});
}

bool HomogPoly::is_zero() const noexcept {
    for (auto c : coeffs_)
        if (c != 0) return false;
    return true;
}

HomogPoly HomogPoly::lifted(FieldPtr ext) const {
    if (ext->p() != field_->p() || (field_->k() != 1 && !ext->same_as(*field_)))
        throw InvalidInput("cannot lift polynomial into an unrelated field");
    HomogPoly r = *this;
    r.field_ = std::move(ext);
    return r;
}

HomogPoly HomogPoly::monic() const {
    for (auto c : coeffs_)
        if (c != 0) return scaled(field_->inv(c));
    return *this;
}

void HomogPoly::check_compatible(const HomogPoly& o) const {
    if (!field_->same_as(*o.field_)) throw InvalidInput("polynomials over different fields");
}

HomogPoly& HomogPoly::operator+=(const HomogPoly& o) {
    check_compatible(o);
    if (degree_ != o.degree_) throw InvalidInput("adding forms of different degree");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = field_->add(coeffs_[i], o.coeffs_[i]);
    return *this;
}

HomogPoly& HomogPoly::operator-=(const HomogPoly& o) {
    check_compatible(o);
    if (degree_ != o.degree_) throw InvalidInput("subtracting forms of different degree");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = field_->sub(coeffs_[i], o.coeffs_[i]);
    return *this;
}

HomogPoly HomogPoly::scaled(Elem c) const {
    HomogPoly r = *this;
    for (auto& x : r.coeffs_) x = field_->mul(x, c);
    return r;
}

HomogPoly HomogPoly::operator-() const {
    HomogPoly r = *this;
    for (auto& x : r.coeffs_) x = field_->neg(x);
    return r;
}

HomogPoly operator*(const HomogPoly& a, const HomogPoly& b) {
    a.check_compatible(b);
    const int d = a.degree_ + b.degree_;
    HomogPoly r(a.field_, d);
    const Field& f = *a.field_;
    auto ea = monomials::of_degree(a.degree_);
    auto eb = monomials::of_degree(b.degree_);
    for (std::size_t i = 0; i < ea.size(); ++i) {
        const Elem ca = a.coeffs_[i];
        if (ca == 0) continue;
        for (std::size_t j = 0; j < eb.size(); ++j) {
            const Elem cb = b.coeffs_[j];
            if (cb == 0) continue;
            auto idx = monomials::index(d, ea[i][0] + eb[j][0], ea[i][1] + eb[j][1]);
            r.coeffs_[idx] = f.add(r.coeffs_[idx], f.mul(ca, cb));
        }
    }
    return r;
}

bool operator==(const HomogPoly& a, const HomogPoly& b) noexcept {
    return a.degree_ == b.degree_ && a.field_->same_as(*b.field_) && a.coeffs_ == b.coeffs_;
}

HomogPoly partial(const HomogPoly& f, int axis) {
    if (axis < 0 || axis > 2) throw InvalidInput("axis must be 0, 1 or 2");
    if (f.degree() == 0) throw InvalidInput("partial derivative of a constant form");
    const Field& fld = f.f();
    HomogPoly r(f.field(), f.degree() - 1);
    auto ex = monomials::of_degree(f.degree());
    for (std::size_t i = 0; i < ex.size(); ++i) {
        const Elem c = f.coeffs()[i];
        const int e = ex[i][static_cast<std::size_t>(axis)];
        if (c == 0 || e == 0) continue;
        Exponents lowered = ex[i];
        lowered[static_cast<std::size_t>(axis)] -= 1;
        r.set_coeff(lowered, fld.mul(c, fld.from_int(e)));
    }
    return r;
}

HomogPoly substitute(const HomogPoly& f, const Mat3& t) {
    const Field& fld = f.f();
    if (det3(fld, t) == 0) throw InvalidInput("substitution matrix is singular");
    const int d = f.degree();
    // powers[i][e] = (row i of T as a linear form)^e
    std::array<std::vector<HomogPoly>, 3> powers;
    for (int i = 0; i < 3; ++i) {
        powers[i].reserve(static_cast<std::size_t>(d + 1));
        powers[i].push_back(HomogPoly::monomial(f.field(), {0, 0, 0}));
        const auto li = HomogPoly::linear(f.field(), t[i]);
        for (int e = 1; e <= d; ++e) powers[i].push_back(powers[i].back() * li);
    }
    HomogPoly r(f.field(), d);
    auto ex = monomials::of_degree(d);
    for (std::size_t i = 0; i < ex.size(); ++i) {
        const Elem c = f.coeffs()[i];
        if (c == 0) continue;
        r += (powers[0][ex[i][0]] * powers[1][ex[i][1]] * powers[2][ex[i][2]]).scaled(c);
    }
    return r;
}

Elem eval_unchecked(const HomogPoly& f, std::span<const Elem, 3> pt, const Field& target) noexcept {
    const int d = f.degree();
    std::array<std::array<Elem, monomials::kMaxDegree + 1>, 3> pw;
    for (int v = 0; v < 3; ++v) {
        pw[v][0] = 1;
        for (int e = 1; e <= d; ++e) pw[v][e] = target.mul(pw[v][e - 1], pt[v]);
    }
    auto ex = monomials::of_degree(d);
    auto cs = f.coeffs();
    Elem acc = 0;
    for (std::size_t i = 0; i < ex.size(); ++i) {
        if (cs[i] == 0) continue;
        Elem m = target.mul(pw[0][ex[i][0]], target.mul(pw[1][ex[i][1]], pw[2][ex[i][2]]));
        acc = target.add(acc, target.mul(cs[i], m));
    }
    return acc;
}

Elem eval(const HomogPoly& f, std::span<const Elem, 3> pt, const Field& target) {
    if (target.p() != f.f().p() || (f.f().k() != 1 && !target.same_as(f.f())))
        throw InvalidInput("evaluation field incompatible with polynomial field");
    if (pt[0] == 0 && pt[1] == 0 && pt[2] == 0) throw InvalidInput("cannot evaluate at the zero vector");
    for (auto c : pt)
        if (c >= target.order()) throw InvalidInput("point coordinate out of field range");
    return eval_unchecked(f, pt, target);
}

std::optional<HomogPoly> divide_by_linear(const HomogPoly& g, const HomogPoly& l) {
    if (l.degree() != 1 || l.is_zero()) throw InvalidInput("divisor must be a nonzero linear form");
    if (!g.f().same_as(l.f())) throw InvalidInput("polynomials over different fields");
    if (g.degree() == 0) {
        if (g.is_zero()) return HomogPoly(g.field(), 0);
        return std::nullopt;
    }
    const Field& f = g.f();
    int v = 0;
    while (l.coeffs()[static_cast<std::size_t>(v)] == 0) ++v;
    const Elem lead_inv = f.inv(l.coeffs()[static_cast<std::size_t>(v)]);

    HomogPoly rem = g;
    HomogPoly quot(g.field(), g.degree() - 1);
    // Eliminate monomials containing x_v, highest x_v-power first.
    for (int power = g.degree(); power >= 1; --power) {
        auto ex = monomials::of_degree(g.degree());
        for (std::size_t i = 0; i < ex.size(); ++i) {
            if (ex[i][static_cast<std::size_t>(v)] != power) continue;
            const Elem c = rem.coeffs()[i];
            if (c == 0) continue;
            Exponents qe = ex[i];
            qe[static_cast<std::size_t>(v)] -= 1;
            auto term = HomogPoly::monomial(g.field(), qe, f.mul(c, lead_inv));
            quot += term;
            rem -= term * l;
        }
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

namespace {

std::string elem_to_string(const Field& f, Elem c) {
    if (f.k() == 1) return std::to_string(c);
    auto r = f.residues(c);
    std::string s = "{";
    for (unsigned i = 0; i < f.k(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
    return s + "}";
}

}  // namespace

std::string to_string(const HomogPoly& f) {
    std::string out;
    auto ex = monomials::of_degree(f.degree());
    for (std::size_t i = 0; i < ex.size(); ++i) {
        const Elem c = f.coeffs()[i];
        if (c == 0) continue;
        std::string term;
        bool has_var = false;
        for (int v = 0; v < 3; ++v) {
            const int e = ex[i][static_cast<std::size_t>(v)];
            if (e == 0) continue;
            if (has_var) term += "*";
            term += "x" + std::to_string(v);
            if (e > 1) term += "^" + std::to_string(e);
            has_var = true;
        }
        std::string coeff = elem_to_string(f.f(), c);
        if (!has_var)
            term = coeff;
        else if (c != 1)
            term = coeff + "*" + term;
        out += out.empty() ? term : " + " + term;
    }
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const HomogPoly& f) { return os << to_string(f); }

HomogPoly parse_poly(const std::string& text, FieldPtr field, int degree) {
    HomogPoly out(field, degree);
    const Field& f = *field;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& why) -> void {
        throw ParseError("cannot parse polynomial '" + text + "' at offset " + std::to_string(pos) + ": " + why);
    };
    auto read_int = [&]() -> std::int64_t {
        skip();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected integer");
        std::int64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos++] - '0');
            if (v > (std::int64_t{1} << 40)) fail("integer too large");
        }
        return v;
    };

    skip();
    if (pos == text.size()) fail("empty input");
    bool first = true;
    while (true) {
        skip();
        if (pos == text.size()) break;
        bool negative = false;
        if (text[pos] == '+' || text[pos] == '-') {
            negative = text[pos] == '-';
            ++pos;
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;

        Elem coeff = 1;
        Exponents e{0, 0, 0};
        bool expect_factor = true;
        while (expect_factor) {
            skip();
            if (pos < text.size() && text[pos] == 'x') {
                ++pos;
                if (pos >= text.size() || text[pos] < '0' || text[pos] > '2') fail("variables are x0, x1, x2");
                const auto v = static_cast<std::size_t>(text[pos++] - '0');
                int power = 1;
                skip();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    power = static_cast<int>(read_int());
                }
                e[v] += power;
            } else {
                coeff = f.mul(coeff, f.from_int(read_int()));
            }
            skip();
            expect_factor = pos < text.size() && text[pos] == '*';
            if (expect_factor) ++pos;
        }
        const int d = e[0] + e[1] + e[2];
        if (coeff == 0) continue;
        if (d != degree) fail("term of degree " + std::to_string(d) + " in a form of degree " + std::to_string(degree));
        if (negative) coeff = f.neg(coeff);
        out.set_coeff(e, f.add(out.coeff(e), coeff));
    }
    return out;
}

}  // namespace qsheaf
