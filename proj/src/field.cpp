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

#include "qsheaf/field.hpp"

#include <string>

#include "qsheaf/errors.hpp"

namespace qsheaf {

namespace {

constexpr std::uint64_t kTableLimit = 1u << 16;

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

bool has_root(std::uint32_t p, const std::vector<std::uint32_t>& low, unsigned k) {
    // Evaluates t^k + low[k-1] t^{k-1} + ... + low[0] at every t in F_p.
    for (std::uint64_t t = 0; t < p; ++t) {
        std::uint64_t v = 1;
        for (unsigned i = k; i-- > 0;) v = (v * t + low[i]) % p;
        if (v == 0) return true;
    }
    return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned k) {
    if (k == 1) return {};
    const std::uint64_t count = ipow(p, k);
    std::vector<std::uint32_t> c(k);
    for (std::uint64_t code = 0; code < count; ++code) {
        std::uint64_t rest = code;
        for (unsigned i = 0; i < k; ++i) {
            c[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        if (!has_root(p, c, k)) return c;
    }
    throw InvalidInput("no irreducible polynomial found");  // unreachable for k <= 3
}

FieldPtr Field::make(std::uint32_t p, unsigned k) {
    if (!is_prime(p) || p < 5) throw InvalidInput("field characteristic must be a prime >= 5, got " + std::to_string(p));
    if (k < 1 || k > 3) throw InvalidInput("extension degree must be 1, 2 or 3");
    if (ipow(p, k) >= (std::uint64_t{1} << 32)) throw InvalidInput("field too large for 32-bit element codes");
    return FieldPtr(new Field(FieldSpec{p, k, default_modulus(p, k)}));
}

FieldPtr Field::make(const FieldSpec& spec) {
    auto f = make(spec.p, spec.k);
    if (!spec.modulus.empty() && spec.modulus != f->spec().modulus) {
        if (spec.modulus.size() != spec.k) throw InvalidInput("modulus length does not match extension degree");
        for (auto c : spec.modulus)
            if (c >= spec.p) throw InvalidInput("modulus coefficient out of range");
        if (has_root(spec.p, spec.modulus, spec.k)) throw InvalidInput("modulus polynomial is reducible");
        return FieldPtr(new Field(spec));
    }
    return f;
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)), order_(ipow(spec_.p, spec_.k)) {
    if (spec_.k > 1 && order_ <= kTableLimit) build_tables();
    // Quadratic non-residue for Tonelli-Shanks.
    for (Elem z = 2; z < order_; ++z) {
        if (pow(z, (order_ - 1) / 2) != 1) {
            non_residue_ = z;
            break;
        }
    }
}

void Field::build_tables() {
    const auto q1 = static_cast<std::uint32_t>(order_ - 1);
    exp_.assign(2 * static_cast<std::size_t>(q1), 0);
    log_.assign(order_, 0);
    for (Elem g = 2; g < order_; ++g) {
        Elem x = 1;
        std::uint32_t i = 0;
        bool primitive = true;
        for (; i < q1; ++i) {
            if (i > 0 && x == 1) {
                primitive = false;
                break;
            }
            exp_[i] = x;
            x = mul_poly(x, g);
        }
        if (primitive && x == 1) break;
    }
    for (std::uint32_t i = 0; i < q1; ++i) {
        exp_[i + q1] = exp_[i];
        log_[exp_[i]] = i;
    }
}

Elem Field::from_int(std::int64_t v) const noexcept {
    auto p = static_cast<std::int64_t>(spec_.p);
    auto r = v % p;
    if (r < 0) r += p;
    return static_cast<Elem>(r);
}

std::array<std::uint32_t, 3> Field::residues(Elem a) const noexcept {
    std::array<std::uint32_t, 3> r{0, 0, 0};
    for (unsigned i = 0; i < spec_.k; ++i) {
        r[i] = a % spec_.p;
        a /= spec_.p;
    }
    return r;
}

Elem Field::from_residues(std::span<const std::uint32_t> r) const {
    if (r.size() != spec_.k) throw InvalidInput("wrong number of residues for field element");
    Elem code = 0;
    for (unsigned i = spec_.k; i-- > 0;) {
        if (r[i] >= spec_.p) throw InvalidInput("residue out of range");
        code = code * spec_.p + r[i];
    }
    return code;
}

Elem Field::add_ext(Elem a, Elem b) const noexcept {
    Elem out = 0, scale = 1;
    for (unsigned i = 0; i < spec_.k; ++i) {
        Elem s = a % spec_.p + b % spec_.p;
        if (s >= spec_.p) s -= spec_.p;
        out += s * scale;
        scale *= spec_.p;
        a /= spec_.p;
        b /= spec_.p;
    }
    return out;
}

Elem Field::neg_ext(Elem a) const noexcept {
    Elem out = 0, scale = 1;
    for (unsigned i = 0; i < spec_.k; ++i) {
        Elem d = a % spec_.p;
        out += (d == 0 ? 0 : spec_.p - d) * scale;
        scale *= spec_.p;
        a /= spec_.p;
    }
    return out;
}

Elem Field::mul_poly(Elem a, Elem b) const noexcept {
    const std::uint64_t p = spec_.p;
    const unsigned k = spec_.k;
    auto ra = residues(a), rb = residues(b);
    std::array<std::uint64_t, 5> prod{};
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{ra[i]} * rb[j]) % p;
    // t^k = -(c0 + c1 t + ... + c_{k-1} t^{k-1})
    for (unsigned d = 2 * k - 2; d >= k; --d) {
        const std::uint64_t c = prod[d];
        prod[d] = 0;
        if (c == 0) continue;
        for (unsigned j = 0; j < k; ++j) prod[d - k + j] = (prod[d - k + j] + (p - c) * spec_.modulus[j]) % p;
    }
    Elem code = 0;
    for (unsigned i = k; i-- > 0;) code = code * spec_.p + static_cast<Elem>(prod[i]);
    return code;
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw InvalidInput("division by zero in finite field");
    if (!log_.empty()) return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
    return pow(a, order_ - 2);
}

std::optional<Elem> Field::sqrt(Elem a) const {
    if (a == 0) return Elem{0};
    if (pow(a, (order_ - 1) / 2) != 1) return std::nullopt;
    // Tonelli-Shanks with q - 1 = 2^s * t, t odd.
    std::uint64_t t = order_ - 1;
    unsigned s = 0;
    while ((t & 1) == 0) {
        t >>= 1;
        ++s;
    }
    Elem z = pow(non_residue_, t);
    Elem x = pow(a, (t + 1) / 2);
    Elem b = pow(a, t);
    unsigned m = s;
    while (b != 1) {
        unsigned i = 0;
        Elem bb = b;
        while (bb != 1) {
            bb = mul(bb, bb);
            ++i;
        }
        Elem w = z;
        for (unsigned j = 0; j + i + 1 < m; ++j) w = mul(w, w);
        x = mul(x, w);
        z = mul(w, w);
        b = mul(b, z);
        m = i;
    }
    return x;
}

FieldTower::FieldTower(std::uint32_t p) : levels{Field::make(p, 1), Field::make(p, 2), Field::make(p, 3)} {}

}  // namespace qsheaf
