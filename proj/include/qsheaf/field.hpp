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

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace qsheaf {

/// Encoded element of F_{p^k}: the residues (c0, c1, c2) of c0 + c1 t + c2 t^2
/// packed as c0 + c1 p + c2 p^2. Elements of the prime field keep the same
/// code in every extension, so F_p embeds into F_{p^k} without conversion.
using Elem = std::uint32_t;

/// Parameters of a finite field F_{p^k}.
///
/// `modulus` holds (c0, ..., c_{k-1}) of the monic irreducible
/// t^k + c_{k-1} t^{k-1} + ... + c0; it is empty when k = 1.
struct FieldSpec {
    std::uint32_t p = 0;
    unsigned k = 1;
    std::vector<std::uint32_t> modulus;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

/// Smallest monic irreducible of degree k over F_p, ordered by the packed code
/// c0 + c1 p + ... + c_{k-1} p^{k-1}. Irreducibility for k <= 3 is "no roots".
std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned k);

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Arithmetic in F_{p^k}, p >= 5 prime, k in {1, 2, 3}.
///
/// Immutable after construction. Multiplication in small extensions
/// (q <= 2^16) goes through exp/log tables; everything else is computed
/// directly.
class Field {
  public:
    static FieldPtr make(std::uint32_t p, unsigned k = 1);
    static FieldPtr make(const FieldSpec& spec);

    const FieldSpec& spec() const noexcept { return spec_; }
    std::uint32_t p() const noexcept { return spec_.p; }
    unsigned k() const noexcept { return spec_.k; }
    std::uint64_t order() const noexcept { return order_; }

    bool same_as(const Field& other) const noexcept {
        return this == &other || (spec_.p == other.spec_.p && spec_.k == other.spec_.k);
    }

    Elem from_int(std::int64_t v) const noexcept;
    bool in_prime_field(Elem a) const noexcept { return a < spec_.p; }

    Elem add(Elem a, Elem b) const noexcept {
        if (spec_.k == 1) {
            Elem s = a + b;
            return s >= spec_.p ? s - spec_.p : s;
        }
        return add_ext(a, b);
    }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem neg(Elem a) const noexcept {
        if (spec_.k == 1) return a == 0 ? 0 : spec_.p - a;
        return neg_ext(a);
    }
    Elem mul(Elem a, Elem b) const noexcept {
        if (spec_.k == 1)
            return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % spec_.p);
        if (a == 0 || b == 0) return 0;
        if (!log_.empty()) return exp_[log_[a] + log_[b]];
        return mul_poly(a, b);
    }
    /// Throws InvalidInput on a == 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const noexcept;
    Elem frobenius(Elem a) const noexcept { return pow(a, spec_.p); }

    /// A square root when one exists in this field.
    std::optional<Elem> sqrt(Elem a) const;

    std::array<std::uint32_t, 3> residues(Elem a) const noexcept;
    Elem from_residues(std::span<const std::uint32_t> r) const;

  private:
    explicit Field(FieldSpec spec);

    Elem add_ext(Elem a, Elem b) const noexcept;
    Elem neg_ext(Elem a) const noexcept;
    Elem mul_poly(Elem a, Elem b) const noexcept;
    void build_tables();

    FieldSpec spec_;
    std::uint64_t order_ = 0;
    std::vector<Elem> exp_;          // length 2(q-1), doubled to skip a reduction
    std::vector<std::uint32_t> log_; // log_[0] unused
    Elem non_residue_ = 0;
};

/// F_p, F_{p^2}, F_{p^3} sharing the same p; built once per worker.
struct FieldTower {
    explicit FieldTower(std::uint32_t p);
    const FieldPtr& level(unsigned k) const { return levels.at(k - 1); }
    std::array<FieldPtr, 3> levels;
};

}  // namespace qsheaf
