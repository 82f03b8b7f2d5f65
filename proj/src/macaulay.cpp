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

#include "qsheaf/macaulay.hpp"

#include <algorithm>
#include <vector>

#include "qsheaf/errors.hpp"

namespace qsheaf {

namespace {

// Incremental row echelon basis; each stored row has a leading 1 at its pivot.
class Echelon {
  public:
    explicit Echelon(std::size_t cols) : cols_(cols), pivot_row_(cols, kNone) {}

    std::size_t rank() const noexcept { return rank_; }

    // Reduces `row` against the basis and keeps it if independent.
    template <class Ops>
    void insert(const Ops& ops, std::vector<Elem>& row) {
        for (std::size_t c = 0; c < cols_; ++c) {
            const Elem lead = row[c];
            if (lead == 0) continue;
            const std::size_t pr = pivot_row_[c];
            if (pr == kNone) {
                const Elem inv = ops.inv(lead);
                for (std::size_t j = c; j < cols_; ++j) row[j] = ops.mul(row[j], inv);
                pivot_row_[c] = storage_.size() / cols_;
                storage_.insert(storage_.end(), row.begin(), row.end());
                ++rank_;
                return;
            }
            ops.axpy(row, c, lead, &storage_[pr * cols_], cols_);
        }
    }

  private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::size_t cols_;
    std::size_t rank_ = 0;
    std::vector<std::size_t> pivot_row_;
    std::vector<Elem> storage_;
};

// Prime-field fast path: plain modular integers.
struct PrimeOps {
    std::uint64_t p;
    const Field& f;
    Elem mul(Elem a, Elem b) const noexcept { return static_cast<Elem>(std::uint64_t{a} * b % p); }
    Elem inv(Elem a) const { return f.inv(a); }
    // row[j] -= lead * piv[j] for j >= c
    void axpy(std::vector<Elem>& row, std::size_t c, Elem lead, const Elem* piv, std::size_t n) const noexcept {
        const std::uint64_t m = p - lead;
        for (std::size_t j = c; j < n; ++j)
            if (piv[j] != 0) row[j] = static_cast<Elem>((row[j] + m * piv[j]) % p);
    }
};

struct ExtOps {
    const Field& f;
    Elem mul(Elem a, Elem b) const noexcept { return f.mul(a, b); }
    Elem inv(Elem a) const { return f.inv(a); }
    void axpy(std::vector<Elem>& row, std::size_t c, Elem lead, const Elem* piv, std::size_t n) const noexcept {
        for (std::size_t j = c; j < n; ++j)
            if (piv[j] != 0) row[j] = f.sub(row[j], f.mul(lead, piv[j]));
    }
};

template <class Ops>
MacaulayRank reduce_all(const Ops& ops, const std::vector<const HomogPoly*>& gens, int n_deg, bool stop_at_full) {
    MacaulayRank out;
    out.degree = n_deg;
    out.cols = monomials::count(n_deg);
    Echelon ech(out.cols);
    std::vector<Elem> row(out.cols);
    for (const HomogPoly* g : gens) {
        const int shift = n_deg - g->degree();
        auto gexp = monomials::of_degree(g->degree());
        auto gco = g->coeffs();
        for (const auto& m : monomials::of_degree(shift)) {
            std::fill(row.begin(), row.end(), 0);
            for (std::size_t i = 0; i < gexp.size(); ++i)
                if (gco[i] != 0) row[monomials::index(n_deg, gexp[i][0] + m[0], gexp[i][1] + m[1])] = gco[i];
            ech.insert(ops, row);
            ++out.rows;
            if (stop_at_full && ech.rank() == out.cols) {
                out.rank = ech.rank();
                return out;
            }
        }
    }
    out.rank = ech.rank();
    return out;
}

std::vector<const HomogPoly*> nonzero_generators(std::span<const HomogPoly> gens) {
    if (gens.empty()) throw InvalidInput("empty generator list");
    std::vector<const HomogPoly*> nz;
    for (const auto& g : gens) {
        if (!g.f().same_as(gens.front().f())) throw InvalidInput("generators over different fields");
        if (!g.is_zero()) nz.push_back(&g);
    }
    if (nz.empty()) throw InvalidInput("all generators are zero");
    return nz;
}

int degree_bound(const std::vector<const HomogPoly*>& nz) {
    std::vector<int> degs;
    for (auto* g : nz) degs.push_back(g->degree());
    std::sort(degs.begin(), degs.end(), std::greater<>());
    if (degs.size() < 3 || degs[2] == 0) throw InvalidInput("Macaulay bound needs three nonconstant generators");
    const int n = (degs[0] - 1) + (degs[1] - 1) + (degs[2] - 1) + 1;
    if (n > monomials::kMaxDegree) throw InvalidInput("Macaulay degree exceeds supported range");
    return n;
}

}  // namespace

int macaulay_degree(std::span<const HomogPoly> gens) { return degree_bound(nonzero_generators(gens)); }

MacaulayRank macaulay_rank(std::span<const HomogPoly> gens, bool stop_at_full) {
    auto nz = nonzero_generators(gens);
    const int n = degree_bound(nz);
    const Field& f = gens.front().f();
    if (f.k() == 1) return reduce_all(PrimeOps{f.p(), f}, nz, n, stop_at_full);
    return reduce_all(ExtOps{f}, nz, n, stop_at_full);
}

bool is_projectively_empty(std::span<const HomogPoly> gens) {
    auto nz = nonzero_generators(gens);
    for (auto* g : nz)
        if (g->degree() == 0) return true;
    if (nz.size() < 3) return false;
    auto r = macaulay_rank(gens, true);
    return r.rank == r.cols;
}

}  // namespace qsheaf
