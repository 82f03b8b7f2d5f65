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
#include <span>
#include <utility>
#include <string>
#include <vector>

#include "qsheaf/field.hpp"
#include "qsheaf/poly.hpp"

namespace qsheaf {

/// Point of P^2 over F_{p^k}, normalized so that its first nonzero
/// coordinate is 1. Points over different levels of the same tower compare
/// by coordinates, so a rational point equals its image in any extension.
class ProjPoint {
  public:
    ProjPoint(FieldPtr field, std::array<Elem, 3> coords);

    const std::array<Elem, 3>& coords() const noexcept { return coords_; }
    const FieldPtr& field() const noexcept { return field_; }
    bool is_rational() const noexcept;
    /// Degree of the smallest field of definition inside the tower.
    int residue_degree() const noexcept;
    ProjPoint frobenius() const;
    ProjPoint in_field(FieldPtr ext) const;

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) noexcept {
        return a.field_->p() == b.field_->p() && a.coords_ == b.coords_;
    }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) noexcept { return a.coords_ < b.coords_; }

  private:
    FieldPtr field_;
    std::array<Elem, 3> coords_;
};

std::string to_string(const ProjPoint& pt);

constexpr std::uint64_t kDefaultPlaneBudget = std::uint64_t{1} << 24;

/// q^2 + q + 1 for q = |field|.
std::uint64_t plane_size(const Field& f) noexcept;

/// Calls fn(coords) for every normalized point in the fixed order
/// (1, a, b), (0, 1, b), (0, 0, 1) with a, b ascending; stops when fn returns false.
template <class Fn>
void for_each_point(const Field& f, Fn&& fn) {
    const auto q = static_cast<Elem>(f.order());
    std::array<Elem, 3> c{1, 0, 0};
    for (Elem a = 0; a < q; ++a)
        for (Elem b = 0; b < q; ++b) {
            c = {1, a, b};
            if (!fn(std::as_const(c))) return;
        }
    for (Elem b = 0; b < q; ++b) {
        c = {0, 1, b};
        if (!fn(std::as_const(c))) return;
    }
    c = {0, 0, 1};
    fn(std::as_const(c));
}

/// All points of P^2(F_{p^k}). Throws BudgetExceeded when the point count
/// exceeds `budget`.
std::vector<ProjPoint> enumerate_plane(const FieldPtr& field, std::uint64_t budget = kDefaultPlaneBudget);

/// Throws BudgetExceeded if P^2 over `f` has more than `budget` points.
void check_plane_budget(const Field& f, std::uint64_t budget);

/// Invertible coordinate change of P^2 over F_p with cached inverse.
class ProjTransform {
  public:
    ProjTransform(FieldPtr field, const Mat3& m);

    const Mat3& matrix() const noexcept { return m_; }
    const Mat3& inverse_matrix() const noexcept { return inv_; }
    const FieldPtr& field() const noexcept { return field_; }
    ProjTransform inverse() const { return ProjTransform(field_, inv_); }
    ProjPoint apply(const ProjPoint& pt) const;

  private:
    FieldPtr field_;
    Mat3 m_, inv_;
};

/// True iff the 3x3 coordinate determinant vanishes.
bool collinear(std::span<const ProjPoint, 3> pts);

/// T with T e_i = pts[i] (columns are the normalized representatives).
/// Then substitute(f, T) vanishes at the standard points whenever f
/// vanishes at pts. Throws on repeated, collinear or non-rational points.
ProjTransform transform_to_standard(std::span<const ProjPoint, 3> pts);

}  // namespace qsheaf
