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
#include <optional>
#include <string>
#include <variant>

#include "qsheaf/plane.hpp"
#include "qsheaf/poly.hpp"
#include "qsheaf/rng.hpp"

namespace qsheaf {

enum class Stratum { m0, m1 };

const char* to_string(Stratum s) noexcept;
/// Accepts "m0" / "m1"; throws InvalidInput otherwise.
Stratum parse_stratum(const std::string& s);

/// 3x2 matrix of linear forms: a (3; 2, 3)-Kronecker module.
class KroneckerModule {
  public:
    using Entries = std::array<std::array<HomogPoly, 2>, 3>;

    /// Throws InvalidInput unless all entries are linear over one field.
    explicit KroneckerModule(Entries entries);

    const HomogPoly& at(int row, int col) const { return entries_.at(row).at(col); }
    const Entries& entries() const noexcept { return entries_; }
    const FieldPtr& field() const noexcept { return entries_[0][0].field(); }

    /// The 2x2 minors for row pairs (0,1), (0,2), (1,2), each
    /// m(i,j) = a[i][0] a[j][1] - a[i][1] a[j][0].
    std::array<HomogPoly, 3> minors() const;

    /// Signed cofactors d = (m(1,2), -m(0,2), m(0,1)), so that for a
    /// presentation with third column q, det = d0 q0 + d1 q1 + d2 q2.
    /// For (x0 x0; x1 0; 0 x2) this is (x1x2, -x0x2, -x0x1).
    std::array<HomogPoly, 3> cofactors() const;

    friend bool operator==(const KroneckerModule&, const KroneckerModule&) = default;

  private:
    Entries entries_;
};

/// Stability: the three quadric minors are linearly independent.
bool is_stable(const KroneckerModule& alpha);

KroneckerModule substitute(const KroneckerModule& alpha, const Mat3& t);

/// Open-stratum presentation: columns 0-1 linear, column 2 quadratic.
class M0Presentation {
  public:
    using Entries = std::array<std::array<HomogPoly, 3>, 3>;

    /// Checks the degree shape only; validity is `validate`.
    explicit M0Presentation(Entries entries);
    M0Presentation(const KroneckerModule& alpha, std::array<HomogPoly, 3> q_column);

    const HomogPoly& at(int row, int col) const { return entries_.at(row).at(col); }
    const Entries& entries() const noexcept { return entries_; }
    const FieldPtr& field() const noexcept { return entries_[0][0].field(); }
    KroneckerModule linear_part() const;
    std::array<HomogPoly, 3> quadric_column() const;

    friend bool operator==(const M0Presentation&, const M0Presentation&) = default;

  private:
    Entries entries_;
};

/// Closed-stratum presentation (z1 z2; q1 q2): linear row over cubic row.
class M1Presentation {
  public:
    using Entries = std::array<std::array<HomogPoly, 2>, 2>;

    explicit M1Presentation(Entries entries);

    const HomogPoly& at(int row, int col) const { return entries_.at(row).at(col); }
    const Entries& entries() const noexcept { return entries_; }
    const FieldPtr& field() const noexcept { return entries_[0][0].field(); }

    friend bool operator==(const M1Presentation&, const M1Presentation&) = default;

  private:
    Entries entries_;
};

using Presentation = std::variant<M0Presentation, M1Presentation>;

Stratum stratum_of(const Presentation& a) noexcept;
const FieldPtr& field_of(const Presentation& a) noexcept;

enum class Validity { ok, unstable, dependent_linear_forms, zero_determinant };

const char* to_string(Validity v) noexcept;

Validity validate(const M0Presentation& a);
Validity validate(const M1Presentation& a);
Validity validate(const Presentation& a);

/// Throws InvalidPresentation unless validate(a) == ok.
void require_valid(const Presentation& a);

/// All nine 2x2 minors, row pairs (0,1), (0,2), (1,2) outer, column pairs
/// in the same order inner. Entries 0, 3, 6 are the quadric minors of the
/// linear part; the other six are cubics.
std::array<HomogPoly, 9> minors2x2(const M0Presentation& a);

/// Exact determinant (degree 4); nullopt when it vanishes identically.
std::optional<HomogPoly> determinant(const M0Presentation& a);
std::optional<HomogPoly> determinant(const M1Presentation& a);
std::optional<HomogPoly> determinant(const Presentation& a);

/// Rank of the scalar matrix of entry values at `pt`.
int rank_at_point(const Presentation& a, const ProjPoint& pt);

/// Rank of a small scalar matrix given row-major.
int scalar_rank(const Field& f, std::span<Elem> values, int rows, int cols);

enum class Method {
    macaulay,       ///< emptiness of the minors ideal via the Macaulay matrix
    enumeration,    ///< rank-drop search over P^2(F_{p^k}), k = 1..3
    support_point,  ///< M1 only: the point Z(z1, z2) checked against q1, q2
};

const char* to_string(Method m) noexcept;

struct SingularityVerdict {
    bool singular = false;
    /// A point where the rank drops to n - 2 or less (enumeration only).
    std::optional<ProjPoint> witness;
    Method method = Method::macaulay;
};

/// Decides whether the cokernel sheaf is singular (not locally free on its
/// support). Throws InvalidPresentation on invalid input, BudgetExceeded
/// when enumeration would exceed `budget` points per level.
SingularityVerdict is_singular(const Presentation& a, Method method = Method::macaulay,
                               std::uint64_t budget = kDefaultPlaneBudget);

/// Same, reusing a prebuilt extension tower for the enumeration method.
SingularityVerdict is_singular(const Presentation& a, Method method, const FieldTower& tower,
                               std::uint64_t budget = kDefaultPlaneBudget);

/// Common zero of z1 and z2 for an M1 presentation (rational by construction).
ProjPoint support_point(const M1Presentation& a);

/// Entrywise coordinate change x |-> T x.
M0Presentation substitute(const M0Presentation& a, const Mat3& t);
M1Presentation substitute(const M1Presentation& a, const Mat3& t);
Presentation substitute(const Presentation& a, const Mat3& t);

/// Element of the structure group acting on M0 presentations by A |-> R A C:
/// R an invertible constant 3x3 on rows; C = (g 0; 0 c) on columns with
/// g in GL2 acting on the linear columns, c a nonzero scalar, plus the
/// unipotent part adding a * column0 + b * column1 to column 2.
struct M0GroupElement {
    Mat3 rows;
    std::array<std::array<Elem, 2>, 2> linear_cols;
    Elem q_scale;
    HomogPoly a, b;  ///< linear forms
};

M0Presentation act(const M0GroupElement& g, const M0Presentation& a);

/// Group acting on M1 presentations: row scalars s0, s1, row1 += h * row0
/// with h a quadric, and an invertible constant 2x2 on columns.
struct M1GroupElement {
    Elem row0_scale, row1_scale;
    HomogPoly h;  ///< quadric
    std::array<std::array<Elem, 2>, 2> cols;
};

M1Presentation act(const M1GroupElement& g, const M1Presentation& a);

struct SampledPresentation {
    Presentation presentation;
    std::uint64_t rejections = 0;
};

/// Uniform coefficients over F_p, redrawn until `validate` passes. Throws
/// BudgetExceeded after `max_rejections` consecutive failures.
SampledPresentation sample_presentation(Stratum stratum, const FieldPtr& field, Rng& rng,
                                        std::uint64_t max_rejections = 100000);

}  // namespace qsheaf
