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

#include "qsheaf/plane.hpp"

#include "qsheaf/errors.hpp"

namespace qsheaf {

ProjPoint::ProjPoint(FieldPtr field, std::array<Elem, 3> coords) : field_(std::move(field)), coords_(coords) {
    const Field& f = *field_;
    std::size_t lead = 0;
    while (lead < 3 && coords_[lead] == 0) ++lead;
    if (lead == 3) throw InvalidInput("projective point with all coordinates zero");
    for (auto c : coords_)
        if (c >= f.order()) throw InvalidInput("point coordinate out of field range");
    const Elem inv = f.inv(coords_[lead]);
    for (auto& c : coords_) c = f.mul(c, inv);
}

bool ProjPoint::is_rational() const noexcept {
    for (auto c : coords_)
        if (!field_->in_prime_field(c)) return false;
    return true;
}

int ProjPoint::residue_degree() const noexcept {
    if (is_rational()) return 1;
    // Only the prime field sits strictly inside F_{p^2} or F_{p^3}.
    return static_cast<int>(field_->k());
}

ProjPoint ProjPoint::frobenius() const {
    const Field& f = *field_;
    return ProjPoint(field_, {f.frobenius(coords_[0]), f.frobenius(coords_[1]), f.frobenius(coords_[2])});
}

ProjPoint ProjPoint::in_field(FieldPtr ext) const {
    if (ext->p() != field_->p()) throw InvalidInput("point moved to a field of different characteristic");
    if (!is_rational() && !ext->same_as(*field_)) throw InvalidInput("point is not defined over the target field");
    return ProjPoint(std::move(ext), coords_);
}

std::string to_string(const ProjPoint& pt) {
    const Field& f = *pt.field();
    std::string s = "<";
    for (int i = 0; i < 3; ++i) {
        if (i) s += ", ";
        if (f.k() == 1 || f.in_prime_field(pt.coords()[i])) {
            s += std::to_string(pt.coords()[i]);
        } else {
            auto r = f.residues(pt.coords()[i]);
            s += "{";
            for (unsigned j = 0; j < f.k(); ++j) s += (j ? "," : "") + std::to_string(r[j]);
            s += "}";
        }
    }
    return s + ">";
}

std::uint64_t plane_size(const Field& f) noexcept {
    const std::uint64_t q = f.order();
    return q * q + q + 1;
}

void check_plane_budget(const Field& f, std::uint64_t budget) {
    if (plane_size(f) > budget)
        throw BudgetExceeded("P^2 over F_" + std::to_string(f.p()) + "^" + std::to_string(f.k()) + " has " +
                             std::to_string(plane_size(f)) + " points, budget is " + std::to_string(budget));
}

std::vector<ProjPoint> enumerate_plane(const FieldPtr& field, std::uint64_t budget) {
    check_plane_budget(*field, budget);
    std::vector<ProjPoint> out;
    out.reserve(plane_size(*field));
    for_each_point(*field, [&](const std::array<Elem, 3>& c) {
        out.emplace_back(field, c);
        return true;
    });
    return out;
}

ProjTransform::ProjTransform(FieldPtr field, const Mat3& m)
    : field_(std::move(field)), m_(m), inv_(inverse3(*field_, m)) {}

ProjPoint ProjTransform::apply(const ProjPoint& pt) const {
    if (pt.field()->p() != field_->p()) throw InvalidInput("transform and point over different fields");
    return ProjPoint(pt.field(), apply3(*pt.field(), m_, pt.coords()));
}

namespace {

Mat3 columns_of(std::span<const ProjPoint, 3> pts) {
    Mat3 m{};
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) m[i][j] = pts[j].coords()[i];
    return m;
}

}  // namespace

bool collinear(std::span<const ProjPoint, 3> pts) {
    const FieldPtr& f = pts[0].field();
    for (const auto& pt : pts)
        if (pt.field()->p() != f->p()) throw InvalidInput("points over different fields");
    // Use the largest field among the inputs so extension coordinates survive.
    const Field* big = f.get();
    for (const auto& pt : pts)
        if (pt.field()->k() > big->k()) big = pt.field().get();
    return det3(*big, columns_of(pts)) == 0;
}

ProjTransform transform_to_standard(std::span<const ProjPoint, 3> pts) {
    for (const auto& pt : pts)
        if (!pt.is_rational()) throw InvalidInput("standardization needs F_p-rational points");
    if (pts[0] == pts[1] || pts[0] == pts[2] || pts[1] == pts[2]) throw InvalidInput("repeated point");
    if (collinear(pts)) throw InvalidInput("collinear points");
    FieldPtr base = pts[0].field()->k() == 1 ? pts[0].field() : Field::make(pts[0].field()->p(), 1);
    return ProjTransform(std::move(base), columns_of(pts));
}

}  // namespace qsheaf
