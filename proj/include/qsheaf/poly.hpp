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
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qsheaf/field.hpp"

namespace qsheaf {

/// Exponents (e0, e1, e2) of x0^e0 x1^e1 x2^e2.
using Exponents = std::array<int, 3>;

/// Monomials of degree d in graded-lex order, descending on (e0, e1):
/// x0^d, x0^{d-1} x1, x0^{d-1} x2, x0^{d-2} x1^2, ...
namespace monomials {

constexpr int kMaxDegree = 16;

constexpr std::size_t count(int d) noexcept { return static_cast<std::size_t>((d + 1) * (d + 2) / 2); }

constexpr std::size_t index(int d, int e0, int e1) noexcept {
    const int a = d - e0;
    return static_cast<std::size_t>(a * (a + 1) / 2 + (a - e1));
}

/// Table of exponents for degree d (d <= kMaxDegree).
std::span<const Exponents> of_degree(int d);

}  // namespace monomials

/// 3x3 matrix over a field, used for coordinate changes.
using Mat3 = std::array<std::array<Elem, 3>, 3>;

Mat3 identity3() noexcept;
Mat3 mat_mul(const Field& f, const Mat3& a, const Mat3& b) noexcept;
Elem det3(const Field& f, const Mat3& m) noexcept;
/// Throws InvalidInput when m is singular.
Mat3 inverse3(const Field& f, const Mat3& m);
std::array<Elem, 3> apply3(const Field& f, const Mat3& m, std::span<const Elem, 3> v) noexcept;

/// Dense homogeneous form in x0, x1, x2 of fixed degree.
class HomogPoly {
  public:
    HomogPoly(FieldPtr field, int degree);
    HomogPoly(FieldPtr field, int degree, std::vector<Elem> coeffs);

    static HomogPoly monomial(FieldPtr field, Exponents e, Elem c = 1);
    static HomogPoly variable(FieldPtr field, int axis);
    /// The linear form c0 x0 + c1 x1 + c2 x2.
    static HomogPoly linear(FieldPtr field, std::array<Elem, 3> c);

    int degree() const noexcept { return degree_; }
    const FieldPtr& field() const noexcept { return field_; }
    const Field& f() const noexcept { return *field_; }
    std::span<const Elem> coeffs() const noexcept { return coeffs_; }
    Elem coeff(Exponents e) const noexcept { return coeffs_[monomials::index(degree_, e[0], e[1])]; }
    void set_coeff(Exponents e, Elem c) { coeffs_.at(monomials::index(degree_, e[0], e[1])) = c; }
    bool is_zero() const noexcept;

    /// The same form viewed over an extension with the same characteristic.
    HomogPoly lifted(FieldPtr ext) const;

    /// Scaled so that the first nonzero coefficient is 1 (zero stays zero).
    HomogPoly monic() const;

    HomogPoly& operator+=(const HomogPoly& o);
    HomogPoly& operator-=(const HomogPoly& o);
    HomogPoly scaled(Elem c) const;
    HomogPoly operator-() const;

    friend HomogPoly operator+(HomogPoly a, const HomogPoly& b) { return a += b; }
    friend HomogPoly operator-(HomogPoly a, const HomogPoly& b) { return a -= b; }
    friend HomogPoly operator*(const HomogPoly& a, const HomogPoly& b);
    friend bool operator==(const HomogPoly& a, const HomogPoly& b) noexcept;

  private:
    void check_compatible(const HomogPoly& o) const;

    FieldPtr field_;
    int degree_;
    std::vector<Elem> coeffs_;
};

/// Formal partial derivative in x_axis. Throws on degree 0.
HomogPoly partial(const HomogPoly& f, int axis);

/// f o T, i.e. x |-> f(T x). With this convention
/// substitute(substitute(f, T1), T2) == substitute(f, T1 * T2).
/// T must be invertible and have entries in the field of f.
HomogPoly substitute(const HomogPoly& f, const Mat3& t);

/// Value of f at a coordinate vector over `target`, which must be f's field
/// or an extension of f's prime field. Throws on the zero vector.
Elem eval(const HomogPoly& f, std::span<const Elem, 3> pt, const Field& target);

/// Evaluation without the zero-vector check, for hot loops.
Elem eval_unchecked(const HomogPoly& f, std::span<const Elem, 3> pt, const Field& target) noexcept;

/// Exact division by a nonzero linear form; nullopt when it does not divide.
std::optional<HomogPoly> divide_by_linear(const HomogPoly& g, const HomogPoly& l);

std::string to_string(const HomogPoly& f);
std::ostream& operator<<(std::ostream& os, const HomogPoly& f);

/// Parses "3*x0^2*x1 - x2^3 + ..." as a form of the given degree.
/// Throws InvalidInput on syntax errors or inhomogeneous terms.
HomogPoly parse_poly(const std::string& text, FieldPtr field, int degree);

}  // namespace qsheaf
