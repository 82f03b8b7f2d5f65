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

#include "qsheaf/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "qsheaf/errors.hpp"

namespace qsheaf::io {

namespace {

const Json& member(const Json& j, const char* key) {
    if (!j.is_object()) throw ParseError(std::string("expected an object with key '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing key '") + key + "'");
    return *it;
}

template <class T>
T get_as(const Json& j, const char* what) {
    try {
        return j.get<T>();
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad ") + what + ": " + e.what());
    }
}

std::uint32_t get_uint(const Json& j, const char* what) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0 || j.get<std::int64_t>() > 0xffffffffLL)
        throw ParseError(std::string("expected a non-negative integer for ") + what);
    return j.get<std::uint32_t>();
}

FieldPtr field_of_json(const Json& j) {
    FieldSpec spec;
    spec.p = get_uint(member(j, "p"), "p");
    spec.k = j.contains("k") ? get_uint(j["k"], "k") : 1;
    if (j.contains("modulus")) spec.modulus = get_as<std::vector<std::uint32_t>>(j["modulus"], "modulus");
    try {
        return spec.modulus.empty() && spec.k > 1 ? Field::make(spec.p, spec.k) : Field::make(spec);
    } catch (const InvalidInput& e) {
        throw ParseError(std::string("bad field: ") + e.what());
    }
}

double json_number(double x) { return std::isfinite(x) ? x : 0.0; }

Json fit_json(const std::optional<LinearFit>& fit) {
    if (!fit) return nullptr;
    return {{"slope", json_number(fit->slope)},
            {"intercept", json_number(fit->intercept)},
            {"residual", json_number(fit->residual)}};
}

Json orbit_json(const PointOrbit& o) {
    Json j = to_json(o.point);
    j["degree"] = o.degree;
    return j;
}

}  // namespace

Json to_json(const FieldSpec& spec) {
    Json j{{"p", spec.p}, {"k", spec.k}};
    if (!spec.modulus.empty()) j["modulus"] = spec.modulus;
    return j;
}

FieldSpec field_spec_from_json(const Json& j) { return field_of_json(j)->spec(); }

Json elem_to_json(const Field& f, Elem e) {
    if (f.k() == 1) return e;
    const auto r = f.residues(e);
    return Json(std::vector<std::uint32_t>(r.begin(), r.begin() + f.k()));
}

Elem elem_from_json(const Field& f, const Json& j) {
    if (j.is_number_integer()) {
        const auto v = j.get<std::int64_t>();
        return f.from_int(v);
    }
    if (j.is_array()) {
        auto r = get_as<std::vector<std::uint32_t>>(j, "field element");
        if (r.size() > f.k()) throw ParseError("field element has too many residues");
        for (auto& c : r)
            if (c >= f.p()) throw ParseError("residue out of range");
        r.resize(f.k(), 0);
        return f.from_residues(r);
    }
    throw ParseError("field element must be an integer or a residue array");
}

Json to_json(const HomogPoly& g) {
    Json coeffs = Json::array();
    for (auto c : g.coeffs()) coeffs.push_back(elem_to_json(g.f(), c));
    Json j{{"p", g.f().p()}, {"k", g.f().k()}, {"degree", g.degree()}, {"coeffs", coeffs}, {"text", to_string(g)}};
    if (g.f().k() > 1) j["modulus"] = g.f().spec().modulus;
    return j;
}

HomogPoly poly_from_json(const Json& j, const FieldPtr& field, int degree) {
    if (j.is_string()) return parse_poly(j.get<std::string>(), field, degree);
    if (!j.is_object()) throw ParseError("polynomial must be a string or an object");
    if (j.contains("p") && get_uint(j["p"], "p") != field->p()) throw ParseError("polynomial over a different prime");
    const int d = static_cast<int>(get_uint(member(j, "degree"), "degree"));
    if (d != degree)
        throw InvalidPresentation("expected a form of degree " + std::to_string(degree) + ", got " + std::to_string(d));
    const Json& cs = member(j, "coeffs");
    if (!cs.is_array() || cs.size() != monomials::count(d))
        throw ParseError("expected " + std::to_string(monomials::count(d)) + " coefficients");
    std::vector<Elem> c;
    for (const auto& e : cs) c.push_back(elem_from_json(*field, e));
    return HomogPoly(field, d, std::move(c));
}

HomogPoly poly_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("a standalone polynomial must be an object with p and degree");
    const int d = static_cast<int>(get_uint(member(j, "degree"), "degree"));
    if (d > monomials::kMaxDegree) throw ParseError("degree too large");
    return poly_from_json(j, field_of_json(j), d);
}

Json to_json(const ProjPoint& pt) {
    Json coords = Json::array();
    for (auto c : pt.coords()) coords.push_back(elem_to_json(*pt.field(), c));
    return {{"p", pt.field()->p()}, {"k", pt.field()->k()}, {"coords", coords}};
}

ProjPoint point_from_json(const Json& j) {
    const auto f = field_of_json(j);
    const Json& cs = member(j, "coords");
    if (!cs.is_array() || cs.size() != 3) throw ParseError("a point has three coordinates");
    std::array<Elem, 3> c{};
    for (std::size_t i = 0; i < 3; ++i) c[i] = elem_from_json(*f, cs[i]);
    try {
        return ProjPoint(f, c);
    } catch (const InvalidInput& e) {
        throw ParseError(std::string("bad point: ") + e.what());
    }
}

Json to_json(const Flag& flag) {
    Json pts = Json::array();
    for (const auto& o : flag.points) pts.push_back(orbit_json(o));
    return {{"curve", to_json(flag.curve)}, {"points", pts}};
}

Flag flag_from_json(const Json& j) {
    Flag flag{poly_from_json(member(j, "curve")), {}};
    const Json& pts = member(j, "points");
    if (!pts.is_array()) throw ParseError("points must be an array");
    for (const auto& pj : pts) {
        const int degree = pj.contains("degree") ? static_cast<int>(get_uint(pj["degree"], "degree")) : 1;
        flag.points.push_back({point_from_json(pj), degree});
    }
    return flag;
}

Json to_json(const Presentation& a) {
    Json rows = Json::array();
    std::visit(
        [&](const auto& m) {
            for (const auto& row : m.entries()) {
                Json r = Json::array();
                for (const auto& e : row) r.push_back(to_json(e));
                rows.push_back(r);
            }
        },
        a);
    return {{"shape", to_string(stratum_of(a))}, {"field", to_json(field_of(a)->spec())}, {"entries", rows}};
}

Presentation presentation_from_json(const Json& j) {
    const auto shape = get_as<std::string>(member(j, "shape"), "shape");
    const auto f = field_of_json(member(j, "field"));
    const Json& rows = member(j, "entries");
    Stratum stratum;
    try {
        stratum = parse_stratum(shape);
    } catch (const InvalidInput& e) {
        throw ParseError(e.what());
    }
    const std::size_t nrows = stratum == Stratum::m0 ? 3 : 2, ncols = nrows;
    if (!rows.is_array() || rows.size() != nrows)
        throw InvalidPresentation("shape " + shape + " needs " + std::to_string(nrows) + " rows");
    for (const auto& r : rows)
        if (!r.is_array() || r.size() != ncols)
            throw InvalidPresentation("shape " + shape + " needs " + std::to_string(ncols) + " columns");
    auto degree = [&](std::size_t r, std::size_t c) {
        if (stratum == Stratum::m0) return c == 2 ? 2 : 1;
        return r == 0 ? 1 : 3;
    };
    try {
        auto at = [&](std::size_t r, std::size_t c) { return poly_from_json(rows[r][c], f, degree(r, c)); };
        if (stratum == Stratum::m0)
            return M0Presentation({{{at(0, 0), at(0, 1), at(0, 2)}, {at(1, 0), at(1, 1), at(1, 2)},
                                    {at(2, 0), at(2, 1), at(2, 2)}}});
        return M1Presentation({{{at(0, 0), at(0, 1)}, {at(1, 0), at(1, 1)}}});
    } catch (const ParseError&) {
        throw;
    } catch (const InvalidPresentation&) {
        throw;
    } catch (const InvalidInput& e) {
        throw InvalidPresentation(e.what());
    }
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

Json to_json(const SingularityVerdict& v) {
    Json j{{"singular", v.singular}, {"method", to_string(v.method)}};
    j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
    return j;
}

Json to_json(const ExperimentReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"p", row.p},
                        {"samples", row.samples},
                        {"singular_count", row.singular_count},
                        {"fraction", row.fraction()},
                        {"std_error", row.std_error()},
                        {"rejections", row.rejections}});
    return {{"label", r.label},
            {"stratum", to_string(r.stratum)},
            {"rows", rows},
            {"fit", fit_json(r.fit)},
            {"expected_slope", -2},
            {"seed", r.seed},
            {"requested_samples", r.requested_samples},
            {"escalated", r.escalated},
            {"wall_seconds", r.wall_seconds},
            {"version", r.version}};
}

std::string to_csv(const ExperimentReport& r) {
    std::ostringstream out;
    out << "p,samples,singular_count,fraction\n";
    out.precision(10);
    for (const auto& row : r.rows)
        out << row.p << ',' << row.samples << ',' << row.singular_count << ',' << row.fraction() << '\n';
    return out.str();
}

Json to_json(const LemmaTrial& t) {
    return {{"p", t.p},
            {"trial", t.trial},
            {"singular", t.singular},
            {"sing_meets_z", t.sing_meets_z},
            {"presentation", to_json(Presentation(t.presentation))}};
}

Json to_json(const FuzzLemmaReport& r) {
    Json d = Json::array();
    for (const auto& t : r.disagreements) d.push_back(to_json(t));
    return {{"seed", r.seed},          {"primes", r.primes},          {"trials_per_prime", r.trials},
            {"singular_count", r.singular_count}, {"disagreements", d}, {"version", kVersion}};
}

Json to_json(const BoundaryCase& c) {
    Json z = Json::array(), zs = Json::array();
    for (const auto& o : c.z) z.push_back(orbit_json(o));
    for (const auto& o : c.z_in_sing) zs.push_back(orbit_json(o));
    Json j = to_json(c.trial);
    j["class"] = to_string(c.kind);
    j["z"] = z;
    j["z_in_sing"] = zs;
    return j;
}

Json to_json(const FuzzBoundaryReport& r) {
    Json d = Json::array(), fx = Json::array(), counts = Json::object();
    for (const auto& c : r.disagreements) d.push_back(to_json(c));
    for (const auto& c : r.fixtures) fx.push_back(to_json(c));
    for (auto k : {BoundaryClass::non_reduced, BoundaryClass::extension_point, BoundaryClass::common_factor,
                   BoundaryClass::unclassified})
        counts[to_string(k)] = r.count(k);
    return {{"seed", r.seed},
            {"primes", r.primes},
            {"trials_per_prime", r.trials},
            {"three_rational_trials", r.three_rational_trials},
            {"class_counts", counts},
            {"ok", r.ok()},
            {"fixtures", fx},
            {"disagreements", d},
            {"version", kVersion}};
}

Json to_json(const std::vector<DimensionRow>& table) {
    Json rows = Json::array();
    for (const auto& r : table) rows.push_back({{"quantity", r.quantity}, {"value", r.value}, {"derivation", r.derivation}});
    return rows;
}

}  // namespace qsheaf::io
