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

#include "qsheaf/check.hpp"

#include "qsheaf/errors.hpp"
#include "qsheaf/experiments.hpp"
#include "qsheaf/json_io.hpp"

namespace qsheaf {

CheckReport analyze(const Presentation& a, bool oracle) {
    CheckReport r;
    r.stratum = stratum_of(a);
    r.validity = validate(a);
    if (r.validity != Validity::ok) throw InvalidPresentation(std::string("invalid presentation: ") + to_string(r.validity));
    r.curve = determinant(a)->monic();

    const FieldTower tower(field_of(a)->p());
    r.macaulay = is_singular(a, Method::macaulay, tower);
    if (oracle) {
        r.enumeration = is_singular(a, Method::enumeration, tower);
        if (r.enumeration->singular != r.macaulay->singular)
            throw LemmaViolation("Macaulay and enumeration verdicts disagree");
    }

    std::string summary = r.macaulay->singular ? "singular" : "non-singular";
    if (r.enumeration && r.enumeration->witness) summary += "; witness " + to_string(*r.enumeration->witness);

    if (const auto* m0 = std::get_if<M0Presentation>(&a)) {
        r.common_factor = common_linear_factor(nu(*m0)).has_value();
        r.sing_meets_z = sing_curve_meets_Z(*m0);
        if (!r.common_factor) {
            const auto c = classify_boundary(*m0, tower);
            r.flag = flag_of(*m0, tower);
            r.z_non_reduced = c.kind == BoundaryClass::non_reduced;
            r.z_in_sing = c.z_in_sing;
        }
        summary += *r.sing_meets_z ? "; Z ∩ Sing C non-empty" : "; Z ∩ Sing C empty";
        if (*r.sing_meets_z != r.macaulay->singular) summary += "; boundary case";
        if (r.common_factor) summary += "; minors share a linear factor";
        else if (r.z_non_reduced) summary += "; Z non-reduced";
    }
    r.summary = summary;
    return r;
}

nlohmann::json to_json(const CheckReport& r) {
    using io::to_json;
    nlohmann::json j{{"stratum", to_string(r.stratum)}, {"validity", to_string(r.validity)}, {"summary", r.summary}};
    j["curve"] = r.curve ? to_json(*r.curve) : nlohmann::json(nullptr);
    j["singular"] = r.macaulay ? nlohmann::json(r.macaulay->singular) : nlohmann::json(nullptr);
    if (r.macaulay) j["macaulay"] = to_json(*r.macaulay);
    if (r.enumeration) j["enumeration"] = to_json(*r.enumeration);
    if (r.stratum == Stratum::m0) {
        j["common_linear_factor"] = r.common_factor;
        j["sing_meets_z"] = r.sing_meets_z ? nlohmann::json(*r.sing_meets_z) : nlohmann::json(nullptr);
        j["flag"] = r.flag ? to_json(*r.flag) : nlohmann::json(nullptr);
        j["z_non_reduced"] = r.z_non_reduced;
        nlohmann::json zs = nlohmann::json::array();
        for (const auto& o : r.z_in_sing) {
            auto pj = to_json(o.point);
            pj["degree"] = o.degree;
            zs.push_back(pj);
        }
        j["z_in_sing"] = zs;
    }
    return j;
}

}  // namespace qsheaf
