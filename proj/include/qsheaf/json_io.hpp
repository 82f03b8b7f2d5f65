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

#include <string>
#include <vector>

#include <json.hpp>

#include "qsheaf/experiments.hpp"
#include "qsheaf/flags.hpp"
#include "qsheaf/presentation.hpp"

namespace qsheaf::io {

using Json = nlohmann::json;

// Schema errors throw ParseError; a well-formed presentation with the wrong
// degree shape throws InvalidPresentation.

Json to_json(const FieldSpec& spec);
FieldSpec field_spec_from_json(const Json& j);

/// Prime-field elements are integers; extension elements are residue arrays
/// (c0, c1, ...) in the basis 1, t, t^2 of the field's modulus.
Json elem_to_json(const Field& f, Elem e);
Elem elem_from_json(const Field& f, const Json& j);

/// {"p", "k", "degree", "coeffs"} with coefficients in graded monomial order,
/// plus a readable "text" that is ignored on input.
Json to_json(const HomogPoly& g);
/// Accepts the object form or a string such as "3*x0^2*x1 - x2^3".
HomogPoly poly_from_json(const Json& j, const FieldPtr& field, int degree);
HomogPoly poly_from_json(const Json& j);

/// {"p", "k", "coords"}.
Json to_json(const ProjPoint& pt);
ProjPoint point_from_json(const Json& j);

/// {"curve": polynomial, "points": [{"p", "k", "coords", "degree"}]}.
Json to_json(const Flag& flag);
Flag flag_from_json(const Json& j);

/// {"shape": "m0" | "m1", "field": {"p", "k"}, "entries": rows of polynomials}.
Json to_json(const Presentation& a);
Presentation presentation_from_json(const Json& j);

/// Parses text as JSON; syntax errors throw ParseError.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

Json to_json(const SingularityVerdict& v);
Json to_json(const ExperimentReport& r);
/// One row per prime: p, samples, singular_count, fraction.
std::string to_csv(const ExperimentReport& r);
Json to_json(const LemmaTrial& t);
Json to_json(const FuzzLemmaReport& r);
Json to_json(const BoundaryCase& c);
Json to_json(const FuzzBoundaryReport& r);
Json to_json(const std::vector<DimensionRow>& table);

}  // namespace qsheaf::io
