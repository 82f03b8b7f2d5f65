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

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsheaf/flags.hpp"
#include "qsheaf/presentation.hpp"

namespace qsheaf {

/// Everything `qsheaf check` reports about one presentation.
struct CheckReport {
    Stratum stratum = Stratum::m0;
    Validity validity = Validity::ok;
    bool stable = true;  ///< linear part stable (M0 only)
    std::optional<HomogPoly> curve;  ///< canonical determinant
    std::optional<SingularityVerdict> macaulay;
    std::optional<SingularityVerdict> enumeration;
    bool common_factor = false;  ///< M0 linear part in V_l
    std::optional<Flag> flag;  ///< M0 off V_l
    bool z_non_reduced = false;
    std::optional<bool> sing_meets_z;  ///< M0 only
    std::vector<PointOrbit> z_in_sing;  ///< orbits of Z on which all partials vanish
    std::string summary;
};

/// Throws InvalidPresentation when validation fails. With `oracle` the
/// enumeration verdict is computed too and must agree with Macaulay.
CheckReport analyze(const Presentation& a, bool oracle = false);

nlohmann::json to_json(const CheckReport& r);

}  // namespace qsheaf
