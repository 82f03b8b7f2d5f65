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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>

#include "qsheaf/check.hpp"
#include "qsheaf/examples.hpp"
#include "qsheaf/experiments.hpp"
#include "qsheaf/identities.hpp"
#include "qsheaf/json_io.hpp"
#include "test_support.hpp"

using namespace qsheaf;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

Outcome codim_slopes() {
    std::ostringstream d;
    bool ok = true;
    for (Stratum s : {Stratum::m0, Stratum::m1}) {
        CodimOptions o;
        o.stratum = s;
        o.jobs = jobs();
        const auto r = estimate_codim(o);
        const bool in = r.fit && r.fit->slope >= -2.5 && r.fit->slope <= -1.5;
        ok = ok && in;
        d << to_string(s) << " slope ";
        if (r.fit) d << r.fit->slope;
        else d << "undefined";
        d << (r.escalated ? " (escalated)" : "") << "; ";
    }
    return {ok, d.str()};
}

Outcome oracle_agreement() {
    constexpr int kRandom = 1000;
    constexpr int kPlanted = 200;
    std::ostringstream d;
    bool ok = true;
    for (std::uint32_t p : {5u, 7u}) {
        auto f = Field::make(p);
        FieldTower tower(p);
        Rng rng(derive_seed(kDefaultSeed, p));
        for (Stratum s : {Stratum::m0, Stratum::m1}) {
            int total = 0, singular = 0, disagree = 0;
            for (int t = 0; t < kRandom + kPlanted; ++t) {
                Presentation a = t < kRandom ? sample_presentation(s, f, rng).presentation
                                 : s == Stratum::m0 ? Presentation(testing::planted_singular_m0(rng, f))
                                                    : Presentation(testing::planted_singular_m1(rng, f));
                const auto mac = is_singular(a, Method::macaulay, tower);
                const auto en = is_singular(a, Method::enumeration, tower);
                ++total;
                singular += mac.singular;
                disagree += mac.singular != en.singular;
            }
            ok = ok && disagree == 0;
            d << "p=" << p << " " << to_string(s) << ": " << total - disagree << "/" << total << " agree ("
              << singular << " singular); ";
        }
    }
    return {ok, d.str()};
}

Outcome lemma_fuzz() {
    const auto r = fuzz_lemma_m03({7, 11}, 10000, kDefaultSeed, jobs());
    std::ostringstream d;
    d << r.trials << " trials per prime at p = 7, 11; " << r.singular_count << " singular; " << r.disagreements.size()
      << " disagreements";
    return {r.disagreements.empty(), d.str()};
}

Outcome boundary_fixture() {
    const auto a = io::presentation_from_json(io::read_json_file(std::string(QSHEAF_FIXTURE_DIR) + "/boundary_example.json"));
    const auto r = analyze(a, true);
    const auto f = Field::make(7);
    const ProjPoint target(f, {0, 1, 0});
    const bool non_singular = r.macaulay && !r.macaulay->singular && r.enumeration && !r.enumeration->singular;
    const bool curve = r.curve == examples::boundary_curve(f).monic();
    const bool contains = std::any_of(r.z_in_sing.begin(), r.z_in_sing.end(),
                                      [&](const PointOrbit& o) { return o.point == target; });
    return {non_singular && curve && contains, r.summary};
}

Outcome from_check(const IdentityCheck& c) { return {c.passed, c.name + ": " + c.detail}; }

Outcome standard_form_identities() {
    IdentityOptions o;
    o.p = 7;
    o.samples = 1000;
    const auto a = check_standard_determinant(o);
    const auto b = check_partials(o);
    const auto c = check_zero_sets(o);
    return {a.passed && b.passed && c.passed, a.detail + "; " + b.detail + "; " + c.detail};
}

IdentityOptions at_eleven() {
    IdentityOptions o;
    o.p = 11;
    o.samples = 1000;
    return o;
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"codimension slope for m0 and m1 in [-2.5, -1.5]", codim_slopes},
        {"Macaulay and enumeration verdicts agree at p = 5, 7", oracle_agreement},
        {"singular iff Sing C meets Z on 10^4 trials at p = 7, 11", lemma_fuzz},
        {"boundary fixture: non-singular, curve x1(x2^3 + x0^2x1), <0,1,0> in Z and Sing C", boundary_fixture},
        {"standard form determinant, partials and zero sets at p = 7", standard_form_identities},
        {"same_orbit_test certificates reconstruct B", [] { return from_check(check_same_orbit(at_eleven())); }},
        {"twist family keeps det and the syzygy holds", [] { return from_check(check_twist_family(at_eleven())); }},
        {"flag round trip at p = 11", [] { return from_check(check_round_trip(at_eleven())); }},
        {"dimension table 17, 15, 2", [] { return from_check(check_dimensions()); }},
    };
    int failures = 0, index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %d: %s [%.1fs]\n    %s\n", out.passed ? "PASS" : "FAIL", index, name, secs,
                    out.detail.c_str());
        std::fflush(stdout);
        failures += !out.passed;
    }
    std::printf("%d/%d criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}
