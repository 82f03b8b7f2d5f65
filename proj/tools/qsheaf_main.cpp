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

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <thread>

#include "qsheaf/check.hpp"
#include "qsheaf/errors.hpp"
#include "qsheaf/experiments.hpp"
#include "qsheaf/identities.hpp"
#include "qsheaf/json_io.hpp"

using namespace qsheaf;
using io::Json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitInvalid = 3;

struct Options {
    std::optional<std::uint32_t> p;
    unsigned k = 1;
    std::uint64_t seed = kDefaultSeed;
    std::optional<std::uint64_t> samples;
    std::vector<std::uint32_t> primes;
    std::string stratum = "m0";
    bool oracle = false;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string out;
    std::string input;
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

void emit_json(const Options& o, const Json& j) {
    if (o.out.empty()) std::cout << j.dump(2) << '\n';
    else write_file(o.out, j.dump(2) + "\n");
}

std::vector<std::uint32_t> primes_or(const Options& o, std::vector<std::uint32_t> fallback) {
    if (!o.primes.empty()) return o.primes;
    if (o.p) return {*o.p};
    return fallback;
}

int cmd_check(const Options& o) {
    Json j = io::read_json_file(o.input);
    if (o.p && j.is_object() && j.contains("field")) {
        j["field"] = Json{{"p", *o.p}, {"k", o.k}};
    }
    const auto a = io::presentation_from_json(j);
    const auto report = analyze(a, o.oracle);
    std::cout << report.summary << '\n';
    emit_json(o, to_json(report));
    return 0;
}

int cmd_fuzz_lemma(const Options& o) {
    const auto report = fuzz_lemma_m03(primes_or(o, {7, 11}), o.samples.value_or(10000), o.seed, o.jobs);
    std::cerr << "trials per prime " << report.trials << ", singular " << report.singular_count << ", disagreements "
              << report.disagreements.size() << '\n';
    emit_json(o, io::to_json(report));
    return report.disagreements.empty() ? 0 : kExitFailure;
}

int cmd_fuzz_boundary(const Options& o) {
    const auto report = fuzz_boundary(primes_or(o, {7}), o.samples.value_or(10000), o.seed, o.jobs);
    std::cerr << "disagreements " << report.disagreements.size();
    for (auto c : {BoundaryClass::non_reduced, BoundaryClass::extension_point, BoundaryClass::common_factor,
                   BoundaryClass::unclassified})
        std::cerr << ", " << to_string(c) << " " << report.count(c);
    std::cerr << (report.ok() ? "" : "; classification FAILED") << '\n';
    emit_json(o, io::to_json(report));
    return report.ok() ? 0 : kExitFailure;
}

int cmd_estimate_codim(const Options& o) {
    CodimOptions c;
    c.stratum = parse_stratum(o.stratum);
    c.primes = primes_or(o, c.primes);
    c.samples = o.samples.value_or(c.samples);
    c.seed = o.seed;
    c.jobs = o.jobs;
    const auto report = estimate_codim(c);
    std::printf("%s stratum %s, seed %llu%s\n", report.label.c_str(), to_string(report.stratum),
                static_cast<unsigned long long>(report.seed), report.escalated ? ", samples escalated x4" : "");
    for (const auto& row : report.rows)
        std::printf("  p = %2u  samples %8llu  singular %7llu  fraction %.6f +- %.6f\n", row.p,
                    static_cast<unsigned long long>(row.samples), static_cast<unsigned long long>(row.singular_count),
                    row.fraction(), row.std_error());
    if (report.fit) std::printf("  slope %.4f (expected -2), residual %.4g\n", report.fit->slope, report.fit->residual);
    else std::printf("  slope undefined: some fraction is zero\n");
    if (o.out.empty()) {
        std::cout << io::to_json(report).dump(2) << '\n';
    } else {
        write_file(o.out + ".json", io::to_json(report).dump(2) + "\n");
        write_file(o.out + ".csv", io::to_csv(report));
    }
    return 0;
}

int cmd_roundtrip(const Options& o) {
    if (o.input.empty()) {
        IdentityOptions io_opts;
        io_opts.p = o.p.value_or(11);
        io_opts.samples = o.samples.value_or(1000);
        io_opts.seed = o.seed;
        const auto c = check_round_trip(io_opts);
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
        return c.passed ? 0 : kExitFailure;
    }
    const auto flag = io::flag_from_json(io::read_json_file(o.input));
    if (flag.points.size() != 3 ||
        std::any_of(flag.points.begin(), flag.points.end(), [](const PointOrbit& pt) { return pt.degree != 1; }))
        throw InvalidInput("roundtrip needs three rational points");
    const FieldPtr& f = flag.curve.field();
    std::array<ProjPoint, 3> pts{flag.points[0].point.in_field(f), flag.points[1].point.in_field(f),
                                 flag.points[2].point.in_field(f)};
    const auto a = build_from_flag(flag.curve, pts);
    const auto back = flag_of(a);
    std::set<ProjPoint> want(pts.begin(), pts.end()), got;
    for (const auto& pt : back.points) got.insert(pt.point);
    const bool match = back.curve == flag.curve.monic() && got == want;
    std::cout << (match ? "round trip reproduces the flag" : "round trip MISMATCH") << '\n';
    emit_json(o, Json{{"presentation", io::to_json(Presentation(a))}, {"flag", io::to_json(back)}, {"match", match}});
    return match ? 0 : kExitFailure;
}

int cmd_verify(const Options& o) {
    IdentityOptions io_opts;
    io_opts.p = o.p.value_or(11);
    io_opts.samples = o.samples.value_or(1000);
    io_opts.seed = o.seed;
    bool all = true;
    Json results = Json::array();
    for (const auto& c : verify_known_identities(io_opts)) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
        all = all && c.passed;
        results.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    if (!o.out.empty()) write_file(o.out, results.dump(2) + "\n");
    return all ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Singular sheaves on plane quartics: checks and experiments over finite fields"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--p", o.p, "prime")->check(CLI::PositiveNumber);
        cmd->add_option("--k", o.k, "extension degree of the field")->check(CLI::Range(1, 3));
        cmd->add_option("--seed", o.seed, "master seed")->capture_default_str();
        cmd->add_option("--samples", o.samples, "samples or trials per prime");
        cmd->add_option("--primes", o.primes, "comma-separated primes")->delimiter(',');
        cmd->add_option("--stratum", o.stratum, "m0 or m1")->check(CLI::IsMember({"m0", "m1"}))->capture_default_str();
        cmd->add_flag("--oracle", o.oracle, "also run the enumeration oracle");
        cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
        cmd->add_option("--out", o.out, "output file (estimate-codim: prefix for .json and .csv)");
    };

    auto* check = app.add_subcommand("check", "analyze a presentation file");
    check->add_option("input", o.input, "presentation JSON")->required();
    auto* fuzz_lemma = app.add_subcommand("fuzz-lemma", "singular iff Sing C meets Z, on three rational points");
    auto* fuzz_bnd = app.add_subcommand("fuzz-boundary", "classify disagreements on unrestricted samples");
    auto* codim = app.add_subcommand("estimate-codim", "singular fraction against p and fitted slope");
    auto* roundtrip = app.add_subcommand("roundtrip", "build a presentation from a flag and read the flag back");
    roundtrip->add_option("input", o.input, "flag JSON; random flags when omitted");
    auto* verify = app.add_subcommand("verify-paper", "regression suite of known identities and examples");
    for (auto* cmd : {check, fuzz_lemma, fuzz_bnd, codim, roundtrip, verify}) add_common(cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (*check) return cmd_check(o);
        if (*fuzz_lemma) return cmd_fuzz_lemma(o);
        if (*fuzz_bnd) return cmd_fuzz_boundary(o);
        if (*codim) return cmd_estimate_codim(o);
        if (*roundtrip) return cmd_roundtrip(o);
        if (*verify) return cmd_verify(o);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const InvalidPresentation& e) {
        std::cerr << e.what() << '\n';
        return kExitInvalid;
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitFailure;
}
