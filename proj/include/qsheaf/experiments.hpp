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

#include <cstdint>
#include <string>
#include <vector>

#include "qsheaf/flags.hpp"
#include "qsheaf/presentation.hpp"

namespace qsheaf {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Singular counts for one prime; adding rows is associative and commutative.
struct CountRow {
    std::uint32_t p = 0;
    std::uint64_t samples = 0;
    std::uint64_t singular_count = 0;
    std::uint64_t rejections = 0;

    double fraction() const noexcept;
    /// Binomial standard error of the fraction.
    double std_error() const noexcept;

    CountRow& operator+=(const CountRow& o);
    friend bool operator==(const CountRow&, const CountRow&) = default;
};

struct LinearFit {
    double slope = 0, intercept = 0;
    double residual = 0;  ///< sum of squared residuals
};

/// Ordinary least squares of y on x. Throws InvalidInput on fewer than two points.
LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y);

struct ExperimentReport {
    Stratum stratum = Stratum::m0;
    std::vector<CountRow> rows;
    /// Fit of ln(fraction) against ln(p); unset when some fraction is zero.
    std::optional<LinearFit> fit;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t requested_samples = 0;
    bool escalated = false;
    double wall_seconds = 0;
    std::string version = kVersion;
    std::string label = "heuristic reproduction";
};

struct CodimOptions {
    Stratum stratum = Stratum::m0;
    std::vector<std::uint32_t> primes{5, 7, 11, 13, 17};
    std::uint64_t samples = 200000;
    std::uint64_t seed = kDefaultSeed;
    unsigned jobs = 1;
    std::uint64_t chunk_size = 5000;
    /// Rerun with four times the samples when the largest prime sees fewer
    /// singular hits than this; 0 disables.
    std::uint64_t escalate_below = 300;
};

/// Seed of chunk `chunk` for prime `p`.
std::uint64_t chunk_seed(std::uint64_t seed, std::uint32_t p, std::uint64_t chunk);

/// Counts over chunks [first, last) of `chunk_size` samples each (the chunk
/// straddling `total` is truncated), so that a run splits into
/// independently computable pieces.
CountRow count_chunks(Stratum stratum, std::uint32_t p, std::uint64_t seed, std::uint64_t chunk_size,
                      std::uint64_t total, std::uint64_t first, std::uint64_t last, unsigned jobs = 1);

/// Singular fraction per prime and the fitted exponent. Throws InvalidInput
/// on fewer than three primes, repeated primes, primes below 5, or fewer
/// than 10^4 samples.
ExperimentReport estimate_codim(const CodimOptions& opts);

/// Quartic through the given rational points, uniform over the nonzero
/// forms of that linear system.
HomogPoly sample_form_through(const FieldPtr& f, int degree, std::span<const ProjPoint> pts, Rng& rng);

/// Three distinct non-collinear rational points.
std::array<ProjPoint, 3> sample_triangle(const FieldPtr& f, Rng& rng);

struct LemmaTrial {
    std::uint32_t p = 0;
    std::uint64_t trial = 0;
    M0Presentation presentation;
    bool singular = false;
    bool sing_meets_z = false;
};

struct FuzzLemmaReport {
    std::uint64_t seed = kDefaultSeed;
    std::vector<std::uint32_t> primes;
    std::uint64_t trials = 0;
    std::uint64_t singular_count = 0;
    std::vector<LemmaTrial> disagreements;
};

/// Presentations with three rational Z-points built from random flags; odd
/// trials force the quartic to be singular at one of the points. Compares
/// is_singular with sing_curve_meets_Z. Throws InvalidInput for fewer than
/// 10^3 trials.
FuzzLemmaReport fuzz_lemma_m03(const std::vector<std::uint32_t>& primes, std::uint64_t trials,
                               std::uint64_t seed = kDefaultSeed, unsigned jobs = 1);

/// The single trial `trial` of fuzz_lemma_m03 at prime p.
LemmaTrial lemma_trial(std::uint32_t p, std::uint64_t seed, std::uint64_t trial);

enum class BoundaryClass { non_reduced, extension_point, common_factor, unclassified };

const char* to_string(BoundaryClass c) noexcept;

struct BoundaryCase {
    LemmaTrial trial;
    BoundaryClass kind = BoundaryClass::unclassified;
    /// Orbits of Z (empty over V_l, where Z is not finite).
    std::vector<PointOrbit> z;
    /// Orbits of Z where all partials of det vanish.
    std::vector<PointOrbit> z_in_sing;
};

struct FuzzBoundaryReport {
    std::uint64_t seed = kDefaultSeed;
    std::vector<std::uint32_t> primes;
    std::uint64_t trials = 0;
    std::uint64_t three_rational_trials = 0;
    std::vector<BoundaryCase> disagreements;
    /// The boundary example run through the same classifier at each prime.
    std::vector<BoundaryCase> fixtures;

    std::uint64_t count(BoundaryClass c) const noexcept;
    /// No unclassified disagreement, and every fixture classified non-reduced.
    bool ok() const noexcept;
};

/// Classifies a presentation on which the two predicates may disagree.
BoundaryCase classify_boundary(const M0Presentation& a, const FieldTower& tower);

/// Unrestricted M0 samples; every disagreement between is_singular and
/// sing_curve_meets_Z is classified by the structure of Z.
FuzzBoundaryReport fuzz_boundary(const std::vector<std::uint32_t>& primes, std::uint64_t trials,
                                 std::uint64_t seed = kDefaultSeed, unsigned jobs = 1);

struct DimensionRow {
    std::string quantity;
    int value = 0;
    std::string derivation;
};

/// Parameter counts: coefficients of X, group dimension, dim M, dim of the
/// singular locus and its codimension.
std::vector<DimensionRow> dimension_bookkeeping();

}  // namespace qsheaf
