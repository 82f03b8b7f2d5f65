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

#include "qsheaf/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "qsheaf/errors.hpp"
#include "qsheaf/examples.hpp"
#include "qsheaf/linalg.hpp"

namespace qsheaf {

namespace {

constexpr std::uint64_t kLemmaStream = 1;
constexpr std::uint64_t kBoundaryStream = 2;

/// Runs fn(i) for i in [0, n) on up to `jobs` threads. The first exception
/// is rethrown after all workers stop.
template <class Fn>
void parallel_for(std::uint64_t n, unsigned jobs, Fn&& fn) {
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::uint64_t>(n, 256))));
    if (jobs <= 1) {
        for (std::uint64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w)
        pool.emplace_back([&] {
            for (std::uint64_t i; !failed && (i = next++) < n;) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    failed = true;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

void check_primes(const std::vector<std::uint32_t>& primes, std::size_t min_count) {
    if (primes.size() < min_count)
        throw InvalidInput("need at least " + std::to_string(min_count) + " primes");
    std::set<std::uint32_t> seen;
    for (auto p : primes) {
        if (p < 5 || !is_prime(p)) throw InvalidInput("not a prime >= 5: " + std::to_string(p));
        if (!seen.insert(p).second) throw InvalidInput("repeated prime " + std::to_string(p));
    }
}

CountRow count_one_chunk(Stratum stratum, const FieldPtr& f, std::uint64_t seed, std::uint64_t chunk_size,
                         std::uint64_t total, std::uint64_t chunk) {
    CountRow row{f->p(), 0, 0, 0};
    const std::uint64_t begin = chunk * chunk_size;
    if (begin >= total) return row;
    const std::uint64_t end = std::min(total, begin + chunk_size);
    Rng rng(chunk_seed(seed, f->p(), chunk));
    for (std::uint64_t i = begin; i < end; ++i) {
        auto s = sample_presentation(stratum, f, rng);
        row.samples += 1;
        row.rejections += s.rejections;
        row.singular_count += is_singular(s.presentation).singular ? 1 : 0;
    }
    return row;
}

std::uint64_t chunks_for(std::uint64_t total, std::uint64_t chunk_size) { return (total + chunk_size - 1) / chunk_size; }

std::vector<CountRow> run_codim(const CodimOptions& opts, std::uint64_t samples) {
    const std::uint64_t per_prime = chunks_for(samples, opts.chunk_size);
    std::vector<FieldPtr> fields;
    for (auto p : opts.primes) fields.push_back(Field::make(p));
    std::vector<CountRow> parts(per_prime * fields.size());
    parallel_for(parts.size(), opts.jobs, [&](std::uint64_t i) {
        parts[i] = count_one_chunk(opts.stratum, fields[i / per_prime], opts.seed, opts.chunk_size, samples,
                                   i % per_prime);
    });
    std::vector<CountRow> rows;
    for (std::size_t j = 0; j < fields.size(); ++j) {
        CountRow row{fields[j]->p(), 0, 0, 0};
        for (std::uint64_t c = 0; c < per_prime; ++c) row += parts[j * per_prime + c];
        rows.push_back(row);
    }
    return rows;
}

/// Quartic through e0, e1, e2 singular at e0.
HomogPoly singular_quartic_at_e0(const FieldPtr& f, Rng& rng) {
    for (;;) {
        std::vector<Elem> c(monomials::count(4));
        for (auto& x : c) x = static_cast<Elem>(rng.below(f->p()));
        HomogPoly g(f, 4, std::move(c));
        for (const Exponents& e : {Exponents{4, 0, 0}, Exponents{3, 1, 0}, Exponents{3, 0, 1}, Exponents{0, 4, 0},
                                   Exponents{0, 0, 4}})
            g.set_coeff(e, 0);
        if (!g.is_zero()) return g;
    }
}

}  // namespace

double CountRow::fraction() const noexcept {
    return samples == 0 ? 0.0 : static_cast<double>(singular_count) / static_cast<double>(samples);
}

double CountRow::std_error() const noexcept {
    if (samples == 0) return 0.0;
    const double f = fraction();
    return std::sqrt(f * (1 - f) / static_cast<double>(samples));
}

CountRow& CountRow::operator+=(const CountRow& o) {
    if (p != o.p) throw InvalidInput("cannot merge counts for different primes");
    samples += o.samples;
    singular_count += o.singular_count;
    rejections += o.rejections;
    return *this;
}

LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw InvalidInput("least squares needs two or more points");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0) throw InvalidInput("least squares needs distinct abscissae");
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (fit.intercept + fit.slope * x[i]);
        fit.residual += r * r;
    }
    return fit;
}

std::uint64_t chunk_seed(std::uint64_t seed, std::uint32_t p, std::uint64_t chunk) {
    return derive_seed(derive_seed(seed, p), chunk);
}

CountRow count_chunks(Stratum stratum, std::uint32_t p, std::uint64_t seed, std::uint64_t chunk_size,
                      std::uint64_t total, std::uint64_t first, std::uint64_t last, unsigned jobs) {
    if (chunk_size == 0) throw InvalidInput("chunk size must be positive");
    const auto f = Field::make(p);
    std::vector<CountRow> parts(last > first ? last - first : 0);
    parallel_for(parts.size(), jobs, [&](std::uint64_t i) {
        parts[i] = count_one_chunk(stratum, f, seed, chunk_size, total, first + i);
    });
    CountRow row{p, 0, 0, 0};
    for (const auto& part : parts) row += part;
    return row;
}

ExperimentReport estimate_codim(const CodimOptions& opts) {
    check_primes(opts.primes, 3);
    if (opts.samples < 10000) throw InvalidInput("estimate_codim needs at least 10^4 samples per prime");
    if (opts.chunk_size == 0) throw InvalidInput("chunk size must be positive");
    const auto start = std::chrono::steady_clock::now();

    ExperimentReport report;
    report.stratum = opts.stratum;
    report.seed = opts.seed;
    report.requested_samples = opts.samples;
    report.rows = run_codim(opts, opts.samples);

    const auto largest = std::max_element(report.rows.begin(), report.rows.end(),
                                          [](const CountRow& a, const CountRow& b) { return a.p < b.p; });
    if (opts.escalate_below > 0 && largest->singular_count < opts.escalate_below) {
        report.rows = run_codim(opts, opts.samples * 4);
        report.escalated = true;
    }

    std::vector<double> x, y;
    for (const auto& row : report.rows) {
        if (row.singular_count == 0) break;
        x.push_back(std::log(static_cast<double>(row.p)));
        y.push_back(std::log(row.fraction()));
    }
    if (x.size() == report.rows.size()) report.fit = least_squares(x, y);
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

HomogPoly sample_form_through(const FieldPtr& f, int degree, std::span<const ProjPoint> pts, Rng& rng) {
    const auto mons = monomials::of_degree(degree);
    DenseMatrix ev(pts.size(), mons.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < mons.size(); ++j)
            ev.at(i, j) = eval(HomogPoly::monomial(f, mons[j]), pts[i].coords(), *f);
    const auto basis = kernel_basis(*f, ev);
    if (basis.empty()) throw InvalidInput("no nonzero form of this degree through the points");
    for (;;) {
        std::vector<Elem> c(mons.size(), 0);
        for (const auto& v : basis) {
            const auto s = static_cast<Elem>(rng.below(f->p()));
            for (std::size_t j = 0; j < c.size(); ++j) c[j] = f->add(c[j], f->mul(s, v[j]));
        }
        HomogPoly g(f, degree, std::move(c));
        if (!g.is_zero()) return g;
    }
}

std::array<ProjPoint, 3> sample_triangle(const FieldPtr& f, Rng& rng) {
    auto point = [&] {
        for (;;) {
            std::array<Elem, 3> c{};
            for (auto& x : c) x = static_cast<Elem>(rng.below(f->p()));
            if (c != std::array<Elem, 3>{}) return ProjPoint(f, c);
        }
    };
    for (;;) {
        std::array<ProjPoint, 3> pts{point(), point(), point()};
        if (!collinear(pts)) return pts;
    }
}

LemmaTrial lemma_trial(std::uint32_t p, std::uint64_t seed, std::uint64_t trial) {
    const auto f = Field::make(p);
    Rng rng(chunk_seed(derive_seed(seed, kLemmaStream), p, trial));
    const auto tri = sample_triangle(f, rng);
    HomogPoly quartic(f, 4);
    if (trial % 2 == 1) {
        const auto t = transform_to_standard(tri);
        quartic = substitute(singular_quartic_at_e0(f, rng), t.inverse_matrix());
    } else {
        quartic = sample_form_through(f, 4, tri, rng);
    }
    auto a = build_from_flag(quartic, tri);
    const bool s = is_singular(Presentation(a)).singular;
    const bool m = sing_curve_meets_Z(a);
    return LemmaTrial{p, trial, std::move(a), s, m};
}

FuzzLemmaReport fuzz_lemma_m03(const std::vector<std::uint32_t>& primes, std::uint64_t trials, std::uint64_t seed,
                               unsigned jobs) {
    check_primes(primes, 1);
    if (trials < 1000) throw InvalidInput("fuzz_lemma_m03 needs at least 10^3 trials");
    FuzzLemmaReport report;
    report.seed = seed;
    report.primes = primes;
    report.trials = trials;
    for (auto p : primes) {
        std::vector<std::optional<LemmaTrial>> results(trials);
        parallel_for(trials, jobs, [&](std::uint64_t i) { results[i] = lemma_trial(p, seed, i); });
        for (auto& r : results) {
            report.singular_count += r->singular ? 1 : 0;
            if (r->singular != r->sing_meets_z) report.disagreements.push_back(std::move(*r));
        }
    }
    return report;
}

const char* to_string(BoundaryClass c) noexcept {
    switch (c) {
        case BoundaryClass::non_reduced: return "non_reduced";
        case BoundaryClass::extension_point: return "extension_point";
        case BoundaryClass::common_factor: return "common_factor";
        case BoundaryClass::unclassified: return "unclassified";
    }
    return "?";
}

BoundaryCase classify_boundary(const M0Presentation& a, const FieldTower& tower) {
    LemmaTrial trial{a.field()->p(), 0, a, is_singular(Presentation(a)).singular, sing_curve_meets_Z(a)};
    BoundaryCase out{std::move(trial), BoundaryClass::unclassified, {}, {}};
    if (common_linear_factor(nu(a))) {
        out.kind = BoundaryClass::common_factor;
        return out;
    }
    const auto zs = h_points(nu(a), tower);
    out.z = zs.orbits;
    const HomogPoly det = *determinant(a);
    const std::array<HomogPoly, 3> grad{partial(det, 0), partial(det, 1), partial(det, 2)};
    for (const auto& o : zs.orbits) {
        const auto& pt = o.point;
        if (std::all_of(grad.begin(), grad.end(),
                        [&](const HomogPoly& g) { return eval(g, pt.coords(), *pt.field()) == 0; }))
            out.z_in_sing.push_back(o);
    }
    if (zs.non_reduced) out.kind = BoundaryClass::non_reduced;
    else if (std::any_of(out.z_in_sing.begin(), out.z_in_sing.end(), [](const PointOrbit& o) { return o.degree > 1; }))
        out.kind = BoundaryClass::extension_point;
    return out;
}

std::uint64_t FuzzBoundaryReport::count(BoundaryClass c) const noexcept {
    return static_cast<std::uint64_t>(
        std::count_if(disagreements.begin(), disagreements.end(), [c](const BoundaryCase& b) { return b.kind == c; }));
}

bool FuzzBoundaryReport::ok() const noexcept {
    return count(BoundaryClass::unclassified) == 0 &&
           std::all_of(fixtures.begin(), fixtures.end(), [](const BoundaryCase& b) {
               return b.kind == BoundaryClass::non_reduced && !b.trial.singular && b.trial.sing_meets_z;
           });
}

FuzzBoundaryReport fuzz_boundary(const std::vector<std::uint32_t>& primes, std::uint64_t trials, std::uint64_t seed,
                                 unsigned jobs) {
    check_primes(primes, 1);
    if (trials < 1000) throw InvalidInput("fuzz_boundary needs at least 10^3 trials");
    FuzzBoundaryReport report;
    report.seed = seed;
    report.primes = primes;
    report.trials = trials;
    for (auto p : primes) {
        const auto f = Field::make(p);
        const FieldTower tower(p);
        report.fixtures.push_back(classify_boundary(examples::boundary_example(f), tower));

        struct Outcome {
            std::optional<BoundaryCase> disagreement;
            bool three_rational = false;
        };
        std::vector<Outcome> results(trials);
        parallel_for(trials, jobs, [&](std::uint64_t i) {
            Rng rng(chunk_seed(derive_seed(seed, kBoundaryStream), p, i));
            const auto a = std::get<M0Presentation>(sample_presentation(Stratum::m0, f, rng).presentation);
            const bool s = is_singular(Presentation(a)).singular;
            const bool m = sing_curve_meets_Z(a);
            auto& out = results[i];
            if (!common_linear_factor(nu(a))) out.three_rational = h_points(nu(a), tower).three_rational_points();
            if (s != m) {
                out.disagreement = classify_boundary(a, tower);
                out.disagreement->trial.trial = i;
            }
        });
        for (auto& r : results) {
            report.three_rational_trials += r.three_rational ? 1 : 0;
            if (r.disagreement) report.disagreements.push_back(std::move(*r.disagreement));
        }
    }
    return report;
}

std::vector<DimensionRow> dimension_bookkeeping() {
    const int linear_coeffs = 6 * 3, quadric_coeffs = 3 * 6;
    const int coefficients = linear_coeffs + quadric_coeffs;
    const int rows = 9, cols = 4 + 1 + 6;
    const int group = rows + cols - 1;
    const int dim_m = coefficients - group;
    const int singular_quartics = 14 - 1, point_on_sing = 0, two_more_points = 1 + 1;
    const int dim_singular = singular_quartics + point_on_sing + two_more_points;
    return {
        {"coefficients", coefficients, "6 linear entries x 3 + 3 quadric entries x 6 = 18 + 18"},
        {"group", group, "GL3 on rows (9) + GL2, scalar and two linear forms on columns (4 + 1 + 6 = 11) - common scalars (1)"},
        {"dim M", dim_m, "36 - 19"},
        {"dim M'", dim_singular, "singular quartics (13) + a singular point in Z (0) + two further points of Z on C (1 + 1)"},
        {"codim M'", dim_m - dim_singular, "17 - 15"},
    };
}

}  // namespace qsheaf
