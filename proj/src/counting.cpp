// Copyright 2026 The hardysim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hardysim/counting.hpp"

#include <cmath>
#include <vector>

#include "hardysim/error.hpp"
#include "hardysim/parallel.hpp"
#include "hardysim/rng.hpp"

namespace hardysim {

namespace {

constexpr std::size_t kPairs = 4;

Occupation pair_occupation(std::size_t pair) {
    return Occupation::joint(static_cast<Arm>(pair >> 1), static_cast<Arm>(pair & 1U));
}

std::uint64_t draw_poisson(std::mt19937_64& rng, double mean) {
    if (!(mean > 0.0)) {
        return 0;
    }
    std::poisson_distribution<std::uint64_t> poisson(mean);
    return poisson(rng);
}

double draw_g(std::mt19937_64& rng, const EstimateWithError& g) {
    if (!(g.sigma > 0.0)) {
        return g.value;
    }
    std::normal_distribution<double> normal(g.value, g.sigma);
    double value = normal(rng);
    while (!(value > 0.0)) {
        value = normal(rng);
    }
    return value;
}

SettingRates poisson_resample(std::mt19937_64& rng, const SettingRates& observed) {
    SettingRates out{};
    for (std::size_t i = 0; i < kSettings; ++i) {
        out[i] = static_cast<double>(draw_poisson(rng, observed[i]));
    }
    return out;
}

struct MeanSd {
    double mean = 0.0;
    double sd = 0.0;
};

MeanSd mean_sd(const std::vector<double>& xs) {
    MeanSd out;
    if (xs.empty()) {
        return out;
    }
    for (double x : xs) {
        out.mean += x;
    }
    out.mean /= static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) {
            ss += (x - out.mean) * (x - out.mean);
        }
        out.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return out;
}

// The eight table cells, in the order joint II, IO, OI, OO, single I_E, O_E, I_P, O_P.
using TableCells = std::array<double, 8>;

TableCells extract_table(const std::array<SettingRates, kPairs>& rates, double g_E, double g_P) {
    TableCells cells{};
    for (std::size_t pair = 0; pair < kPairs; ++pair) {
        const PauliCorrelators corr = correlators(rates[pair]);
        cells[pair] = extract_joint_weak(corr, g_E, g_P);
        // Each single cell averages the two runs in which that arm was rotated.
        cells[4 + (pair >> 1)] += 0.5 * extract_single_weak(corr, Photon::E, g_E);
        cells[6 + (pair & 1U)] += 0.5 * extract_single_weak(corr, Photon::P, g_P);
    }
    return cells;
}

std::string pair_context(std::size_t pair, const std::string& message) {
    return "arm pair " + pair_occupation(pair).str() + ": " + message;
}

}  // namespace

SettingRates CountRecord::rates() const {
    SettingRates out{};
    for (std::size_t i = 0; i < kSettings; ++i) {
        out[i] = static_cast<double>(counts[i]);
    }
    return out;
}

CountRecord sample_counts(const AnalyzerDistribution& dist, double mean_pairs, std::uint64_t seed) {
    if (!(mean_pairs > 0.0) || !std::isfinite(mean_pairs)) {
        throw Error(ErrorKind::InvalidArgument, "mean_pairs must be positive and finite");
    }
    CountRecord record;
    record.mean_pairs = mean_pairs;
    record.seed = seed;
    for (std::size_t i = 0; i < kSettings; ++i) {
        auto rng = make_rng(seed, RngStream::Counts, i);
        record.counts[i] = draw_poisson(rng, dist.probabilities[i] * mean_pairs);
    }
    return record;
}

CellEstimate bootstrap_errors(const CountRecord& record, const EstimateWithError& g_E, const EstimateWithError& g_P,
                              int n_bootstrap, std::uint64_t seed, unsigned threads) {
    if (n_bootstrap < 100) {
        throw Error(ErrorKind::InvalidArgument, "n_bootstrap must be at least 100");
    }
    const SettingRates observed = record.rates();
    const PauliCorrelators point = correlators(observed);  // rejects an empty basis before resampling

    const auto n = static_cast<std::size_t>(n_bootstrap);
    std::vector<double> joint(n), single_E(n), single_P(n);
    parallel_for(n, threads, [&](std::size_t b) {
        auto rng = make_rng(seed, RngStream::Bootstrap, b);
        const double ge = draw_g(rng, g_E);
        const double gp = draw_g(rng, g_P);
        const PauliCorrelators corr = correlators(poisson_resample(rng, observed));
        joint[b] = extract_joint_weak(corr, ge, gp);
        single_E[b] = extract_single_weak(corr, Photon::E, ge);
        single_P[b] = extract_single_weak(corr, Photon::P, gp);
    });

    // The value is the point estimate; the replicates only supply the spread.
    auto summarize = [n_bootstrap](double value, const std::vector<double>& xs) {
        return EstimateWithError{value, mean_sd(xs).sd, n_bootstrap};
    };
    return {summarize(extract_joint_weak(point, g_E.value, g_P.value), joint),
            summarize(extract_single_weak(point, Photon::E, g_E.value), single_E),
            summarize(extract_single_weak(point, Photon::P, g_P.value), single_P)};
}

WeakValueReport full_table_run(const ExperimentConfig& cfg, unsigned threads) {
    cfg.validate();
    const ImperfectionParams imp = cfg.imperfections();

    if (cfg.mode == Mode::Analytic) {
        WeakValueReport report = analytic_report(imp);
        report.config = cfg;
        return report;
    }

    const bool counts = cfg.mode == Mode::Counts;
    std::array<SettingRates, kPairs> observed{};
    parallel_for(kPairs, threads, [&](std::size_t pair) {
        try {
            const AnalyzerDistribution dist = run_pointer_protocol(pair_occupation(pair), cfg.g_E, cfg.g_P, imp);
            observed[pair] = counts
                ? sample_counts(dist, cfg.mean_pairs, derive_seed(cfg.seed, RngStream::ArmPair, pair)).rates()
                : dist.probabilities;
            correlators(observed[pair]);
        } catch (const Error& e) {
            throw Error(e.kind(), pair_context(pair, e.what()));
        }
    });

    const TableCells point = extract_table(observed, cfg.g_E, cfg.g_P);

    TableCells sigma{};
    const bool resample = counts || cfg.g_sigma_E > 0.0 || cfg.g_sigma_P > 0.0;
    if (resample) {
        const auto n = static_cast<std::size_t>(cfg.n_bootstrap);
        std::vector<TableCells> draws(n);
        const EstimateWithError g_E{cfg.g_E, cfg.g_sigma_E, 0};
        const EstimateWithError g_P{cfg.g_P, cfg.g_sigma_P, 0};
        const std::uint64_t boot_seed = derive_seed(cfg.seed, RngStream::Bootstrap, 0);
        parallel_for(n, threads, [&](std::size_t b) {
            auto rng = make_rng(boot_seed, RngStream::Bootstrap, b);
            const double ge = draw_g(rng, g_E);
            const double gp = draw_g(rng, g_P);
            std::array<SettingRates, kPairs> rates = observed;
            if (counts) {
                for (auto& r : rates) {
                    r = poisson_resample(rng, r);
                }
            }
            draws[b] = extract_table(rates, ge, gp);
        });
        for (std::size_t cell = 0; cell < sigma.size(); ++cell) {
            std::vector<double> column(n);
            for (std::size_t b = 0; b < n; ++b) {
                column[b] = draws[b][cell];
            }
            sigma[cell] = mean_sd(column).sd;
        }
    }

    WeakValueReport report;
    for (std::size_t pair = 0; pair < kPairs; ++pair) {
        report.joint[pair >> 1][pair & 1U] = {point[pair], sigma[pair]};
    }
    for (std::size_t arm = 0; arm < 2; ++arm) {
        report.single_E[arm] = {point[4 + arm], sigma[4 + arm]};
        report.single_P[arm] = {point[6 + arm], sigma[6 + arm]};
    }
    report.config = cfg;
    return report;
}

}  // namespace hardysim
