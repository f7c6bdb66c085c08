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

// Finite counting statistics: Poisson coincidence counts per analyzer
// setting, and bootstrap error bars that fold in the uncertainty of g.

#pragma once

#include <array>
#include <cstdint>

#include "hardysim/config.hpp"
#include "hardysim/hardy.hpp"
#include "hardysim/weakmeas.hpp"

namespace hardysim {

struct CountRecord {
    std::array<std::uint64_t, kSettings> counts{};
    double mean_pairs = 0.0;
    std::uint64_t seed = 0;

    SettingRates rates() const;
    std::uint64_t at(const AnalyzerSetting& s) const { return counts[s.index()]; }

    friend bool operator==(const CountRecord&, const CountRecord&) = default;
};

struct EstimateWithError {
    double value = 0.0;
    double sigma = 0.0;
    int n_bootstrap = 0;
};

// Joint and marginal single estimates from one arm-pair record.
struct CellEstimate {
    EstimateWithError joint;
    EstimateWithError single_E;
    EstimateWithError single_P;
};

// Independent Poisson(probability * mean_pairs) count per setting; setting i
// draws from the stream (seed, Counts, i).
CountRecord sample_counts(const AnalyzerDistribution& dist, double mean_pairs, std::uint64_t seed);

// Resamples every count as Poisson(observed) and each g as Normal(value, sigma)
// (redrawn until positive), re-extracts, and returns the mean and standard
// deviation over resamples. Resample b uses the stream (seed, Bootstrap, b).
CellEstimate bootstrap_errors(const CountRecord& record, const EstimateWithError& g_E, const EstimateWithError& g_P,
                              int n_bootstrap, std::uint64_t seed, unsigned threads = 1);

// All four arm-pair protocols, the table of joint and single weak values with
// error bars, in the mode selected by the config. Identical for any `threads`.
WeakValueReport full_table_run(const ExperimentConfig& cfg, unsigned threads = 1);

}  // namespace hardysim
