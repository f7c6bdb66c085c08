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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hardysim/optics.hpp"

namespace hardysim {

enum class Mode : std::uint8_t { Analytic, Noiseless, Counts };

const char* to_string(Mode mode);

struct ExperimentConfig {
    double g_E = 0.05;
    double g_P = 0.05;
    double g_sigma_E = 0.0;
    double g_sigma_P = 0.0;
    double switch_efficiency = 1.0;
    double visibility_E = 1.0;
    double visibility_P = 1.0;
    SwitchResidual switch_residual = SwitchResidual::Inverted;
    double mean_pairs = 40000.0;
    int n_bootstrap = 1000;
    std::uint64_t seed = 0;
    Mode mode = Mode::Analytic;

    ImperfectionParams imperfections() const;

    // Throws ConfigError naming the first key out of range.
    void validate() const;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

// Flat `key = value` document, `#` starts a comment. Unknown keys, malformed
// lines and out-of-range values throw ConfigError with the line number.
ExperimentConfig parse_config(std::string_view text);

// Sets one key from its textual value (used for `--key value` overrides).
// `line` is reported in errors; 0 denotes the command line.
void set_config_value(ExperimentConfig& cfg, std::string_view key, std::string_view value, int line = 0);

bool is_config_key(std::string_view key);

// Resolved configuration in canonical key order, values formatted for output.
std::vector<std::pair<std::string, std::string>> config_entries(const ExperimentConfig& cfg);

// Shortest round-trip text, shared by CSV and JSON output.
std::string format_double(double value);

}  // namespace hardysim
