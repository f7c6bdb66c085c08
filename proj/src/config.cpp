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

#include "hardysim/config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>

#include "hardysim/error.hpp"

namespace hardysim {

namespace {

constexpr std::array<std::string_view, 12> kKeys = {
    "mode",       "g_E",           "g_P",          "g_sigma_E",    "g_sigma_P",  "switch_efficiency",
    "switch_residual", "visibility_E", "visibility_P", "mean_pairs", "n_bootstrap", "seed",
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text, int line) {
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || !std::isfinite(value)) {
        throw ConfigError(line, std::string(key), "expected a finite number, got '" + std::string(text) + "'");
    }
    return value;
}

template <typename Int>
Int parse_integer(std::string_view key, std::string_view text, int line) {
    Int value{};
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size()) {
        throw ConfigError(line, std::string(key), "expected an integer, got '" + std::string(text) + "'");
    }
    return value;
}

void check_range(bool ok, std::string_view key, const char* what, int line) {
    if (!ok) {
        throw ConfigError(line, std::string(key), std::string("out of range: ") + what);
    }
}

void check_key(const ExperimentConfig& c, std::string_view key, int line) {
    constexpr double kHalfPi = std::numbers::pi / 2.0;
    auto unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (key == "g_E") {
        check_range(c.g_E > 0.0 && c.g_E <= kHalfPi, key, "must lie in (0, pi/2]", line);
    } else if (key == "g_P") {
        check_range(c.g_P > 0.0 && c.g_P <= kHalfPi, key, "must lie in (0, pi/2]", line);
    } else if (key == "g_sigma_E") {
        check_range(c.g_sigma_E >= 0.0, key, "must be >= 0", line);
    } else if (key == "g_sigma_P") {
        check_range(c.g_sigma_P >= 0.0, key, "must be >= 0", line);
    } else if (key == "switch_efficiency") {
        check_range(unit(c.switch_efficiency), key, "must lie in [0, 1]", line);
    } else if (key == "visibility_E") {
        check_range(unit(c.visibility_E), key, "must lie in [0, 1]", line);
    } else if (key == "visibility_P") {
        check_range(unit(c.visibility_P), key, "must lie in [0, 1]", line);
    } else if (key == "mean_pairs") {
        check_range(c.mean_pairs > 0.0, key, "must be > 0", line);
    } else if (key == "n_bootstrap") {
        check_range(c.n_bootstrap >= 100, key, "must be >= 100", line);
    }
}

}  // namespace

const char* to_string(Mode mode) {
    switch (mode) {
        case Mode::Analytic: return "analytic";
        case Mode::Noiseless: return "noiseless";
        case Mode::Counts: return "counts";
    }
    return "?";
}

std::string format_double(double value) {
    // Shortest text that parses back to the same double.
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, result.ptr);
}

ImperfectionParams ExperimentConfig::imperfections() const {
    ImperfectionParams imp;
    imp.switch_efficiency = switch_efficiency;
    imp.visibility_E = visibility_E;
    imp.visibility_P = visibility_P;
    imp.switch_residual = switch_residual;
    return imp;
}

void ExperimentConfig::validate() const {
    for (std::string_view key : kKeys) {
        check_key(*this, key, 0);
    }
}

bool is_config_key(std::string_view key) {
    for (std::string_view k : kKeys) {
        if (k == key) {
            return true;
        }
    }
    return false;
}

void set_config_value(ExperimentConfig& cfg, std::string_view key, std::string_view raw, int line) {
    const std::string_view value = trim(raw);
    if (value.empty()) {
        throw ConfigError(line, std::string(key), "missing value");
    }
    if (key == "mode") {
        if (value == "analytic") {
            cfg.mode = Mode::Analytic;
        } else if (value == "noiseless") {
            cfg.mode = Mode::Noiseless;
        } else if (value == "counts") {
            cfg.mode = Mode::Counts;
        } else {
            throw ConfigError(line, std::string(key), "expected analytic, noiseless or counts");
        }
    } else if (key == "switch_residual") {
        if (value == "inverted") {
            cfg.switch_residual = SwitchResidual::Inverted;
        } else if (value == "in_phase") {
            cfg.switch_residual = SwitchResidual::InPhase;
        } else {
            throw ConfigError(line, std::string(key), "expected inverted or in_phase");
        }
    } else if (key == "g_E") {
        cfg.g_E = parse_double(key, value, line);
    } else if (key == "g_P") {
        cfg.g_P = parse_double(key, value, line);
    } else if (key == "g_sigma_E") {
        cfg.g_sigma_E = parse_double(key, value, line);
    } else if (key == "g_sigma_P") {
        cfg.g_sigma_P = parse_double(key, value, line);
    } else if (key == "switch_efficiency") {
        cfg.switch_efficiency = parse_double(key, value, line);
    } else if (key == "visibility_E") {
        cfg.visibility_E = parse_double(key, value, line);
    } else if (key == "visibility_P") {
        cfg.visibility_P = parse_double(key, value, line);
    } else if (key == "mean_pairs") {
        cfg.mean_pairs = parse_double(key, value, line);
    } else if (key == "n_bootstrap") {
        cfg.n_bootstrap = parse_integer<int>(key, value, line);
    } else if (key == "seed") {
        cfg.seed = parse_integer<std::uint64_t>(key, value, line);
    } else {
        throw ConfigError(line, std::string(key), "unknown key");
    }
    check_key(cfg, key, line);
}

ExperimentConfig parse_config(std::string_view text) {
    ExperimentConfig cfg;
    std::set<std::string, std::less<>> seen;
    int line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto newline = text.find('\n');
        std::string_view line = text.substr(0, newline);
        text = newline == std::string_view::npos ? std::string_view{} : text.substr(newline + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(line_no, "", "malformed line, expected 'key = value'");
        }
        const std::string_view key = trim(line.substr(0, eq));
        if (key.empty()) {
            throw ConfigError(line_no, "", "malformed line, missing key");
        }
        if (!is_config_key(key)) {
            throw ConfigError(line_no, std::string(key), "unknown key");
        }
        if (!seen.emplace(key).second) {
            throw ConfigError(line_no, std::string(key), "duplicate key");
        }
        set_config_value(cfg, key, line.substr(eq + 1), line_no);
    }
    return cfg;
}

std::vector<std::pair<std::string, std::string>> config_entries(const ExperimentConfig& cfg) {
    return {
        {"mode", to_string(cfg.mode)},
        {"g_E", format_double(cfg.g_E)},
        {"g_P", format_double(cfg.g_P)},
        {"g_sigma_E", format_double(cfg.g_sigma_E)},
        {"g_sigma_P", format_double(cfg.g_sigma_P)},
        {"switch_efficiency", format_double(cfg.switch_efficiency)},
        {"switch_residual", to_string(cfg.switch_residual)},
        {"visibility_E", format_double(cfg.visibility_E)},
        {"visibility_P", format_double(cfg.visibility_P)},
        {"mean_pairs", format_double(cfg.mean_pairs)},
        {"n_bootstrap", std::to_string(cfg.n_bootstrap)},
        {"seed", std::to_string(cfg.seed)},
    };
}

}  // namespace hardysim
