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

#include <gtest/gtest.h>

#include <string>

#include "hardysim/error.hpp"

using namespace hardysim;

namespace {

ConfigError parse_error(const std::string& text) {
    try {
        (void)parse_config(text);
    } catch (const ConfigError& e) {
        return e;
    }
    ADD_FAILURE() << "no error for:\n" << text;
    return ConfigError(0, "", "");
}

}  // namespace

TEST(Config, EmptyTextGivesDefaults) {
    const ExperimentConfig cfg = parse_config("");
    EXPECT_EQ(cfg, ExperimentConfig{});
    EXPECT_EQ(cfg.mode, Mode::Analytic);
    EXPECT_EQ(cfg.switch_residual, SwitchResidual::Inverted);
    EXPECT_EQ(cfg.n_bootstrap, 1000);
}

TEST(Config, ParsesImperfectionPointWithCommentsAndWhitespace) {
    const ExperimentConfig cfg = parse_config(
        "# apparatus\n"
        "  switch_efficiency = 0.85   # measured\n"
        "visibility_E=0.95\n"
        "\n"
        "visibility_P = 0.94\n"
        "mode = counts\n"
        "switch_residual = in_phase\n"
        "seed = 123456789012\n"
        "g_E = 0.349\n");
    EXPECT_EQ(cfg.switch_efficiency, 0.85);
    EXPECT_EQ(cfg.visibility_E, 0.95);
    EXPECT_EQ(cfg.visibility_P, 0.94);
    EXPECT_EQ(cfg.mode, Mode::Counts);
    EXPECT_EQ(cfg.switch_residual, SwitchResidual::InPhase);
    EXPECT_EQ(cfg.seed, 123456789012u);
    EXPECT_EQ(cfg.g_E, 0.349);
    EXPECT_EQ(cfg.g_P, 0.05);
    const ImperfectionParams imp = cfg.imperfections();
    EXPECT_EQ(imp.visibility_P, 0.94);
    EXPECT_EQ(imp.switch_residual, SwitchResidual::InPhase);
}

TEST(Config, OutOfRangeNamesKeyAndLine) {
    const ConfigError e = parse_error("mode = analytic\nvisibility_E = 1.5\n");
    EXPECT_EQ(e.kind(), ErrorKind::Config);
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.key(), "visibility_E");
    EXPECT_NE(std::string(e.what()).find("visibility_E"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
}

TEST(Config, RangeChecks) {
    EXPECT_EQ(parse_error("g_E = 0").key(), "g_E");
    EXPECT_EQ(parse_error("g_P = 1.6").key(), "g_P");
    EXPECT_NO_THROW((void)parse_config("g_P = 1.5707963267948966"));
    EXPECT_EQ(parse_error("g_sigma_E = -0.1").key(), "g_sigma_E");
    EXPECT_EQ(parse_error("switch_efficiency = 1.01").key(), "switch_efficiency");
    EXPECT_EQ(parse_error("mean_pairs = 0").key(), "mean_pairs");
    EXPECT_EQ(parse_error("n_bootstrap = 99").key(), "n_bootstrap");
    EXPECT_EQ(parse_error("n_bootstrap = 2.5").key(), "n_bootstrap");
    EXPECT_EQ(parse_error("visibility_P = nan").key(), "visibility_P");
    EXPECT_EQ(parse_error("mode = fast").key(), "mode");
    EXPECT_EQ(parse_error("switch_residual = sideways").key(), "switch_residual");
    EXPECT_EQ(parse_error("g_E = 0.1x").key(), "g_E");
    EXPECT_EQ(parse_error("g_E =").key(), "g_E");
}

TEST(Config, UnknownKey) {
    const ConfigError e = parse_error("\n\nfoo = 1\n");
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.key(), "foo");
}

TEST(Config, MalformedLine) {
    const ConfigError e = parse_error("g_E = 0.1\njust words\n");
    EXPECT_EQ(e.line(), 2);
    EXPECT_NE(std::string(e.what()).find("malformed"), std::string::npos);
    EXPECT_EQ(parse_error(" = 3").line(), 1);
}

TEST(Config, DuplicateKey) {
    const ConfigError e = parse_error("seed = 1\nseed = 2\n");
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.key(), "seed");
}

TEST(Config, CommandLineOverridesUseLineZero) {
    ExperimentConfig cfg;
    set_config_value(cfg, "g_E", "0.2");
    EXPECT_EQ(cfg.g_E, 0.2);
    try {
        set_config_value(cfg, "g_E", "7");
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_EQ(e.line(), 0);
        EXPECT_EQ(std::string(e.what()).rfind("command line", 0), 0u);
    }
}

TEST(Config, EntriesRoundTrip) {
    ExperimentConfig cfg;
    cfg.switch_efficiency = 0.85;
    cfg.g_E = 0.1 + 0.2;
    cfg.mode = Mode::Noiseless;
    cfg.seed = 99;
    std::string text;
    for (const auto& [k, v] : config_entries(cfg)) {
        EXPECT_TRUE(is_config_key(k));
        text += k + " = " + v + "\n";
    }
    EXPECT_EQ(parse_config(text), cfg);
    EXPECT_EQ(config_entries(cfg).front().first, "mode");
}

TEST(Config, FormatDoubleIsRoundTripExact) {
    EXPECT_EQ(format_double(0.5), "0.5");
    EXPECT_EQ(std::stod(format_double(0.1 + 0.2)), 0.1 + 0.2);
}
