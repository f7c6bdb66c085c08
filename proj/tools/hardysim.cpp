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

// hardysim: weak-measurement simulator for Hardy's two-photon setup.
//
//   hardysim analytic|table|sweep|inequality [--config FILE] [--format csv|json]
//            [--out PATH] [--values FILE] [--g-grid a,b,...] [--threads N]
//            [--<config_key> VALUE ...]
//
// Exit codes: 0 success, 1 configuration error, 2 pipeline error.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hardysim/config.hpp"
#include "hardysim/error.hpp"
#include "hardysim/report.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitPipeline = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw hardysim::ConfigError(0, "", "cannot read file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> grid;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        try {
            std::size_t used = 0;
            grid.push_back(std::stod(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw hardysim::ConfigError(0, "g-grid", "malformed grid value '" + item + "'");
        }
    }
    if (grid.empty()) {
        throw hardysim::ConfigError(0, "g-grid", "empty grid");
    }
    return grid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weak-measurement simulator for Hardy's paradox"};
    std::string command_name;
    std::string config_path;
    std::string format_name = "csv";
    std::string out_path;
    std::string values_path;
    std::string grid_text;
    unsigned threads = 1;

    app.add_option("command", command_name, "analytic | table | sweep | inequality")->required();
    app.add_option("-c,--config", config_path, "flat key = value configuration file");
    app.add_option("-f,--format", format_name, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("-o,--out", out_path, "write the report here instead of standard output");
    app.add_option("--values", values_path, "weak-value table for the inequality command");
    app.add_option("--g-grid", grid_text, "comma-separated g values for sweep");
    app.add_option("--threads", threads, "worker threads (output does not depend on it)");

    const auto entries = hardysim::config_entries(hardysim::ExperimentConfig{});
    std::map<std::string, std::string> overrides;
    for (const auto& [key, value] : entries) {
        app.add_option("--" + key, overrides[key], "override config key " + key);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << hardysim::format_error("config_error", e.what());
        return kExitConfig;
    }

    hardysim::ExperimentConfig cfg;
    hardysim::RunOptions options;
    hardysim::Command command{};
    hardysim::OutputFormat format = format_name == "json" ? hardysim::OutputFormat::Json : hardysim::OutputFormat::Csv;
    try {
        const auto parsed = hardysim::parse_command(command_name);
        if (!parsed) {
            throw hardysim::ConfigError(0, "", "unknown command '" + command_name + "'");
        }
        command = *parsed;
        if (!config_path.empty()) {
            cfg = hardysim::parse_config(read_file(config_path));
        }
        for (const auto& [key, value] : entries) {
            if (app.count("--" + key) > 0) {
                hardysim::set_config_value(cfg, key, overrides[key], 0);
            }
        }
        cfg.validate();
        if (!grid_text.empty()) {
            options.g_grid = parse_grid(grid_text);
        }
        if (!values_path.empty()) {
            options.weak_values = hardysim::parse_weak_values(read_file(values_path));
        }
        options.threads = threads;
    } catch (const hardysim::Error& e) {
        std::cout << hardysim::format_error(hardysim::to_string(e.kind()), e.what());
        return kExitConfig;
    }

    std::string report;
    try {
        report = hardysim::execute(command, cfg, format, options);
    } catch (const hardysim::ConfigError& e) {
        std::cout << hardysim::format_error(hardysim::to_string(e.kind()), e.what());
        return kExitConfig;
    } catch (const hardysim::Error& e) {
        std::cout << hardysim::format_error(hardysim::to_string(e.kind()), e.what());
        return kExitPipeline;
    } catch (const std::exception& e) {
        std::cout << hardysim::format_error("internal_error", e.what());
        return kExitPipeline;
    }

    if (out_path.empty()) {
        std::cout << report;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    out << report;
    if (!out) {
        std::cout << hardysim::format_error("io_error", "cannot write '" + out_path + "'");
        return kExitPipeline;
    }
    return 0;
}
