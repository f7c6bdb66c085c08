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

// Command execution and report serialization for the command-line front end.
//
// Every report embeds the resolved configuration. Doubles are printed with 17
// significant digits so CSV and JSON carry bit-identical values.
//
// CSV headers (after `# key = value` comment lines):
//   table, analytic : quantity,arm_E,arm_P,value,sigma
//   sweep           : g,arm_E,arm_P,extracted,analytic,abs_error
//   inequality      : source,lhs,rhs,violated

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hardysim/config.hpp"
#include "hardysim/error.hpp"
#include "hardysim/hardy.hpp"

namespace hardysim {

enum class Command { Table, Analytic, Sweep, Inequality };
enum class OutputFormat { Csv, Json };

std::optional<Command> parse_command(std::string_view name);
const char* to_string(Command command);

struct RunOptions {
    std::vector<double> g_grid{0.2, 0.1, 0.05, 0.025};
    // Weak values supplied by the user for `inequality`; when absent the
    // report is computed from the config.
    std::optional<WeakValueReport> weak_values;
    unsigned threads = 1;
};

struct SweepRow {
    double g = 0.0;
    Arm arm_E = Arm::Inner;
    Arm arm_P = Arm::Inner;
    double extracted = 0.0;
    double analytic = 0.0;
    double abs_error = 0.0;
};

// Noiseless joint extraction with g_E = g_P = g against the oracle, for each g and arm pair.
std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg, const std::vector<double>& g_grid, unsigned threads = 1);

// Flat `key = value` weak-value table: N_IE_IP, N_IE_OP, N_OE_IP, N_OE_OP,
// N_IE, N_OE, N_IP, N_OP. The inequality inputs N_IE_IP, N_IE, N_IP are required.
WeakValueReport parse_weak_values(std::string_view text);

std::string execute(Command command, const ExperimentConfig& cfg, OutputFormat format,
                    const RunOptions& options = {});

// {"error":{"kind":...,"message":...}}
std::string format_error(std::string_view kind, std::string_view message);

std::string json_escape(std::string_view text);

}  // namespace hardysim
