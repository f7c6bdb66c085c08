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

#include "hardysim/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <sstream>

#include "hardysim/counting.hpp"
#include "hardysim/parallel.hpp"
#include "hardysim/weakmeas.hpp"

namespace hardysim {

namespace {

bool is_string_entry(const std::string& key) { return key == "mode" || key == "switch_residual"; }

std::string json_config(const ExperimentConfig& cfg) {
    std::string out = "{";
    bool first = true;
    for (const auto& [key, value] : config_entries(cfg)) {
        out += first ? "" : ",";
        first = false;
        out += "\"" + key + "\":";
        out += is_string_entry(key) ? "\"" + value + "\"" : value;
    }
    return out + "}";
}

void csv_preamble(std::ostringstream& os, Command command, const ExperimentConfig& cfg) {
    os << "# command = " << to_string(command) << "\n";
    for (const auto& [key, value] : config_entries(cfg)) {
        os << "# " << key << " = " << value << "\n";
    }
}

const char* arm_name(int arm) { return arm == 0 ? "I" : "O"; }

std::string table_csv(Command command, const ExperimentConfig& cfg, const WeakValueReport& report) {
    std::ostringstream os;
    csv_preamble(os, command, cfg);
    os << "quantity,arm_E,arm_P,value,sigma\n";
    for (int e = 0; e < 2; ++e) {
        for (int p = 0; p < 2; ++p) {
            const Estimate& cell = report.joint[e][p];
            os << "joint," << arm_name(e) << "," << arm_name(p) << "," << format_double(cell.value) << ","
               << format_double(cell.sigma) << "\n";
        }
    }
    for (int m = 0; m < 2; ++m) {
        os << "single_E," << arm_name(m) << ",," << format_double(report.single_E[m].value) << ","
           << format_double(report.single_E[m].sigma) << "\n";
    }
    for (int m = 0; m < 2; ++m) {
        os << "single_P,," << arm_name(m) << "," << format_double(report.single_P[m].value) << ","
           << format_double(report.single_P[m].sigma) << "\n";
    }
    const InequalityCheck check = classical_inequality_check(report);
    os << "inequality_lhs,,," << format_double(check.lhs) << ",0\n";
    os << "inequality_rhs,,," << format_double(check.rhs) << ",0\n";
    os << "inequality_violated,,," << (check.violated ? 1 : 0) << ",0\n";
    return os.str();
}

std::string estimate_json(const Estimate& e) {
    return "\"value\":" + format_double(e.value) + ",\"sigma\":" + format_double(e.sigma);
}

std::string inequality_json(const InequalityCheck& check) {
    return "{\"lhs\":" + format_double(check.lhs) + ",\"rhs\":" + format_double(check.rhs) +
           ",\"violated\":" + (check.violated ? "true" : "false") + "}";
}

std::string table_json(Command command, const ExperimentConfig& cfg, const WeakValueReport& report) {
    std::string out = "{\"command\":\"" + std::string(to_string(command)) + "\",\"config\":" + json_config(cfg);
    out += ",\"joint\":[";
    for (int e = 0; e < 2; ++e) {
        for (int p = 0; p < 2; ++p) {
            out += (e == 0 && p == 0) ? "" : ",";
            out += "{\"arm_E\":\"" + std::string(arm_name(e)) + "\",\"arm_P\":\"" + arm_name(p) + "\"," +
                   estimate_json(report.joint[e][p]) + "}";
        }
    }
    out += "]";
    for (const auto& [name, singles] : {std::pair{"single_E", &report.single_E}, std::pair{"single_P", &report.single_P}}) {
        out += ",\"" + std::string(name) + "\":[";
        for (int m = 0; m < 2; ++m) {
            out += m == 0 ? "" : ",";
            out += "{\"arm\":\"" + std::string(arm_name(m)) + "\"," + estimate_json((*singles)[m]) + "}";
        }
        out += "]";
    }
    out += ",\"inequality\":" + inequality_json(classical_inequality_check(report)) + "}\n";
    return out;
}

std::string sweep_output(const ExperimentConfig& cfg, const std::vector<double>& grid,
                         const std::vector<SweepRow>& rows, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        std::ostringstream os;
        csv_preamble(os, Command::Sweep, cfg);
        os << "# g_grid = ";
        for (std::size_t i = 0; i < grid.size(); ++i) {
            os << (i ? "," : "") << format_double(grid[i]);
        }
        os << "\n";
        os << "g,arm_E,arm_P,extracted,analytic,abs_error\n";
        for (const SweepRow& r : rows) {
            os << format_double(r.g) << "," << to_string(r.arm_E) << "," << to_string(r.arm_P) << ","
               << format_double(r.extracted) << "," << format_double(r.analytic) << ","
               << format_double(r.abs_error) << "\n";
        }
        return os.str();
    }
    std::string out = "{\"command\":\"sweep\",\"config\":" + json_config(cfg) + ",\"g_grid\":[";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out += (i ? "," : "") + format_double(grid[i]);
    }
    out += "],\"rows\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const SweepRow& r = rows[i];
        out += i ? "," : "";
        out += "{\"g\":" + format_double(r.g) + ",\"arm_E\":\"" + to_string(r.arm_E) + "\",\"arm_P\":\"" +
               to_string(r.arm_P) + "\",\"extracted\":" + format_double(r.extracted) +
               ",\"analytic\":" + format_double(r.analytic) + ",\"abs_error\":" + format_double(r.abs_error) + "}";
    }
    return out + "]}\n";
}

std::string inequality_output(const ExperimentConfig& cfg, const InequalityCheck& check, const char* source,
                              OutputFormat format) {
    if (format == OutputFormat::Csv) {
        std::ostringstream os;
        csv_preamble(os, Command::Inequality, cfg);
        os << "source,lhs,rhs,violated\n";
        os << source << "," << format_double(check.lhs) << "," << format_double(check.rhs) << ","
           << (check.violated ? 1 : 0) << "\n";
        return os.str();
    }
    return "{\"command\":\"inequality\",\"config\":" + json_config(cfg) + ",\"source\":\"" + source +
           "\",\"lhs\":" + format_double(check.lhs) + ",\"rhs\":" + format_double(check.rhs) +
           ",\"violated\":" + (check.violated ? "true" : "false") + "}\n";
}

double parse_value(std::string_view key, std::string_view text, int line) {
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || end != text.data() + text.size() || !std::isfinite(value)) {
        throw ConfigError(line, std::string(key), "expected a finite number, got '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
    if (name == "table") return Command::Table;
    if (name == "analytic") return Command::Analytic;
    if (name == "sweep") return Command::Sweep;
    if (name == "inequality") return Command::Inequality;
    return std::nullopt;
}

const char* to_string(Command command) {
    switch (command) {
        case Command::Table: return "table";
        case Command::Analytic: return "analytic";
        case Command::Sweep: return "sweep";
        case Command::Inequality: return "inequality";
    }
    return "?";
}

std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg, const std::vector<double>& g_grid, unsigned threads) {
    const ImperfectionParams imp = cfg.imperfections();
    std::vector<SweepRow> rows(g_grid.size() * 4);
    parallel_for(rows.size(), threads, [&](std::size_t i) {
        const double g = g_grid[i / 4];
        const Arm e = static_cast<Arm>((i % 4) >> 1);
        const Arm p = static_cast<Arm>(i & 1U);
        const Occupation occ = Occupation::joint(e, p);
        SweepRow& row = rows[i];
        row.g = g;
        row.arm_E = e;
        row.arm_P = p;
        row.extracted = extract_joint_weak(correlators(run_pointer_protocol(occ, g, g, imp)), g, g);
        row.analytic = analytic_weak_value(occ, imp).real;
        row.abs_error = std::abs(row.extracted - row.analytic);
    });
    return rows;
}

WeakValueReport parse_weak_values(std::string_view text) {
    struct Slot {
        const char* key;
        int joint_e, joint_p;  // -1 for singles
        ArmId single;
    };
    const Slot slots[] = {
        {"N_IE_IP", 0, 0, {}}, {"N_IE_OP", 0, 1, {}}, {"N_OE_IP", 1, 0, {}}, {"N_OE_OP", 1, 1, {}},
        {"N_IE", -1, -1, {Photon::E, Arm::Inner}}, {"N_OE", -1, -1, {Photon::E, Arm::Outer}},
        {"N_IP", -1, -1, {Photon::P, Arm::Inner}}, {"N_OP", -1, -1, {Photon::P, Arm::Outer}},
    };
    WeakValueReport report;
    std::set<std::string, std::less<>> seen;
    int line_no = 0;
    std::istringstream is{std::string(text)};
    for (std::string raw; std::getline(is, raw);) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) {
            continue;
        }
        line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(line_no, "", "malformed line, expected 'key = value'");
        }
        auto trim = [](std::string_view s) {
            const auto a = s.find_first_not_of(" \t");
            return a == std::string_view::npos ? std::string_view{} : s.substr(a, s.find_last_not_of(" \t") - a + 1);
        };
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        const Slot* slot = nullptr;
        for (const Slot& s : slots) {
            if (key == s.key) {
                slot = &s;
            }
        }
        if (slot == nullptr) {
            throw ConfigError(line_no, std::string(key), "unknown weak-value key");
        }
        if (!seen.emplace(key).second) {
            throw ConfigError(line_no, std::string(key), "duplicate key");
        }
        const double v = parse_value(key, value, line_no);
        if (slot->joint_e >= 0) {
            report.joint[slot->joint_e][slot->joint_p].value = v;
        } else {
            report.single(slot->single).value = v;
        }
    }
    for (const char* required : {"N_IE_IP", "N_IE", "N_IP"}) {
        if (!seen.contains(required)) {
            throw ConfigError(0, required, "required weak value missing");
        }
    }
    return report;
}

std::string execute(Command command, const ExperimentConfig& cfg, OutputFormat format, const RunOptions& options) {
    cfg.validate();
    switch (command) {
        case Command::Analytic: {
            const WeakValueReport report = analytic_report(cfg.imperfections());
            return format == OutputFormat::Csv ? table_csv(command, cfg, report) : table_json(command, cfg, report);
        }
        case Command::Table: {
            const WeakValueReport report = full_table_run(cfg, options.threads);
            return format == OutputFormat::Csv ? table_csv(command, cfg, report) : table_json(command, cfg, report);
        }
        case Command::Sweep: {
            for (double g : options.g_grid) {
                if (!(g > 0.0 && g <= std::numbers::pi / 2.0)) {
                    throw ConfigError(0, "g-grid", "grid values must lie in (0, pi/2]");
                }
            }
            return sweep_output(cfg, options.g_grid, run_sweep(cfg, options.g_grid, options.threads), format);
        }
        case Command::Inequality: {
            if (options.weak_values) {
                return inequality_output(cfg, classical_inequality_check(*options.weak_values), "override", format);
            }
            const WeakValueReport report = full_table_run(cfg, options.threads);
            return inequality_output(cfg, classical_inequality_check(report), to_string(cfg.mode), format);
        }
    }
    return {};
}

std::string json_escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string format_error(std::string_view kind, std::string_view message) {
    return "{\"error\":{\"kind\":\"" + json_escape(kind) + "\",\"message\":\"" + json_escape(message) + "\"}}\n";
}

}  // namespace hardysim
