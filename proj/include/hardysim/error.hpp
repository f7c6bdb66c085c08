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

#include <stdexcept>
#include <string>

namespace hardysim {

enum class ErrorKind {
    StageMismatch,
    EmptySubensemble,
    UndefinedWeakValue,
    DegenerateRates,
    Degenerate,
    InvalidArgument,
    Config,
};

const char* to_string(ErrorKind kind);

// All library failures surface as this type; `kind` is stable and machine-readable.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Configuration errors carry the offending line (0 for command-line overrides) and key.
class ConfigError : public Error {
public:
    ConfigError(int line, std::string key, const std::string& message)
        : Error(ErrorKind::Config, format(line, key, message)), line_(line), key_(std::move(key)) {}

    int line() const noexcept { return line_; }
    const std::string& key() const noexcept { return key_; }

private:
    static std::string format(int line, const std::string& key, const std::string& message) {
        std::string out = line > 0 ? "line " + std::to_string(line) : std::string("command line");
        if (!key.empty()) {
            out += ": key '" + key + "'";
        }
        return out + ": " + message;
    }

    int line_;
    std::string key_;
};

}  // namespace hardysim
