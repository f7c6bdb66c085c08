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

#include "hardysim/error.hpp"

namespace hardysim {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::StageMismatch: return "stage_mismatch";
        case ErrorKind::EmptySubensemble: return "empty_subensemble";
        case ErrorKind::UndefinedWeakValue: return "undefined_weak_value";
        case ErrorKind::DegenerateRates: return "degenerate_rates";
        case ErrorKind::Degenerate: return "degenerate_configuration";
        case ErrorKind::InvalidArgument: return "invalid_argument";
        case ErrorKind::Config: return "config_error";
    }
    return "unknown";
}

}  // namespace hardysim
