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

// Counter-based seed derivation. Every random task (one analyzer setting's
// count window, one bootstrap resample) owns a generator seeded from
// (master seed, stream, index), so results do not depend on execution order.

#pragma once

#include <cstdint>
#include <random>

namespace hardysim {

enum class RngStream : std::uint64_t {
    Counts = 1,
    ArmPair = 2,
    Bootstrap = 3,
};

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline constexpr std::uint64_t derive_seed(std::uint64_t master, RngStream stream, std::uint64_t index) {
    return splitmix64(splitmix64(splitmix64(master) ^ static_cast<std::uint64_t>(stream)) ^ index);
}

inline std::mt19937_64 make_rng(std::uint64_t master, RngStream stream, std::uint64_t index) {
    return std::mt19937_64(derive_seed(master, stream, index));
}

}  // namespace hardysim
