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

// Pointer-based weak measurement of arm occupations.
//
// Each photon's polarization is the pointer. Rotators exp(-i g N sigma_y) act
// on the selected arms, the photons are post-selected at both dark ports, and
// the pointer is read out with +-45 deg (sigma_x) and circular (sigma_y)
// analyzers. With sigma^- = (sigma_x - i sigma_y)/2,
//
//   N(M_K)_W        ~ Re<sigma^-_K> / g          = x_K / (2 g)
//   N(M_E) N(M_P)_W ~ Re<sigma^-_E sigma^-_P> / (g_E g_P) = (xx - yy) / (4 g_E g_P)
//
// to leading order in g.

#pragma once

#include <array>
#include <cstdint>

#include "hardysim/hardy.hpp"
#include "hardysim/optics.hpp"

namespace hardysim {

enum class AnalyzerBasis : std::uint8_t { Diag, Circ };
enum class Outcome : std::uint8_t { Plus, Minus };

// Diag Plus/Minus: +45 / -45 deg linear (sigma_x eigenstates).
// Circ Plus/Minus: right / left circular (sigma_y eigenstates (H +- iV)/sqrt2).
struct AnalyzerSetting {
    AnalyzerBasis basis_E = AnalyzerBasis::Diag;
    Outcome outcome_E = Outcome::Plus;
    AnalyzerBasis basis_P = AnalyzerBasis::Diag;
    Outcome outcome_P = Outcome::Plus;

    std::size_t index() const;
    std::string str() const;  // e.g. "D+D-" (E first)
    bool same_basis() const { return basis_E == basis_P; }

    static AnalyzerSetting from_index(std::size_t index);

    friend bool operator==(const AnalyzerSetting&, const AnalyzerSetting&) = default;
};

inline constexpr std::size_t kSettings = 16;

using SettingRates = std::array<double, kSettings>;

struct AnalyzerDistribution {
    SettingRates probabilities{};
    double g_E = 0.0;
    double g_P = 0.0;
    Occupation arms = Occupation::joint(Arm::Inner, Arm::Inner);
    double postselection_probability = 0.0;

    double at(const AnalyzerSetting& s) const { return probabilities[s.index()]; }
};

struct PauliCorrelators {
    double xx = 0.0;
    double yy = 0.0;
    double x_E = 0.0;
    double y_E = 0.0;
    double x_P = 0.0;
    double y_P = 0.0;
    // Mixed-basis correlators, zero when those settings carry no rate.
    double xy = 0.0;
    double yx = 0.0;
};

// Exact post-selected coincidence probabilities for all 16 analyzer settings.
AnalyzerDistribution run_pointer_protocol(const Occupation& arms, double g_E, double g_P,
                                          const ImperfectionParams& imp);

// Works on probabilities or counts alike; throws Error(DegenerateRates) if a
// same-basis block sums to zero.
PauliCorrelators correlators(const SettingRates& rates);
PauliCorrelators correlators(const AnalyzerDistribution& dist);

double extract_joint_weak(const PauliCorrelators& corr, double g_E, double g_P);
double extract_joint_weak_imag(const PauliCorrelators& corr, double g_E, double g_P);
double extract_single_weak(const PauliCorrelators& corr, Photon photon, double g);
double extract_single_weak_imag(const PauliCorrelators& corr, Photon photon, double g);

// Effective coupling of one arm's waveplate: the photon is sent through `arm`
// with certainty and the polarization rotation seen at the detector is returned.
double calibrate_g(ArmId arm, double waveplate_angle, const ImperfectionParams& imp);

}  // namespace hardysim
