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

// Hardy's setup: pre-selected state, dark-dark post-selection, and the exact
// weak-value oracle <f|C|i>/<f|i> that the pointer protocol is checked against.

#pragma once

#include <array>
#include <optional>

#include "hardysim/config.hpp"
#include "hardysim/optics.hpp"
#include "hardysim/qstate.hpp"

namespace hardysim {

// One or two occupied arms, at most one per photon.
class Occupation {
public:
    static Occupation joint(Arm arm_E, Arm arm_P);
    static Occupation single(ArmId arm);

    const std::optional<Arm>& arm_E() const { return arm_E_; }
    const std::optional<Arm>& arm_P() const { return arm_P_; }
    std::optional<Arm> arm(Photon photon) const { return photon == Photon::E ? arm_E_ : arm_P_; }
    bool is_joint() const { return arm_E_.has_value() && arm_P_.has_value(); }
    std::string str() const;

    // Product of the arm projectors.
    ElementOperator projector() const;

    friend bool operator==(const Occupation&, const Occupation&) = default;

private:
    Occupation() = default;
    std::optional<Arm> arm_E_;
    std::optional<Arm> arm_P_;
};

struct WeakValue {
    double real = 0.0;
    double imag = 0.0;
};

struct Estimate {
    double value = 0.0;
    double sigma = 0.0;
};

struct InequalityCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool violated = false;
};

// Table layout: joint[arm_E][arm_P], singles indexed by arm (Inner = 0).
struct WeakValueReport {
    std::array<std::array<Estimate, 2>, 2> joint{};
    std::array<Estimate, 2> single_E{};
    std::array<Estimate, 2> single_P{};
    std::optional<ExperimentConfig> config;

    Estimate& joint_at(Arm e, Arm p) { return joint[static_cast<int>(e)][static_cast<int>(p)]; }
    const Estimate& joint_at(Arm e, Arm p) const { return joint[static_cast<int>(e)][static_cast<int>(p)]; }
    Estimate& single(ArmId arm);
    const Estimate& single(ArmId arm) const;
};

// (|I O> + |O I> + |O O> + |I I>)/2 (x) |H H>, no switch.
StateVector source_state();

// Source state after the two-photon switch.
StateVector preselected_state(const ImperfectionParams& imp);

// Projector onto both photons at their dark ports; valid only after recombination.
ElementOperator dark_postselection();

// <f| as a pre-recombination state: |D D, H H> pulled back through the recombiners.
StateVector postselected_bra(const ImperfectionParams& imp);

// |<DD|psi>|^2 summed over polarizations, without rotators.
double dark_probability(const ImperfectionParams& imp);

WeakValue analytic_weak_value(const Occupation& occupation, const ImperfectionParams& imp);

WeakValueReport analytic_report(const ImperfectionParams& imp);

InequalityCheck classical_inequality_check(const WeakValueReport& report);

}  // namespace hardysim
