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

#include "hardysim/hardy.hpp"

#include <cmath>

#include "hardysim/error.hpp"

namespace hardysim {

Occupation Occupation::joint(Arm arm_E, Arm arm_P) {
    Occupation occ;
    occ.arm_E_ = arm_E;
    occ.arm_P_ = arm_P;
    return occ;
}

Occupation Occupation::single(ArmId arm) {
    Occupation occ;
    (arm.photon == Photon::E ? occ.arm_E_ : occ.arm_P_) = arm.arm;
    return occ;
}

std::string Occupation::str() const {
    std::string out = "(";
    if (arm_E_) {
        out += ArmId{Photon::E, *arm_E_}.str();
    }
    if (arm_E_ && arm_P_) {
        out += ",";
    }
    if (arm_P_) {
        out += ArmId{Photon::P, *arm_P_}.str();
    }
    return out + ")";
}

ElementOperator Occupation::projector() const {
    ElementOperator out = ElementOperator::identity();
    if (arm_E_) {
        out = arm_projector({Photon::E, *arm_E_}) * out;
    }
    if (arm_P_) {
        out = arm_projector({Photon::P, *arm_P_}) * out;
    }
    return out;
}

Estimate& WeakValueReport::single(ArmId arm) {
    return (arm.photon == Photon::E ? single_E : single_P)[static_cast<int>(arm.arm)];
}

const Estimate& WeakValueReport::single(ArmId arm) const {
    return (arm.photon == Photon::E ? single_E : single_P)[static_cast<int>(arm.arm)];
}

StateVector source_state() {
    Vector16 amps = Vector16::Zero();
    for (Path e : {Path::Inner, Path::Outer}) {
        for (Path p : {Path::Inner, Path::Outer}) {
            amps(static_cast<Eigen::Index>(BasisLabel{e, Pol::H, p, Pol::H}.index())) = 0.5;
        }
    }
    return StateVector(amps, Stage::PreRecombination);
}

StateVector preselected_state(const ImperfectionParams& imp) {
    imp.validate();
    return apply(two_photon_absorber(imp.switch_efficiency, imp.switch_residual), source_state());
}

ElementOperator dark_postselection() {
    Matrix2 dark = Matrix2::Zero();
    dark(0, 0) = 1.0;
    return (embed_single_qubit(dark, Factor::PathP) * embed_single_qubit(dark, Factor::PathE))
        .with_stage_rule(StageRule::PostRecombinationOnly);
}

StateVector postselected_bra(const ImperfectionParams& imp) {
    const Vector16 dark_hh = StateVector::basis({Path::Dark, Pol::H, Path::Dark, Pol::H}).amplitudes();
    return StateVector(Vector16(recombiners(imp).matrix().adjoint() * dark_hh), Stage::PreRecombination);
}

double dark_probability(const ImperfectionParams& imp) {
    const StateVector out = apply(recombiners(imp), preselected_state(imp));
    return apply(dark_postselection(), out).squared_norm();
}

WeakValue analytic_weak_value(const Occupation& occupation, const ImperfectionParams& imp) {
    const StateVector initial = preselected_state(imp);
    const StateVector final_bra = postselected_bra(imp);
    const Amplitude overlap = inner_product(final_bra, initial);
    const double scale = std::sqrt(final_bra.squared_norm() * initial.squared_norm());
    if (!(std::abs(overlap) > 1e-12 * scale)) {
        throw Error(ErrorKind::UndefinedWeakValue,
                    "weak value of " + occupation.str() + " undefined: post-selection overlap vanishes");
    }
    const Amplitude numerator = inner_product(final_bra, apply(occupation.projector(), initial));
    const Amplitude w = numerator / overlap;
    return {w.real(), w.imag()};
}

WeakValueReport analytic_report(const ImperfectionParams& imp) {
    WeakValueReport report;
    for (Arm e : {Arm::Inner, Arm::Outer}) {
        for (Arm p : {Arm::Inner, Arm::Outer}) {
            report.joint_at(e, p).value = analytic_weak_value(Occupation::joint(e, p), imp).real;
        }
    }
    for (Photon k : {Photon::E, Photon::P}) {
        for (Arm m : {Arm::Inner, Arm::Outer}) {
            report.single({k, m}).value = analytic_weak_value(Occupation::single({k, m}), imp).real;
        }
    }
    return report;
}

InequalityCheck classical_inequality_check(const WeakValueReport& report) {
    InequalityCheck check;
    check.lhs = report.joint_at(Arm::Inner, Arm::Inner).value;
    check.rhs = report.single({Photon::E, Arm::Inner}).value + report.single({Photon::P, Arm::Inner}).value - 1.0;
    check.violated = check.lhs < check.rhs;
    return check;
}

}  // namespace hardysim
