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

#include "hardysim/optics.hpp"

#include <cmath>
#include <numbers>

#include "hardysim/error.hpp"

namespace hardysim {

namespace {

void require_unit_interval(double value, const char* name) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw Error(ErrorKind::InvalidArgument, std::string(name) + " must lie in [0, 1]");
    }
}

Factor path_factor(Photon photon) { return photon == Photon::E ? Factor::PathE : Factor::PathP; }
Factor pol_factor(Photon photon) { return photon == Photon::E ? Factor::PolE : Factor::PolP; }

Matrix2 arm_selector(Arm arm) {
    Matrix2 m = Matrix2::Zero();
    const int k = arm == Arm::Inner ? 0 : 1;
    m(k, k) = 1.0;
    return m;
}

}  // namespace

const char* to_string(Arm arm) { return arm == Arm::Inner ? "I" : "O"; }

const char* to_string(SwitchResidual residual) {
    return residual == SwitchResidual::InPhase ? "in_phase" : "inverted";
}

std::string ArmId::str() const { return std::string(to_string(arm)) + "_" + to_string(photon); }

void ImperfectionParams::validate() const {
    require_unit_interval(switch_efficiency, "switch_efficiency");
    require_unit_interval(visibility_E, "visibility_E");
    require_unit_interval(visibility_P, "visibility_P");
    require_unit_interval(v_transmission_E, "v_transmission_E");
    require_unit_interval(v_transmission_P, "v_transmission_P");
}

Matrix2 recombiner_matrix(double visibility) {
    require_unit_interval(visibility, "visibility");
    const double phi = std::numbers::pi / 2.0 - std::asin(visibility) / 2.0;
    const double s = std::sin(phi);
    const double c = std::cos(phi);
    Matrix2 m;
    m << s, -c, c, s;
    return m;
}

ElementOperator final_beamsplitter(Photon photon, double visibility) {
    return embed_single_qubit(recombiner_matrix(visibility), path_factor(photon)).as_recombiner(photon);
}

ElementOperator recombiners(const ImperfectionParams& imp) {
    return final_beamsplitter(Photon::P, imp.visibility_P) * final_beamsplitter(Photon::E, imp.visibility_E);
}

ElementOperator weak_rotator(ArmId arm, double g) {
    if (!(std::abs(g) <= std::numbers::pi / 2.0)) {
        throw Error(ErrorKind::InvalidArgument, "rotator strength must satisfy |g| <= pi/2");
    }
    Matrix2 rotation;
    rotation << std::cos(g), -std::sin(g), std::sin(g), std::cos(g);
    const Matrix16 occupied = embed_single_qubit(arm_selector(arm.arm), path_factor(arm.photon)).matrix();
    const Matrix16 rotated = embed_single_qubit(rotation, pol_factor(arm.photon)).matrix();
    // N and the polarization rotation act on different factors, so
    // exp(-i g N sigma_y) = 1 + N (R - 1).
    const Matrix16 m = Matrix16::Identity() + occupied * (rotated - Matrix16::Identity());
    return ElementOperator(m, OperatorKind::Unitary).with_stage_rule(StageRule::PreRecombinationOnly);
}

ElementOperator two_photon_absorber(double efficiency, SwitchResidual residual) {
    require_unit_interval(efficiency, "switch efficiency");
    double factor = std::sqrt(1.0 - efficiency);
    if (residual == SwitchResidual::Inverted) {
        factor = -factor;
    }
    Matrix16 m = Matrix16::Identity();
    for (std::size_t i = 0; i < kDim; ++i) {
        const BasisLabel label = BasisLabel::from_index(i, Stage::PreRecombination);
        if (label.path_E == Path::Inner && label.path_P == Path::Inner) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = factor;
        }
    }
    return ElementOperator(m, OperatorKind::Contraction).with_stage_rule(StageRule::PreRecombinationOnly);
}

ElementOperator polarization_loss(ArmId arm, double v_transmission) {
    require_unit_interval(v_transmission, "v_transmission");
    Matrix2 loss = Matrix2::Identity();
    loss(1, 1) = v_transmission;
    const Matrix16 occupied = embed_single_qubit(arm_selector(arm.arm), path_factor(arm.photon)).matrix();
    const Matrix16 lossy = embed_single_qubit(loss, pol_factor(arm.photon)).matrix();
    const Matrix16 m = Matrix16::Identity() + occupied * (lossy - Matrix16::Identity());
    return ElementOperator(m, OperatorKind::Contraction).with_stage_rule(StageRule::PreRecombinationOnly);
}

ElementOperator arm_projector(ArmId arm) {
    return embed_single_qubit(arm_selector(arm.arm), path_factor(arm.photon))
        .with_stage_rule(StageRule::PreRecombinationOnly);
}

}  // namespace hardysim
