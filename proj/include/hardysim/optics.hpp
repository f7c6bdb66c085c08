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

// Apparatus elements: final recombining beamsplitters, arm-conditioned
// polarization rotators (the weak-measurement waveplates), the absorptive
// two-photon switch, and a polarization-dependent loss used for calibration.

#pragma once

#include <cstdint>
#include <string>

#include "hardysim/qstate.hpp"

namespace hardysim {

enum class Arm : std::uint8_t { Inner, Outer };

struct ArmId {
    Photon photon = Photon::E;
    Arm arm = Arm::Inner;

    std::string str() const;  // e.g. "O_E"
    friend bool operator==(const ArmId&, const ArmId&) = default;
};

const char* to_string(Arm arm);

// Sign of the Inner-Inner amplitude left behind by an imperfect switch. The
// switch cancels the pair amplitude against a pump-created one; a residual of
// magnitude sqrt(1 - efficiency) survives either in phase with the original
// (under-cancellation) or inverted (over-cancellation).
enum class SwitchResidual : std::uint8_t { InPhase, Inverted };

const char* to_string(SwitchResidual residual);

struct ImperfectionParams {
    double switch_efficiency = 1.0;
    double visibility_E = 1.0;
    double visibility_P = 1.0;
    SwitchResidual switch_residual = SwitchResidual::Inverted;
    // Amplitude transmission of V polarization after a rotated waveplate
    // (polarization-dependent loss); 1 means lossless.
    double v_transmission_E = 1.0;
    double v_transmission_P = 1.0;

    static ImperfectionParams ideal() { return {}; }

    double visibility(Photon photon) const { return photon == Photon::E ? visibility_E : visibility_P; }
    double v_transmission(Photon photon) const {
        return photon == Photon::E ? v_transmission_E : v_transmission_P;
    }

    // Throws Error(InvalidArgument) naming the field that leaves [0, 1].
    void validate() const;
};

// 2x2 recombiner acting on the path qubit, rows (D, B), columns (I, O).
// For visibility v it is the real rotation [[s, -c], [c, s]] with
// sin(2 phi) = v, s = sin(phi), c = cos(phi), phi = pi/2 - asin(v)/2, so an
// empty interferometer leaks (1 - v)/2 into the dark port.
Matrix2 recombiner_matrix(double visibility);

ElementOperator final_beamsplitter(Photon photon, double visibility);

// Both recombiners for the given imperfections (E then P; they commute).
ElementOperator recombiners(const ImperfectionParams& imp);

// exp(-i g N(arm) sigma_y(photon)).
ElementOperator weak_rotator(ArmId arm, double g);

// Scales every Inner-Inner amplitude by +-sqrt(1 - efficiency).
ElementOperator two_photon_absorber(double efficiency, SwitchResidual residual = SwitchResidual::InPhase);

// Scales the V amplitude of the photon in `arm` by `v_transmission`.
ElementOperator polarization_loss(ArmId arm, double v_transmission);

// Projector onto photon K occupying arm M.
ElementOperator arm_projector(ArmId arm);

}  // namespace hardysim
