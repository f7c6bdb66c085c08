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

#include "hardysim/weakmeas.hpp"

#include <cmath>
#include <numbers>

#include "hardysim/error.hpp"

namespace hardysim {

namespace {

Matrix2 analyzer_projector(AnalyzerBasis basis, Outcome outcome) {
    const double sign = outcome == Outcome::Plus ? 1.0 : -1.0;
    const Amplitude second = basis == AnalyzerBasis::Diag ? Amplitude(sign, 0.0) : Amplitude(0.0, sign);
    Eigen::Vector2cd ket(1.0, second);
    ket /= std::sqrt(2.0);
    return ket * ket.adjoint();
}

void require_positive(double g, const char* name) {
    if (!(g > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, std::string(name) + " must be positive");
    }
}

double rate(const SettingRates& rates, AnalyzerBasis be, Outcome oe, AnalyzerBasis bp, Outcome op) {
    return rates[AnalyzerSetting{be, oe, bp, op}.index()];
}

struct Block {
    double pp, pm, mp, mm;  // E outcome first
    double total() const { return pp + pm + mp + mm; }
};

Block block(const SettingRates& rates, AnalyzerBasis be, AnalyzerBasis bp) {
    return {rate(rates, be, Outcome::Plus, bp, Outcome::Plus), rate(rates, be, Outcome::Plus, bp, Outcome::Minus),
            rate(rates, be, Outcome::Minus, bp, Outcome::Plus), rate(rates, be, Outcome::Minus, bp, Outcome::Minus)};
}

}  // namespace

std::size_t AnalyzerSetting::index() const {
    return (static_cast<std::size_t>(basis_E) << 3) | (static_cast<std::size_t>(outcome_E) << 2) |
           (static_cast<std::size_t>(basis_P) << 1) | static_cast<std::size_t>(outcome_P);
}

std::string AnalyzerSetting::str() const {
    auto one = [](AnalyzerBasis b, Outcome o) {
        return std::string(b == AnalyzerBasis::Diag ? "D" : "C") + (o == Outcome::Plus ? "+" : "-");
    };
    return one(basis_E, outcome_E) + one(basis_P, outcome_P);
}

AnalyzerSetting AnalyzerSetting::from_index(std::size_t index) {
    if (index >= kSettings) {
        throw Error(ErrorKind::InvalidArgument, "analyzer setting index out of range");
    }
    return {static_cast<AnalyzerBasis>((index >> 3) & 1U), static_cast<Outcome>((index >> 2) & 1U),
            static_cast<AnalyzerBasis>((index >> 1) & 1U), static_cast<Outcome>(index & 1U)};
}

AnalyzerDistribution run_pointer_protocol(const Occupation& arms, double g_E, double g_P,
                                          const ImperfectionParams& imp) {
    imp.validate();
    StateVector state = preselected_state(imp);
    for (Photon k : {Photon::E, Photon::P}) {
        const auto arm = arms.arm(k);
        if (!arm) {
            continue;
        }
        const double g = k == Photon::E ? g_E : g_P;
        if (!(g >= 0.0 && g <= std::numbers::pi / 2.0)) {
            throw Error(ErrorKind::InvalidArgument, "coupling strength must lie in [0, pi/2]");
        }
        const ArmId id{k, *arm};
        state = apply(weak_rotator(id, g), state);
        if (imp.v_transmission(k) < 1.0) {
            state = apply(polarization_loss(id, imp.v_transmission(k)), state);
        }
    }
    state = apply(dark_postselection(), apply(recombiners(imp), state));

    AnalyzerDistribution dist;
    dist.g_E = g_E;
    dist.g_P = g_P;
    dist.arms = arms;
    dist.postselection_probability = state.squared_norm();
    if (!(dist.postselection_probability > 1e-24)) {
        throw Error(ErrorKind::EmptySubensemble,
                    "no dark-dark coincidences for arms " + arms.str() + ": post-selected subensemble is empty");
    }
    for (std::size_t i = 0; i < kSettings; ++i) {
        const AnalyzerSetting s = AnalyzerSetting::from_index(i);
        const ElementOperator analyzer = embed_single_qubit(analyzer_projector(s.basis_P, s.outcome_P), Factor::PolP) *
                                         embed_single_qubit(analyzer_projector(s.basis_E, s.outcome_E), Factor::PolE);
        dist.probabilities[i] = apply(analyzer, state).squared_norm();
    }
    return dist;
}

PauliCorrelators correlators(const SettingRates& rates) {
    const Block diag = block(rates, AnalyzerBasis::Diag, AnalyzerBasis::Diag);
    const Block circ = block(rates, AnalyzerBasis::Circ, AnalyzerBasis::Circ);
    if (!(diag.total() > 0.0) || !(circ.total() > 0.0)) {
        throw Error(ErrorKind::DegenerateRates, "a same-basis block of coincidence rates sums to zero");
    }
    PauliCorrelators c;
    c.xx = (diag.pp + diag.mm - diag.pm - diag.mp) / diag.total();
    c.x_E = (diag.pp + diag.pm - diag.mp - diag.mm) / diag.total();
    c.x_P = (diag.pp + diag.mp - diag.pm - diag.mm) / diag.total();
    c.yy = (circ.pp + circ.mm - circ.pm - circ.mp) / circ.total();
    c.y_E = (circ.pp + circ.pm - circ.mp - circ.mm) / circ.total();
    c.y_P = (circ.pp + circ.mp - circ.pm - circ.mm) / circ.total();

    const Block dc = block(rates, AnalyzerBasis::Diag, AnalyzerBasis::Circ);
    const Block cd = block(rates, AnalyzerBasis::Circ, AnalyzerBasis::Diag);
    if (dc.total() > 0.0) {
        c.xy = (dc.pp + dc.mm - dc.pm - dc.mp) / dc.total();
    }
    if (cd.total() > 0.0) {
        c.yx = (cd.pp + cd.mm - cd.pm - cd.mp) / cd.total();
    }
    return c;
}

PauliCorrelators correlators(const AnalyzerDistribution& dist) { return correlators(dist.probabilities); }

double extract_joint_weak(const PauliCorrelators& corr, double g_E, double g_P) {
    require_positive(g_E, "g_E");
    require_positive(g_P, "g_P");
    return (corr.xx - corr.yy) / (4.0 * g_E * g_P);
}

double extract_joint_weak_imag(const PauliCorrelators& corr, double g_E, double g_P) {
    require_positive(g_E, "g_E");
    require_positive(g_P, "g_P");
    return (corr.xy + corr.yx) / (4.0 * g_E * g_P);
}

double extract_single_weak(const PauliCorrelators& corr, Photon photon, double g) {
    require_positive(g, "g");
    return (photon == Photon::E ? corr.x_E : corr.x_P) / (2.0 * g);
}

double extract_single_weak_imag(const PauliCorrelators& corr, Photon photon, double g) {
    require_positive(g, "g");
    return (photon == Photon::E ? corr.y_E : corr.y_P) / (2.0 * g);
}

double calibrate_g(ArmId arm, double waveplate_angle, const ImperfectionParams& imp) {
    if (!(waveplate_angle > 0.0 && waveplate_angle <= std::numbers::pi / 2.0)) {
        throw Error(ErrorKind::InvalidArgument, "waveplate angle must lie in (0, pi/2]");
    }
    imp.validate();
    // The measured photon is certainly in `arm`; the other photon sits in its
    // Outer arm so the switch never acts.
    const Path measured = arm.arm == Arm::Inner ? Path::Inner : Path::Outer;
    const BasisLabel start = arm.photon == Photon::E ? BasisLabel{measured, Pol::H, Path::Outer, Pol::H}
                                                     : BasisLabel{Path::Outer, Pol::H, measured, Pol::H};
    StateVector state = StateVector::basis(start);
    state = apply(two_photon_absorber(imp.switch_efficiency, imp.switch_residual), state);
    state = apply(weak_rotator(arm, waveplate_angle), state);
    state = apply(polarization_loss(arm, imp.v_transmission(arm.photon)), state);
    state = apply(recombiners(imp), state);

    const double detected = state.squared_norm();
    if (!(detected > 1e-24)) {
        throw Error(ErrorKind::Degenerate, "calibration of " + arm.str() + ": zero detection probability");
    }
    const Factor pol = arm.photon == Photon::E ? Factor::PolE : Factor::PolP;
    const Vector16& amps = state.amplitudes();
    const double x = amps.dot(embed_single_qubit(pauli::x(), pol).matrix() * amps).real();
    const double z = amps.dot(embed_single_qubit(pauli::z(), pol).matrix() * amps).real();
    double g = 0.5 * std::atan2(x, z);
    // Polarization angles are defined modulo pi; report the rotation in (0, pi/2].
    if (g < 0.0) {
        g += std::numbers::pi;
    }
    if (!(g > 0.0)) {
        throw Error(ErrorKind::Degenerate, "calibration of " + arm.str() + ": no polarization rotation observed");
    }
    return g;
}

}  // namespace hardysim
