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

#include "hardysim/qstate.hpp"

#include <gtest/gtest.h>

#include <random>

#include "hardysim/error.hpp"
#include "hardysim/hardy.hpp"
#include "hardysim/optics.hpp"

using namespace hardysim;

namespace {

Matrix16 random_matrix(std::mt19937_64& rng) {
    std::normal_distribution<double> n;
    Matrix16 m;
    for (Eigen::Index i = 0; i < 16; ++i) {
        for (Eigen::Index j = 0; j < 16; ++j) {
            m(i, j) = Amplitude(n(rng), n(rng));
        }
    }
    return m;
}

StateVector random_state(std::mt19937_64& rng, double scale = 0.25) {
    std::normal_distribution<double> n;
    Vector16 v;
    for (Eigen::Index i = 0; i < 16; ++i) {
        v(i) = Amplitude(n(rng), n(rng));
    }
    return StateVector(Vector16(v.normalized() * scale));
}

ElementOperator random_unitary(std::mt19937_64& rng) {
    Eigen::HouseholderQR<Matrix16> qr(random_matrix(rng));
    return ElementOperator(Matrix16(qr.householderQ()));
}

}  // namespace

TEST(BasisLabel, IndexRoundTripsAndOrderIsFixed) {
    const auto labels = basis_labels(Stage::PreRecombination);
    ASSERT_EQ(labels.size(), 16U);
    for (std::size_t i = 0; i < kDim; ++i) {
        EXPECT_EQ(labels[i].index(), i);
    }
    EXPECT_EQ(labels[0].str(), "IHIH");
    EXPECT_EQ(labels[1].str(), "IHIV");
    EXPECT_EQ(labels[2].str(), "IHOH");
    EXPECT_EQ(labels[4].str(), "IVIH");
    EXPECT_EQ(labels[8].str(), "OHIH");
    EXPECT_EQ(basis_labels(Stage::PostRecombination)[15].str(), "BVBV");
}

TEST(BasisLabel, MixedAlphabetsAreRejected) {
    const BasisLabel mixed{Path::Dark, Pol::H, Path::Inner, Pol::H};
    EXPECT_THROW(mixed.validate(), Error);
    EXPECT_THROW((void)mixed.index(), Error);
}

TEST(EmbedSingleQubit, IdentityOnAnyTargetIsIdentity) {
    for (Factor f : {Factor::PathE, Factor::PolE, Factor::PathP, Factor::PolP}) {
        const ElementOperator op = embed_single_qubit(pauli::identity(), f);
        EXPECT_LT((op.matrix() - Matrix16::Identity()).cwiseAbs().maxCoeff(), 1e-15);
        EXPECT_EQ(op.kind(), OperatorKind::Unitary);
    }
}

TEST(EmbedSingleQubit, SigmaXIsAnInvolution) {
    const ElementOperator x = embed_single_qubit(pauli::x(), Factor::PolE);
    EXPECT_LT(((x * x).matrix() - Matrix16::Identity()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(EmbedSingleQubit, DistinctTargetsCommute) {
    const Matrix2 ops[] = {pauli::x(), pauli::y(), pauli::z(), recombiner_matrix(0.9)};
    const Factor factors[] = {Factor::PathE, Factor::PolE, Factor::PathP, Factor::PolP};
    for (const auto& a : ops) {
        for (const auto& b : ops) {
            for (Factor fa : factors) {
                for (Factor fb : factors) {
                    if (fa == fb) {
                        continue;
                    }
                    const Matrix16 ab = embed_single_qubit(a, fa).matrix() * embed_single_qubit(b, fb).matrix();
                    const Matrix16 ba = embed_single_qubit(b, fb).matrix() * embed_single_qubit(a, fa).matrix();
                    EXPECT_LT((ab - ba).cwiseAbs().maxCoeff(), 1e-12);
                }
            }
        }
    }
}

TEST(EmbedSingleQubit, SigmaYOnBothPolarizationsCommutesByDirectProduct) {
    const Matrix16 ye = embed_single_qubit(pauli::y(), Factor::PolE).matrix();
    const Matrix16 yp = embed_single_qubit(pauli::y(), Factor::PolP).matrix();
    // |H_E H_P> -> (i)(i)|V_E V_P> regardless of order.
    const Vector16 hh = StateVector::basis({Path::Inner, Pol::H, Path::Inner, Pol::H}).amplitudes();
    const Vector16 out = ye * (yp * hh);
    EXPECT_NEAR(std::abs(out(BasisLabel{Path::Inner, Pol::V, Path::Inner, Pol::V}.index()) - Amplitude(-1.0, 0.0)),
                0.0, 1e-15);
    EXPECT_LT((ye * yp - yp * ye).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(EmbedSingleQubit, KindInference) {
    Matrix2 proj = Matrix2::Zero();
    proj(0, 0) = 1.0;
    EXPECT_EQ(embed_single_qubit(proj, Factor::PathE).kind(), OperatorKind::Projector);
    Matrix2 damp = Matrix2::Identity();
    damp(1, 1) = 0.5;
    EXPECT_EQ(embed_single_qubit(damp, Factor::PolP).kind(), OperatorKind::Contraction);
    EXPECT_EQ(embed_single_qubit(Matrix2(2.0 * Matrix2::Identity()), Factor::PolP).kind(), OperatorKind::General);
    EXPECT_TRUE(ElementOperator::identity().is_projector());
}

TEST(ElementOperator, DeclaredKindIsValidated) {
    Matrix16 m = Matrix16::Identity();
    m(0, 0) = 2.0;
    EXPECT_THROW(ElementOperator(m, OperatorKind::Unitary), Error);
    EXPECT_THROW(ElementOperator(m, OperatorKind::Contraction), Error);
    EXPECT_NO_THROW(ElementOperator(m, OperatorKind::General));
}

TEST(Apply, IdentityIsExact) {
    std::mt19937_64 rng(7);
    const StateVector s = random_state(rng);
    const StateVector out = apply(ElementOperator::identity(), s);
    EXPECT_EQ(out.amplitudes(), s.amplitudes());
    EXPECT_EQ(out.stage(), s.stage());
}

TEST(Apply, UnitaryPreservesNormProperty) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const ElementOperator u = random_unitary(rng);
        ASSERT_TRUE(u.is_unitary());
        const StateVector s = random_state(rng, 0.9);
        EXPECT_NEAR(apply(u, s).squared_norm(), s.squared_norm(), 1e-12);
    }
}

TEST(Apply, AbsorberOnEqualSuperpositionLeavesThreeQuarters) {
    // Hand algebra: four equal path terms of weight 1/4, one removed.
    const StateVector s = apply(two_photon_absorber(1.0), source_state());
    EXPECT_NEAR(source_state().squared_norm(), 1.0, 1e-15);
    EXPECT_NEAR(s.squared_norm(), 0.75, 1e-15);
    // Brute force: zero the II entries by hand.
    Vector16 v = source_state().amplitudes();
    v(BasisLabel{Path::Inner, Pol::H, Path::Inner, Pol::H}.index()) = 0.0;
    EXPECT_NEAR((v - s.amplitudes()).norm(), 0.0, 1e-15);
}

TEST(Apply, StageRulesAreEnforced) {
    const StateVector post = apply(recombiners(ImperfectionParams::ideal()), source_state());
    EXPECT_EQ(post.stage(), Stage::PostRecombination);
    EXPECT_THROW(apply(weak_rotator({Photon::E, Arm::Outer}, 0.1), post), Error);
    EXPECT_THROW(apply(final_beamsplitter(Photon::E, 1.0), post), Error);
    EXPECT_THROW(apply(dark_postselection(), source_state()), Error);
}

TEST(InnerProduct, NormAndOrthogonality) {
    std::mt19937_64 rng(3);
    const StateVector s = random_state(rng, 0.6);
    const Amplitude self = inner_product(s, s);
    EXPECT_NEAR(self.real(), s.squared_norm(), 1e-15);
    EXPECT_EQ(self.imag(), 0.0);
    for (std::size_t i = 0; i < kDim; ++i) {
        for (std::size_t j = 0; j < kDim; ++j) {
            const auto a = StateVector::basis(BasisLabel::from_index(i, Stage::PreRecombination));
            const auto b = StateVector::basis(BasisLabel::from_index(j, Stage::PreRecombination));
            EXPECT_EQ(inner_product(a, b), Amplitude(i == j ? 1.0 : 0.0));
        }
    }
}

TEST(InnerProduct, ConjugateSymmetryProperty) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const StateVector a = random_state(rng);
        const StateVector b = random_state(rng);
        EXPECT_NEAR(std::abs(inner_product(a, b) - std::conj(inner_product(b, a))), 0.0, 1e-15);
    }
}

TEST(InnerProduct, DarkDarkAmplitudeOfIdealHardyState) {
    // Hand algebra: (1/4)(-1 - 1 + 1) = -1/4.
    const StateVector out = apply(recombiners(ImperfectionParams::ideal()),
                                  preselected_state(ImperfectionParams::ideal()));
    const StateVector ddhh = StateVector::basis({Path::Dark, Pol::H, Path::Dark, Pol::H});
    const Amplitude amp = inner_product(ddhh, out);
    EXPECT_NEAR(amp.real(), -0.25, 1e-15);
    EXPECT_NEAR(amp.imag(), 0.0, 1e-15);
}

TEST(InnerProduct, StageMismatchIsAnError) {
    const StateVector pre = source_state();
    const StateVector post = apply(recombiners(ImperfectionParams::ideal()), pre);
    try {
        (void)inner_product(pre, post);
        FAIL() << "expected StageMismatch";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::StageMismatch);
    }
}

TEST(ConditionalExpectation, IdentityObservableIsOne) {
    std::mt19937_64 rng(9);
    Matrix2 proj = Matrix2::Zero();
    proj(1, 1) = 1.0;
    const ElementOperator p = embed_single_qubit(proj, Factor::PathP);
    for (int trial = 0; trial < 10; ++trial) {
        EXPECT_NEAR(conditional_expectation(ElementOperator::identity(), random_state(rng), p), 1.0, 1e-12);
    }
}

TEST(ConditionalExpectation, SigmaXOnHorizontalPointerIsZero) {
    const StateVector h = StateVector::basis({Path::Inner, Pol::H, Path::Outer, Pol::H});
    EXPECT_NEAR(conditional_expectation(embed_single_qubit(pauli::x(), Factor::PolE), h, ElementOperator::identity()),
                0.0, 1e-15);
}

TEST(ConditionalExpectation, InvariantUnderPhaseAndPositiveScaling) {
    std::mt19937_64 rng(13);
    const ElementOperator obs = embed_single_qubit(pauli::x(), Factor::PolE) * embed_single_qubit(pauli::y(), Factor::PolP);
    Matrix2 proj = Matrix2::Zero();
    proj(0, 0) = 1.0;
    const ElementOperator p = embed_single_qubit(proj, Factor::PathE);
    for (int trial = 0; trial < 20; ++trial) {
        const StateVector s = random_state(rng);
        const double base = conditional_expectation(obs, s, p);
        EXPECT_NEAR(conditional_expectation(obs, s * std::polar(1.0, 0.37 * trial), p), base, 1e-12);
        EXPECT_NEAR(conditional_expectation(obs, s * Amplitude(0.01 + trial, 0.0), p), base, 1e-12);
    }
}

TEST(ConditionalExpectation, EmptySubensembleIsReported) {
    // No switch: the dark ports are extinct.
    ImperfectionParams off;
    off.switch_efficiency = 0.0;
    off.switch_residual = SwitchResidual::InPhase;
    const StateVector out = apply(recombiners(off), preselected_state(off));
    try {
        (void)conditional_expectation(ElementOperator::identity(), out, dark_postselection());
        FAIL() << "expected EmptySubensemble";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::EmptySubensemble);
    }
}

TEST(ConditionalExpectation, RejectsNonProjectorAndNonHermitian) {
    const StateVector s = source_state();
    EXPECT_THROW(conditional_expectation(ElementOperator::identity(), s, embed_single_qubit(pauli::x(), Factor::PolE)),
                 Error);
    Matrix2 lower = Matrix2::Zero();
    lower(1, 0) = 1.0;
    EXPECT_THROW(conditional_expectation(embed_single_qubit(lower, Factor::PolE), s, ElementOperator::identity()),
                 Error);
}

TEST(ConditionalExpectation, JointCorrelatorSlopeForOuterOuter) {
    // <xx> - <yy> on the dark-dark subensemble approaches 4 g^2 (-1).
    const ElementOperator xx = embed_single_qubit(pauli::x(), Factor::PolE) * embed_single_qubit(pauli::x(), Factor::PolP);
    const ElementOperator yy = embed_single_qubit(pauli::y(), Factor::PolE) * embed_single_qubit(pauli::y(), Factor::PolP);
    const ImperfectionParams ideal = ImperfectionParams::ideal();
    double previous_error = 1.0;
    for (double g : {0.2, 0.1, 0.05, 0.025}) {
        StateVector s = preselected_state(ideal);
        s = apply(weak_rotator({Photon::E, Arm::Outer}, g), s);
        s = apply(weak_rotator({Photon::P, Arm::Outer}, g), s);
        s = apply(recombiners(ideal), s);
        const ElementOperator dd = dark_postselection();
        const double ratio = (conditional_expectation(xx, s, dd) - conditional_expectation(yy, s, dd)) / (4 * g * g);
        const double error = std::abs(ratio + 1.0);
        EXPECT_LT(error, previous_error);
        previous_error = error;
    }
    EXPECT_LT(previous_error, 1e-3);
}
