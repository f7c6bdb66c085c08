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

#include <cmath>

#include "hardysim/error.hpp"

namespace hardysim {

namespace {

bool is_post_alphabet(Path path) { return path == Path::Dark || path == Path::Bright; }

unsigned path_bit(Path path) { return (path == Path::Outer || path == Path::Bright) ? 1U : 0U; }

Path path_from_bit(unsigned bit, Stage stage) {
    if (stage == Stage::PreRecombination) {
        return bit ? Path::Outer : Path::Inner;
    }
    return bit ? Path::Bright : Path::Dark;
}

double max_abs(const Matrix16& m) { return m.cwiseAbs().maxCoeff(); }

// Bit of factor `f` inside a basis index (PathE is the most significant).
unsigned factor_bit(std::size_t index, Factor f) {
    const unsigned shift = 3U - static_cast<unsigned>(f);
    return static_cast<unsigned>((index >> shift) & 1U);
}

OperatorKind infer_kind(const ElementOperator& op) {
    if (op.is_unitary()) {
        return OperatorKind::Unitary;
    }
    if (op.is_projector()) {
        return OperatorKind::Projector;
    }
    if (op.is_contraction()) {
        return OperatorKind::Contraction;
    }
    return OperatorKind::General;
}

bool satisfies(const ElementOperator& op, OperatorKind kind) {
    switch (kind) {
        case OperatorKind::Unitary: return op.is_unitary();
        case OperatorKind::Projector: return op.is_projector();
        case OperatorKind::Contraction: return op.is_contraction();
        case OperatorKind::General: return true;
    }
    return false;
}

}  // namespace

const char* to_string(Photon photon) { return photon == Photon::E ? "E" : "P"; }

const char* to_string(Path path) {
    switch (path) {
        case Path::Inner: return "I";
        case Path::Outer: return "O";
        case Path::Dark: return "D";
        case Path::Bright: return "B";
    }
    return "?";
}

const char* to_string(Pol pol) { return pol == Pol::H ? "H" : "V"; }

const char* to_string(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::Unitary: return "unitary";
        case OperatorKind::Projector: return "projector";
        case OperatorKind::Contraction: return "contraction";
        case OperatorKind::General: return "general";
    }
    return "?";
}

void BasisLabel::validate() const {
    if (is_post_alphabet(path_E) != is_post_alphabet(path_P)) {
        throw Error(ErrorKind::InvalidArgument,
                    "basis label mixes pre- and post-recombination path alphabets");
    }
}

std::size_t BasisLabel::index() const {
    validate();
    return (path_bit(path_E) << 3) | (static_cast<unsigned>(pol_E) << 2) |
           (path_bit(path_P) << 1) | static_cast<unsigned>(pol_P);
}

std::string BasisLabel::str() const {
    return std::string(to_string(path_E)) + to_string(pol_E) + to_string(path_P) + to_string(pol_P);
}

BasisLabel BasisLabel::from_index(std::size_t index, Stage stage) {
    if (index >= kDim) {
        throw Error(ErrorKind::InvalidArgument, "basis index out of range");
    }
    return BasisLabel{path_from_bit(factor_bit(index, Factor::PathE), stage),
                      static_cast<Pol>(factor_bit(index, Factor::PolE)),
                      path_from_bit(factor_bit(index, Factor::PathP), stage),
                      static_cast<Pol>(factor_bit(index, Factor::PolP))};
}

std::array<BasisLabel, kDim> basis_labels(Stage stage) {
    std::array<BasisLabel, kDim> labels;
    for (std::size_t i = 0; i < kDim; ++i) {
        labels[i] = BasisLabel::from_index(i, stage);
    }
    return labels;
}

// ---- StateVector ----

StateVector::StateVector() : amplitudes_(Vector16::Zero()) {}

StateVector::StateVector(const Vector16& amplitudes, Stage stage)
    : amplitudes_(amplitudes),
      recombined_(stage == Stage::PostRecombination ? photon_bit(Photon::E) | photon_bit(Photon::P) : 0) {}

StateVector StateVector::basis(const BasisLabel& label) {
    Vector16 amps = Vector16::Zero();
    amps(static_cast<Eigen::Index>(label.index())) = 1.0;
    return StateVector(amps, is_post_alphabet(label.path_E) ? Stage::PostRecombination
                                                            : Stage::PreRecombination);
}

Stage StateVector::stage() const {
    return recombined_ == (photon_bit(Photon::E) | photon_bit(Photon::P)) ? Stage::PostRecombination
                                                                          : Stage::PreRecombination;
}

bool StateVector::recombined(Photon photon) const { return (recombined_ & photon_bit(photon)) != 0; }

Amplitude StateVector::operator[](const BasisLabel& label) const {
    const bool post = is_post_alphabet(label.path_E);
    if (post != (stage() == Stage::PostRecombination)) {
        throw Error(ErrorKind::StageMismatch, "label " + label.str() + " does not match the state's stage");
    }
    return amplitudes_(static_cast<Eigen::Index>(label.index()));
}

StateVector StateVector::operator+(const StateVector& other) const {
    if (recombined_ != other.recombined_) {
        throw Error(ErrorKind::StageMismatch, "cannot add states at different recombination stages");
    }
    return StateVector(Vector16(amplitudes_ + other.amplitudes_), recombined_);
}

StateVector StateVector::operator*(Amplitude factor) const {
    return StateVector(Vector16(amplitudes_ * factor), recombined_);
}

// ---- ElementOperator ----

ElementOperator::ElementOperator(const Matrix16& matrix) : matrix_(matrix) { kind_ = infer_kind(*this); }

ElementOperator::ElementOperator(const Matrix16& matrix, OperatorKind declared)
    : matrix_(matrix), kind_(declared) {
    if (!satisfies(*this, declared)) {
        throw Error(ErrorKind::InvalidArgument,
                    std::string("matrix does not satisfy declared kind ") + to_string(declared));
    }
}

ElementOperator ElementOperator::identity() { return ElementOperator(Matrix16::Identity(), OperatorKind::Unitary); }

bool ElementOperator::is_unitary() const {
    return max_abs(matrix_.adjoint() * matrix_ - Matrix16::Identity()) < kOperatorTolerance;
}

bool ElementOperator::is_hermitian() const { return max_abs(matrix_ - matrix_.adjoint()) < kOperatorTolerance; }

bool ElementOperator::is_projector() const {
    return is_hermitian() && max_abs(matrix_ * matrix_ - matrix_) < kOperatorTolerance;
}

bool ElementOperator::is_contraction() const {
    const Matrix16 gram = matrix_.adjoint() * matrix_;
    Eigen::SelfAdjointEigenSolver<Matrix16> solver(gram, Eigen::EigenvaluesOnly);
    const double largest = std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
    return largest <= 1.0 + kOperatorTolerance;
}

ElementOperator ElementOperator::with_stage_rule(StageRule rule) const {
    ElementOperator out = *this;
    out.stage_rule_ = rule;
    return out;
}

ElementOperator ElementOperator::as_recombiner(Photon photon) const {
    ElementOperator out = *this;
    out.recombines_ = static_cast<std::uint8_t>(out.recombines_ | photon_bit(photon));
    return out;
}

ElementOperator ElementOperator::adjoint() const {
    ElementOperator out(Matrix16(matrix_.adjoint()));
    out.stage_rule_ = stage_rule_;
    return out;
}

ElementOperator operator*(const ElementOperator& a, const ElementOperator& b) {
    if ((a.recombines_ & b.recombines_) != 0) {
        throw Error(ErrorKind::StageMismatch, "composite applies the same photon's recombiner twice");
    }
    ElementOperator out(Matrix16(a.matrix_ * b.matrix_));
    out.recombines_ = static_cast<std::uint8_t>(a.recombines_ | b.recombines_);
    // The composite inherits the constraint of whichever factor acts first.
    out.stage_rule_ = b.stage_rule_ != StageRule::Any ? b.stage_rule_ : a.stage_rule_;
    return out;
}

ElementOperator embed_single_qubit(const Matrix2& op, Factor target) {
    Matrix16 m;
    for (std::size_t row = 0; row < kDim; ++row) {
        for (std::size_t col = 0; col < kDim; ++col) {
            Amplitude value = 1.0;
            for (Factor f : {Factor::PathE, Factor::PolE, Factor::PathP, Factor::PolP}) {
                const unsigned r = factor_bit(row, f);
                const unsigned c = factor_bit(col, f);
                if (f == target) {
                    value *= op(r, c);
                } else if (r != c) {
                    value = 0.0;
                }
            }
            m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = value;
        }
    }
    return ElementOperator(m);
}

StateVector apply(const ElementOperator& op, const StateVector& state) {
    const Stage stage = state.stage();
    if (op.stage_rule() == StageRule::PreRecombinationOnly && state.recombined_ != 0) {
        throw Error(ErrorKind::StageMismatch, "operator acts only before recombination");
    }
    if (op.stage_rule() == StageRule::PostRecombinationOnly && stage != Stage::PostRecombination) {
        throw Error(ErrorKind::StageMismatch, "operator acts only after both photons are recombined");
    }
    if ((op.recombines() & state.recombined_) != 0) {
        throw Error(ErrorKind::StageMismatch, "recombiner applied twice to the same photon");
    }
    return StateVector(Vector16(op.matrix() * state.amplitudes_),
                       static_cast<std::uint8_t>(state.recombined_ | op.recombines()));
}

Amplitude inner_product(const StateVector& a, const StateVector& b) {
    if (a.recombined_mask() != b.recombined_mask()) {
        throw Error(ErrorKind::StageMismatch, "inner product of states in different path bases");
    }
    return a.amplitudes().dot(b.amplitudes());
}

double conditional_expectation(const ElementOperator& op, const StateVector& state,
                               const ElementOperator& projector) {
    if (!projector.is_projector()) {
        throw Error(ErrorKind::InvalidArgument, "post-selection operator is not a projector");
    }
    if (!op.is_hermitian()) {
        throw Error(ErrorKind::InvalidArgument, "observable is not Hermitian");
    }
    const StateVector selected = apply(projector, state);
    const double probability = selected.squared_norm();
    // Anything this small is round-off of an exactly extinct amplitude.
    if (!(probability > 1e-24 * std::max(1.0, state.squared_norm()))) {
        throw Error(ErrorKind::EmptySubensemble, "post-selected subensemble is empty");
    }
    const Amplitude numerator = selected.amplitudes().dot(op.matrix() * selected.amplitudes());
    return numerator.real() / probability;
}

namespace pauli {
Matrix2 identity() { return Matrix2::Identity(); }

Matrix2 x() {
    Matrix2 m;
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

Matrix2 y() {
    const Amplitude i(0.0, 1.0);
    Matrix2 m;
    m << 0.0, -i, i, 0.0;
    return m;
}

Matrix2 z() {
    Matrix2 m;
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}
}  // namespace pauli

}  // namespace hardysim
