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

// Two-photon state space: path (Inner/Outer before the final beamsplitters,
// Dark/Bright after) and polarization (H/V) for each of the photons E and P.
//
// Basis ordering is fixed as (path_E, pol_E, path_P, pol_P) with I<O, D<B, H<V,
// path_E being the most significant bit. States are kept unnormalized: the
// squared norm is the probability that the pair has survived so far.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>

#include <Eigen/Dense>

namespace hardysim {

inline constexpr std::size_t kDim = 16;

inline constexpr double kOperatorTolerance = 1e-10;
inline constexpr double kAlgebraTolerance = 1e-12;

using Amplitude = std::complex<double>;
using Vector16 = Eigen::Matrix<Amplitude, 16, 1>;
using Matrix16 = Eigen::Matrix<Amplitude, 16, 16>;
using Matrix2 = Eigen::Matrix2cd;

enum class Photon : std::uint8_t { E, P };
enum class Path : std::uint8_t { Inner, Outer, Dark, Bright };
enum class Pol : std::uint8_t { H, V };
enum class Stage : std::uint8_t { PreRecombination, PostRecombination };
enum class Factor : std::uint8_t { PathE, PolE, PathP, PolP };

const char* to_string(Photon photon);
const char* to_string(Path path);
const char* to_string(Pol pol);

struct BasisLabel {
    Path path_E = Path::Inner;
    Pol pol_E = Pol::H;
    Path path_P = Path::Inner;
    Pol pol_P = Pol::H;

    // Throws Error(InvalidArgument) when the two path labels come from different alphabets.
    void validate() const;
    std::size_t index() const;
    std::string str() const;

    static BasisLabel from_index(std::size_t index, Stage stage);

    friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

// All 16 labels of a stage in basis order.
std::array<BasisLabel, kDim> basis_labels(Stage stage);

class ElementOperator;

class StateVector {
public:
    StateVector();
    explicit StateVector(const Vector16& amplitudes, Stage stage = Stage::PreRecombination);

    static StateVector basis(const BasisLabel& label);

    Stage stage() const;
    bool recombined(Photon photon) const;
    std::uint8_t recombined_mask() const { return recombined_; }

    const Vector16& amplitudes() const { return amplitudes_; }
    Amplitude operator[](const BasisLabel& label) const;
    Amplitude operator[](std::size_t index) const { return amplitudes_(static_cast<Eigen::Index>(index)); }

    double squared_norm() const { return amplitudes_.squaredNorm(); }

    StateVector operator+(const StateVector& other) const;
    StateVector operator*(Amplitude factor) const;

private:
    friend StateVector apply(const ElementOperator& op, const StateVector& state);

    StateVector(const Vector16& amplitudes, std::uint8_t recombined)
        : amplitudes_(amplitudes), recombined_(recombined) {}

    Vector16 amplitudes_;
    std::uint8_t recombined_ = 0;
};

enum class OperatorKind : std::uint8_t { Unitary, Projector, Contraction, General };

enum class StageRule : std::uint8_t { Any, PreRecombinationOnly, PostRecombinationOnly };

const char* to_string(OperatorKind kind);

// A linear map on the 16-dimensional space. Besides the matrix it records the
// stage it may act on and which photons' recombiners it contains.
class ElementOperator {
public:
    // Kind is inferred, checked in the order Unitary, Projector, Contraction.
    explicit ElementOperator(const Matrix16& matrix);
    // Declared kind is validated against the matrix; a mismatch throws.
    ElementOperator(const Matrix16& matrix, OperatorKind declared);

    static ElementOperator identity();

    const Matrix16& matrix() const { return matrix_; }
    OperatorKind kind() const { return kind_; }
    StageRule stage_rule() const { return stage_rule_; }
    std::uint8_t recombines() const { return recombines_; }

    bool is_unitary() const;
    bool is_projector() const;
    bool is_hermitian() const;
    bool is_contraction() const;

    ElementOperator with_stage_rule(StageRule rule) const;
    ElementOperator as_recombiner(Photon photon) const;
    ElementOperator adjoint() const;

    // Composition: (a * b) applies b first.
    friend ElementOperator operator*(const ElementOperator& a, const ElementOperator& b);

private:
    Matrix16 matrix_;
    OperatorKind kind_ = OperatorKind::General;
    StageRule stage_rule_ = StageRule::Any;
    std::uint8_t recombines_ = 0;
};

inline constexpr std::uint8_t photon_bit(Photon photon) {
    return photon == Photon::E ? std::uint8_t{1} : std::uint8_t{2};
}

ElementOperator embed_single_qubit(const Matrix2& op, Factor target);

// Applies op to the state. Enforces the operator's stage rule and records recombination.
StateVector apply(const ElementOperator& op, const StateVector& state);

// <a|b>, conjugate-linear in a. States must be at the same recombination stage.
Amplitude inner_product(const StateVector& a, const StateVector& b);

// <s|P op P|s> / <s|P|s>: expectation of a Hermitian op in the post-selected subensemble.
double conditional_expectation(const ElementOperator& op, const StateVector& state,
                               const ElementOperator& projector);

namespace pauli {
Matrix2 identity();
Matrix2 x();
Matrix2 y();
Matrix2 z();
}  // namespace pauli

}  // namespace hardysim
