// Copyright 2026 The fockforge authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fockforge/circuit.hpp"

#include <cmath>

namespace fockforge {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_pair(int a, int b, int modes, const char* what) {
    if (a < 0 || a >= modes || b < 0 || b >= modes) {
        throw DomainError(std::string(what) + " mode index out of range");
    }
    if (a == b) {
        throw DomainError(std::string(what) + " requires two distinct modes");
    }
}

}  // namespace

ModeUnitary::ModeUnitary(Eigen::MatrixXcd u, ComplexTolerance tol) : u_(std::move(u)) {
    if (u_.rows() < 1 || u_.rows() != u_.cols()) {
        throw DomainError("mode unitary must be a non-empty square matrix");
    }
    Eigen::MatrixXcd gram = u_.adjoint() * u_;
    gram -= Eigen::MatrixXcd::Identity(u_.rows(), u_.cols());
    if (gram.cwiseAbs().maxCoeff() > tol.eps) {
        throw DomainError("matrix is not unitary within tolerance");
    }
}

ModeUnitary ModeUnitary::identity(int dim) {
    return ModeUnitary(Eigen::MatrixXcd::Identity(dim, dim));
}

ModeUnitary element_unitary(const CircuitElement& element, int modes) {
    if (modes < 1) {
        throw DomainError("mode count must be at least 1");
    }
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(modes, modes);
    if (const auto* bs = std::get_if<BeamSplitter>(&element)) {
        check_pair(bs->a, bs->b, modes, "beam splitter");
        u(bs->a, bs->a) = Complex(0.0, kInvSqrt2);
        u(bs->b, bs->b) = Complex(0.0, kInvSqrt2);
        u(bs->a, bs->b) = Complex(kInvSqrt2, 0.0);
        u(bs->b, bs->a) = Complex(kInvSqrt2, 0.0);
    } else if (const auto* ps = std::get_if<PhaseShift>(&element)) {
        if (ps->mode < 0 || ps->mode >= modes) {
            throw DomainError("phase shift mode index out of range");
        }
        u(ps->mode, ps->mode) = std::polar(1.0, ps->phi);
    } else {
        const auto& sw = std::get<ModeSwap>(element);
        check_pair(sw.a, sw.b, modes, "mode swap");
        u(sw.a, sw.a) = 0.0;
        u(sw.b, sw.b) = 0.0;
        u(sw.a, sw.b) = 1.0;
        u(sw.b, sw.a) = 1.0;
    }
    return ModeUnitary(std::move(u));
}

ModeUnitary compile(const Circuit& circuit, ComplexTolerance tol) {
    if (circuit.modes < 1) {
        throw DomainError("circuit must have at least one mode");
    }
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(circuit.modes, circuit.modes);
    for (const auto& element : circuit.elements) {
        u = element_unitary(element, circuit.modes).matrix() * u;
    }
    return ModeUnitary(std::move(u), tol);
}

Circuit classic_hom_circuit() {
    return Circuit{2, {BeamSplitter{0, 1}}};
}

Circuit nonlocal_hom_circuit(double phi_a, double phi_b) {
    return Circuit{4,
                   {
                       BeamSplitter{0, 1},
                       BeamSplitter{2, 3},
                       ModeSwap{1, 2},
                       PhaseShift{0, phi_a},
                       PhaseShift{3, phi_b},
                       BeamSplitter{0, 1},
                       BeamSplitter{2, 3},
                   }};
}

}  // namespace fockforge
