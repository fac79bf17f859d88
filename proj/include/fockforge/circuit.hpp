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

#pragma once

#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "fockforge/common.hpp"

namespace fockforge {

// Balanced 50/50 beam splitter on a pair of modes. Convention: the reflected
// amplitude (the photon keeps its mode index) carries the factor i, the
// transmitted amplitude crosses to the partner mode with factor 1, so the
// 2x2 block over (a, b) is (1/sqrt2) [[i, 1], [1, i]].
struct BeamSplitter {
    int a = 0;
    int b = 1;
    friend bool operator==(const BeamSplitter&, const BeamSplitter&) = default;
};

// Multiplies mode `mode` by exp(i*phi).
struct PhaseShift {
    int mode = 0;
    double phi = 0.0;
    friend bool operator==(const PhaseShift&, const PhaseShift&) = default;
};

// Exchanges two modes (a lossless crossing of rails).
struct ModeSwap {
    int a = 0;
    int b = 1;
    friend bool operator==(const ModeSwap&, const ModeSwap&) = default;
};

using CircuitElement = std::variant<BeamSplitter, PhaseShift, ModeSwap>;

// Elements listed in propagation order: elements.front() acts on the input
// first.
struct Circuit {
    int modes = 0;
    std::vector<CircuitElement> elements;
    friend bool operator==(const Circuit&, const Circuit&) = default;
};

// A validated m x m unitary acting on mode creation operators by columns:
// a_k^† -> sum_j U(j,k) b_j^†. Column k is therefore the single-photon output
// state for a photon entering mode k.
class ModeUnitary {
   public:
    explicit ModeUnitary(Eigen::MatrixXcd u, ComplexTolerance tol = {});
    static ModeUnitary identity(int dim);

    int dim() const { return static_cast<int>(u_.rows()); }
    const Eigen::MatrixXcd& matrix() const { return u_; }
    ModeUnitary adjoint() const { return ModeUnitary(u_.adjoint()); }

   private:
    Eigen::MatrixXcd u_;
};

// The element's unitary embedded in an m-mode identity.
ModeUnitary element_unitary(const CircuitElement& element, int modes);

// Product of the element unitaries in propagation order (later elements
// multiply on the left).
ModeUnitary compile(const Circuit& circuit, ComplexTolerance tol = {});

// Two photons meeting on a single balanced beam splitter.
Circuit classic_hom_circuit();

// Four-mode swap interferometer, modes ordered (A1, A2, B1, B2): an input
// beam splitter per side, a swap of the inner modes A2/B1, phase shifts
// phi_a on A1 and phi_b on B2, and an output beam splitter per side. The
// photons enter modes 0 (A1) and 3 (B2).
Circuit nonlocal_hom_circuit(double phi_a, double phi_b);

}  // namespace fockforge
