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

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fockforge/circuit.hpp"
#include "fockforge/fock.hpp"

namespace fockforge {

// Phase shifts applied to the outer modes (A1, B2) of the four-mode swap
// interferometer.
struct PhaseSettings {
    double phi_a = 0.0;
    double phi_b = 0.0;
};

// A named predicate over occupation patterns, pure and total over the basis.
struct PostSelectionRule {
    std::string name;
    std::function<bool(const Occupation&)> accept;

    // Keeps patterns with exactly one photon in modes {0,1} and one in {2,3}.
    static PostSelectionRule one_photon_per_side();
    static PostSelectionRule accept_all();
};

struct PostSelected {
    FockState state;  // renormalized projection
    double probability;
};

// Projects onto the accepted patterns and renormalizes. The input should be
// normalized; throws PostSelectionEmpty when the accepted mass is at or below
// tol.eps^2.
PostSelected postselect(const FockState& s, const PostSelectionRule& rule,
                        ComplexTolerance tol = {});

// Which output mode each detector watches; detectors are indexed
// (D_A1, D_A2, D_B1, D_B2). The canonical assignment is the identity.
struct DetectorAssignment {
    std::array<int, 4> mode_of{0, 1, 2, 3};
    int side_a_mode(int detector) const { return mode_of[static_cast<size_t>(detector)]; }
    int side_b_mode(int detector) const { return mode_of[static_cast<size_t>(2 + detector)]; }
    void validate() const;
};

// Post-selected coincidence probabilities of the swap interferometer.
// probs(i, j) = P(D_A(i+1), D_B(j+1)), renormalized within the one-photon-
// per-side subspace; p_select is the subspace probability (1/2 at every
// phase setting).
struct CoincidenceTable {
    double p_select = 0.0;
    Eigen::Matrix2d probs = Eigen::Matrix2d::Zero();
};

CoincidenceTable coincidences(PhaseSettings settings, DetectorAssignment detectors = {},
                              ComplexTolerance tol = {});

// Squared overlap of the two non-local single-photon modes a photon pair
// occupies after the interferometer, computed from the compiled unitary's
// photon columns: `inner` pairs the (A2, B1) components, `outer` the (A1, B2)
// components. Both equal (1 + cos(phi_a + phi_b)) / 2.
struct OverlapPair {
    double inner = 0.0;
    double outer = 0.0;
};

OverlapPair mode_overlap(PhaseSettings settings);

// E = P(A1,B2) + P(A2,B1) - P(A1,B1) - P(A2,B2), evaluates to
// cos(phi_a + phi_b).
double correlation(PhaseSettings settings);

// S = E(a,b) + E(a,b') + E(a',b) - E(a',b'). The settings
// (0, pi/2, -pi/4, pi/4) give 2*sqrt(2).
double chsh(double a, double a_prime, double b, double b_prime);

// Side split used for the entanglement entropy; defaults to A = {0,1},
// B = {2,3}.
struct Bipartition {
    std::array<int, 2> side_a{0, 1};
    std::array<int, 2> side_b{2, 3};
};

// Von Neumann entropy (in bits) of side A's reduced density matrix for a
// normalized four-mode state inside the one-photon-per-side subspace. The
// 2x2 eigenvalues come from the trace/determinant closed form and are clamped
// to [0, 1]; 0*log(0) counts as 0.
double entanglement_entropy(const FockState& s, Bipartition split = {});

enum class Detector { A1, A2 };

// B's conditional single-photon state after A's half of the interferometer
// fires one detector: the photons pass the input beam splitters, the mode
// swap, the phi_a phase and side A's output beam splitter only, then side A
// is projected onto the chosen detector. Amplitudes are reported over B's two
// pre-output modes (unswapped U_B = mode 3 first, swapped S_B = mode 2
// second) and normalized; `probability` is the projection weight.
struct SteeringState {
    Complex unswapped;
    Complex swapped;
    double probability = 0.0;
};

SteeringState steering_state(double phi_a, Detector detector, ComplexTolerance tol = {});

// Removes a two-amplitude vector's global phase: rotates it so the largest-
// magnitude entry (first on ties) becomes real positive. Zero stays zero.
Eigen::Vector2cd phase_fixed(const Eigen::Vector2cd& v);

// Largest amplitude difference between a and b after rotating b by the
// global phase that brings it closest to a.
double phase_aligned_distance(const Eigen::Vector2cd& a, const Eigen::Vector2cd& b);

// Multinomial sampling by inverse CDF. Uniform deviates come from
// std::mt19937_64 seeded with `seed`, mapped to [0,1) as (x >> 11) * 2^-53;
// cells are scanned in the order given. Fully reproducible for a fixed seed.
std::vector<std::int64_t> sample_counts(const std::vector<double>& probs, std::uint64_t shots,
                                        std::uint64_t seed);

// Samples a coincidence table; cell order (A1B1, A1B2, A2B1, A2B2).
Eigen::Matrix<std::int64_t, 2, 2> sample_shots(const CoincidenceTable& table, std::uint64_t shots,
                                               std::uint64_t seed);

}  // namespace fockforge
