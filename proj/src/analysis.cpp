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

#include "fockforge/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fockforge/lift.hpp"

namespace fockforge {

namespace {

Occupation pair_pattern(int modes, int first, int second) {
    std::vector<int> counts(static_cast<size_t>(modes), 0);
    counts[static_cast<size_t>(first)] += 1;
    counts[static_cast<size_t>(second)] += 1;
    return Occupation(std::move(counts));
}

FockState interferometer_output(PhaseSettings settings, ComplexTolerance tol) {
    auto u = compile(nonlocal_hom_circuit(settings.phi_a, settings.phi_b), tol);
    return evolve(FockState::from_photons(4, {0, 3}), u);
}

// Single-photon state over four modes whose amplitudes on `modes` are taken
// from the matching rows of a photon column of the compiled unitary.
FockState column_mode(const ModeUnitary& u, int column, std::array<int, 2> modes) {
    FockState s(u.dim());
    for (int m : modes) {
        std::vector<int> counts(static_cast<size_t>(u.dim()), 0);
        counts[static_cast<size_t>(m)] = 1;
        s.set_amplitude(Occupation(std::move(counts)), u.matrix()(m, column));
    }
    return normalize(s).state;
}

}  // namespace

PostSelectionRule PostSelectionRule::one_photon_per_side() {
    return {"one-per-side", [](const Occupation& q) {
                if (q.modes() != 4) {
                    throw DomainError("one-per-side post-selection expects four modes");
                }
                return q[0] + q[1] == 1 && q[2] + q[3] == 1;
            }};
}

PostSelectionRule PostSelectionRule::accept_all() {
    return {"none", [](const Occupation&) { return true; }};
}

PostSelected postselect(const FockState& s, const PostSelectionRule& rule, ComplexTolerance tol) {
    FockState projected(s.modes());
    for (const auto& [pattern, amp] : s.amplitudes()) {
        if (rule.accept(pattern)) {
            projected.set_amplitude(pattern, amp);
        }
    }
    double p = projected.squared_norm();
    if (p <= tol.eps * tol.eps) {
        throw PostSelectionEmpty("post-selection removed all probability mass");
    }
    return {normalize(projected, tol).state, p};
}

void DetectorAssignment::validate() const {
    std::array<bool, 4> seen{};
    for (int m : mode_of) {
        if (m < 0 || m >= 4 || seen[static_cast<size_t>(m)]) {
            throw DomainError("detector assignment must be a bijection onto modes 0..3");
        }
        seen[static_cast<size_t>(m)] = true;
    }
}

CoincidenceTable coincidences(PhaseSettings settings, DetectorAssignment detectors,
                              ComplexTolerance tol) {
    detectors.validate();
    auto out = interferometer_output(settings, tol);
    auto selected = postselect(out, PostSelectionRule::one_photon_per_side(), tol);
    CoincidenceTable table;
    table.p_select = selected.probability;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            auto pattern = pair_pattern(4, detectors.side_a_mode(i), detectors.side_b_mode(j));
            table.probs(i, j) = std::norm(selected.state.amplitude(pattern));
        }
    }
    return table;
}

OverlapPair mode_overlap(PhaseSettings settings) {
    auto u = compile(nonlocal_hom_circuit(settings.phi_a, settings.phi_b));
    OverlapPair overlap;
    overlap.inner = std::norm(
        inner_product(column_mode(u, 0, {1, 2}), column_mode(u, 3, {1, 2})));
    overlap.outer = std::norm(
        inner_product(column_mode(u, 0, {0, 3}), column_mode(u, 3, {0, 3})));
    return overlap;
}

double correlation(PhaseSettings settings) {
    auto table = coincidences(settings).probs;
    return table(0, 1) + table(1, 0) - table(0, 0) - table(1, 1);
}

double chsh(double a, double a_prime, double b, double b_prime) {
    return correlation({a, b}) + correlation({a, b_prime}) + correlation({a_prime, b}) -
           correlation({a_prime, b_prime});
}

double entanglement_entropy(const FockState& s, Bipartition split) {
    if (s.modes() != 4) {
        throw DomainError("entanglement entropy expects a four-mode state");
    }
    std::array<bool, 4> seen{};
    for (int m : {split.side_a[0], split.side_a[1], split.side_b[0], split.side_b[1]}) {
        if (m < 0 || m >= 4 || seen[static_cast<size_t>(m)]) {
            throw DomainError("bipartition must split the four modes into two pairs");
        }
        seen[static_cast<size_t>(m)] = true;
    }
    for (const auto& [pattern, amp] : s.amplitudes()) {
        if (pattern[split.side_a[0]] + pattern[split.side_a[1]] != 1 ||
            pattern[split.side_b[0]] + pattern[split.side_b[1]] != 1) {
            throw DomainError("state lies outside the one-photon-per-side subspace");
        }
    }
    // One photon per side makes each side a qubit; collect the 2x2 amplitude
    // matrix and trace out side B.
    Eigen::Matrix2cd c;
    for (int r = 0; r < 2; ++r) {
        for (int k = 0; k < 2; ++k) {
            c(r, k) = s.amplitude(pair_pattern(
                4, split.side_a[static_cast<size_t>(r)], split.side_b[static_cast<size_t>(k)]));
        }
    }
    Eigen::Matrix2cd rho = c * c.adjoint();
    double tr = rho.trace().real();
    double det = (rho(0, 0) * rho(1, 1) - rho(0, 1) * rho(1, 0)).real();
    double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
    double entropy = 0.0;
    for (double lambda : {(tr + disc) / 2.0, (tr - disc) / 2.0}) {
        lambda = std::clamp(lambda, 0.0, 1.0);
        if (lambda > 0.0) {
            entropy -= lambda * std::log2(lambda);
        }
    }
    return entropy;
}

SteeringState steering_state(double phi_a, Detector detector, ComplexTolerance tol) {
    // Side A's half of the interferometer only: no phi_b, no output beam
    // splitter on side B. B's two modes stay (S_B = 2, U_B = 3).
    Circuit half{4,
                 {
                     BeamSplitter{0, 1},
                     BeamSplitter{2, 3},
                     ModeSwap{1, 2},
                     PhaseShift{0, phi_a},
                     BeamSplitter{0, 1},
                 }};
    auto out = evolve(FockState::from_photons(4, {0, 3}), compile(half, tol));
    const int a_mode = detector == Detector::A1 ? 0 : 1;
    Complex swapped = out.amplitude(pair_pattern(4, a_mode, 2));
    Complex unswapped = out.amplitude(pair_pattern(4, a_mode, 3));
    double p = std::norm(swapped) + std::norm(unswapped);
    if (p <= tol.eps * tol.eps) {
        throw PostSelectionEmpty("detector projection removed all probability mass");
    }
    double scale = 1.0 / std::sqrt(p);
    return {unswapped * scale, swapped * scale, p};
}

Eigen::Vector2cd phase_fixed(const Eigen::Vector2cd& v) {
    int k = std::abs(v(0)) >= std::abs(v(1)) ? 0 : 1;
    if (std::abs(v(k)) == 0.0) {
        return v;
    }
    return v * std::conj(v(k) / std::abs(v(k)));
}

double phase_aligned_distance(const Eigen::Vector2cd& a, const Eigen::Vector2cd& b) {
    // The phase minimizing ||a - e^{i t} b|| is the phase of <a, b>. Fixing
    // each vector independently is not enough: with tied magnitudes the
    // canonical entry choice can differ between the two vectors.
    Complex overlap = b.dot(a);
    Eigen::Vector2cd aligned = std::abs(overlap) == 0.0 ? b : (b * (overlap / std::abs(overlap)));
    return (a - aligned).cwiseAbs().maxCoeff();
}

std::vector<std::int64_t> sample_counts(const std::vector<double>& probs, std::uint64_t shots,
                                        std::uint64_t seed) {
    std::vector<std::int64_t> counts(probs.size(), 0);
    if (shots == 0) {
        return counts;
    }
    double total = 0.0;
    for (double p : probs) {
        if (p < 0.0 || !std::isfinite(p)) {
            throw DomainError("probabilities must be finite and non-negative");
        }
        total += p;
    }
    if (total <= 0.0) {
        throw DomainError("cannot sample from an empty distribution");
    }
    std::vector<double> cdf(probs.size());
    double run = 0.0;
    size_t last_nonzero = 0;
    for (size_t i = 0; i < probs.size(); ++i) {
        run += probs[i] / total;
        cdf[i] = run;
        if (probs[i] > 0.0) {
            last_nonzero = i;
        }
    }
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        size_t cell = last_nonzero;
        for (size_t i = 0; i < cdf.size(); ++i) {
            if (u < cdf[i]) {
                cell = i;
                break;
            }
        }
        counts[cell] += 1;
    }
    return counts;
}

Eigen::Matrix<std::int64_t, 2, 2> sample_shots(const CoincidenceTable& table, std::uint64_t shots,
                                               std::uint64_t seed) {
    auto counts = sample_counts(
        {table.probs(0, 0), table.probs(0, 1), table.probs(1, 0), table.probs(1, 1)}, shots, seed);
    Eigen::Matrix<std::int64_t, 2, 2> out;
    out << counts[0], counts[1], counts[2], counts[3];
    return out;
}

}  // namespace fockforge
