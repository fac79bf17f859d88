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

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "fockforge/analysis.hpp"
#include "fockforge/circuit.hpp"
#include "fockforge/lift.hpp"
#include "test_util.hpp"

using namespace fockforge;

namespace {

Occupation occ(std::vector<int> counts) { return Occupation(std::move(counts)); }

constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 0.70710678118654752440;

FockState interferometer_output(double phi_a, double phi_b) {
    return evolve(FockState::from_photons(4, {0, 3}),
                  compile(nonlocal_hom_circuit(phi_a, phi_b)));
}

}  // namespace

TEST_CASE("post-selection keeps the one-photon-per-side singlet at zero phase") {
    PostSelected sel =
        postselect(interferometer_output(0.0, 0.0), PostSelectionRule::one_photon_per_side());
    CHECK(sel.probability == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(sel.state.amplitude(occ({1, 0, 0, 1})) - Complex(kInvSqrt2, 0.0)) < 1e-12);
    CHECK(std::abs(sel.state.amplitude(occ({0, 1, 1, 0})) + Complex(kInvSqrt2, 0.0)) < 1e-12);
    CHECK(sel.state.amplitudes().size() == 2);
    CHECK(sel.state.squared_norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("post-selection rejects states with no accepted mass") {
    FockState bunched = FockState::basis_state(occ({2, 0, 0, 0}));
    CHECK_THROWS_AS(postselect(bunched, PostSelectionRule::one_photon_per_side()),
                    PostSelectionEmpty);
}

TEST_CASE("the one-per-side rule is strict about its domain") {
    PostSelectionRule rule = PostSelectionRule::one_photon_per_side();
    CHECK(rule.name == "one-per-side");
    CHECK(rule.accept(occ({1, 0, 0, 1})));
    CHECK_FALSE(rule.accept(occ({2, 0, 0, 0})));
    CHECK_FALSE(rule.accept(occ({1, 1, 0, 0})));
    CHECK_THROWS_AS(rule.accept(occ({1, 1})), DomainError);
}

TEST_CASE("accept_all is a no-op filter") {
    FockState s = interferometer_output(0.4, 1.3);
    PostSelected sel = postselect(s, PostSelectionRule::accept_all());
    CHECK(sel.probability == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("coincidences follow the joint phase law") {
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            double phi_a = 2.0 * kPi * i / 8.0;
            double phi_b = 2.0 * kPi * j / 8.0 - kPi;
            CoincidenceTable t = coincidences({phi_a, phi_b});
            double same = 0.25 * (1.0 - std::cos(phi_a + phi_b));
            double cross = 0.25 * (1.0 + std::cos(phi_a + phi_b));
            CHECK(t.p_select == doctest::Approx(0.5).epsilon(1e-12));
            CHECK(std::abs(t.probs(0, 0) - same) < 1e-12);
            CHECK(std::abs(t.probs(1, 1) - same) < 1e-12);
            CHECK(std::abs(t.probs(0, 1) - cross) < 1e-12);
            CHECK(std::abs(t.probs(1, 0) - cross) < 1e-12);
        }
    }
}

TEST_CASE("zero-phase coincidences are perfectly anticorrelated") {
    CoincidenceTable t = coincidences({0.0, 0.0});
    CHECK(std::abs(t.probs(0, 1) - 0.5) < 1e-12);
    CHECK(std::abs(t.probs(1, 0) - 0.5) < 1e-12);
    CHECK(std::abs(t.probs(0, 0)) < 1e-12);
    CHECK(std::abs(t.probs(1, 1)) < 1e-12);
}

TEST_CASE("detector reassignment permutes the table") {
    DetectorAssignment swapped_a;
    swapped_a.mode_of = {1, 0, 2, 3};
    CoincidenceTable base = coincidences({0.7, 0.2});
    CoincidenceTable perm = coincidences({0.7, 0.2}, swapped_a);
    CHECK(std::abs(perm.probs(0, 0) - base.probs(1, 0)) < 1e-12);
    CHECK(std::abs(perm.probs(1, 1) - base.probs(0, 1)) < 1e-12);

    DetectorAssignment bad;
    bad.mode_of = {0, 0, 2, 3};
    CHECK_THROWS_AS(coincidences({0.0, 0.0}, bad), DomainError);
}

TEST_CASE("correlation depends only on the phase sum") {
    for (double x : {0.0, 0.3, 1.9}) {
        for (double y : {-0.5, 0.8}) {
            CHECK(std::abs(correlation({x, y}) - std::cos(x + y)) < 1e-12);
            for (double d : {0.17, 1.1}) {
                CHECK(std::abs(correlation({x + d, y - d}) - correlation({x, y})) < 1e-12);
            }
        }
    }
}

TEST_CASE("mode overlaps match the visibility law on both detector pairs") {
    for (double phi_a : {0.0, 0.6, 2.8}) {
        for (double phi_b : {0.0, -1.2, 0.9}) {
            OverlapPair o = mode_overlap({phi_a, phi_b});
            double expected = 0.5 * (1.0 + std::cos(phi_a + phi_b));
            CHECK(std::abs(o.inner - expected) < 1e-12);
            CHECK(std::abs(o.outer - expected) < 1e-12);
        }
    }
}

TEST_CASE("chsh reaches the Tsirelson bound at the canonical settings") {
    CHECK(std::abs(chsh(0.0, kPi / 2.0, -kPi / 4.0, kPi / 4.0) - 2.0 * std::sqrt(2.0)) < 1e-9);
    CHECK(std::abs(chsh(0.0, 0.0, 0.0, 0.0) - 2.0) < 1e-9);
    CHECK(std::abs(chsh(0.0, kPi / 2.0, kPi / 4.0, -kPi / 4.0)) < 1e-9);
}

TEST_CASE("entanglement entropy distinguishes product from maximally entangled states") {
    FockState singlet(4);
    singlet.set_amplitude(occ({1, 0, 0, 1}), Complex(kInvSqrt2, 0.0));
    singlet.set_amplitude(occ({0, 1, 1, 0}), Complex(-kInvSqrt2, 0.0));
    CHECK(std::abs(entanglement_entropy(singlet) - 1.0) < 1e-10);

    CHECK(std::abs(entanglement_entropy(FockState::basis_state(occ({1, 0, 1, 0})))) < 1e-10);

    // Same B-side state on both branches: still a product state.
    FockState aligned(4);
    aligned.set_amplitude(occ({1, 0, 0, 1}), Complex(kInvSqrt2, 0.0));
    aligned.set_amplitude(occ({0, 1, 0, 1}), Complex(kInvSqrt2, 0.0));
    CHECK(std::abs(entanglement_entropy(aligned)) < 1e-10);

    FockState skewed(4);
    skewed.set_amplitude(occ({1, 0, 0, 1}), Complex(std::sqrt(0.9), 0.0));
    skewed.set_amplitude(occ({0, 1, 1, 0}), Complex(0.0, std::sqrt(0.1)));
    double expected = -0.9 * std::log2(0.9) - 0.1 * std::log2(0.1);
    CHECK(std::abs(entanglement_entropy(skewed) - expected) < 1e-10);
}

TEST_CASE("the post-selected output carries exactly one bit at every phase") {
    for (double phi_a : {0.0, 0.4, 1.7, 3.0}) {
        for (double phi_b : {0.0, -0.9, 2.2}) {
            PostSelected sel = postselect(interferometer_output(phi_a, phi_b),
                                          PostSelectionRule::one_photon_per_side());
            CHECK(std::abs(entanglement_entropy(sel.state) - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("entropy validates its input") {
    CHECK_THROWS_AS(entanglement_entropy(FockState::basis_state(occ({2, 0, 0, 0}))),
                    DomainError);
    CHECK_THROWS_AS(entanglement_entropy(FockState::basis_state(occ({1, 1}))), DomainError);
    Bipartition bad;
    bad.side_a = {0, 0};
    FockState singlet(4);
    singlet.set_amplitude(occ({1, 0, 0, 1}), Complex(kInvSqrt2, 0.0));
    singlet.set_amplitude(occ({0, 1, 1, 0}), Complex(-kInvSqrt2, 0.0));
    CHECK_THROWS_AS(entanglement_entropy(singlet, bad), DomainError);
}

TEST_CASE("steering matches the closed form for both detectors across phases") {
    for (int k = 0; k < 8; ++k) {
        double phi_a = 2.0 * kPi * k / 8.0;
        Complex ea = std::polar(1.0, phi_a);
        Complex i(0.0, 1.0);

        SteeringState d1 = steering_state(phi_a, Detector::A1);
        Eigen::Vector2cd got1(d1.unswapped, d1.swapped);
        Eigen::Vector2cd want1(ea * kInvSqrt2, i * kInvSqrt2);
        CHECK(phase_aligned_distance(got1, want1) < 1e-10);
        CHECK(d1.probability == doctest::Approx(0.25).epsilon(1e-10));

        SteeringState d2 = steering_state(phi_a, Detector::A2);
        Eigen::Vector2cd got2(d2.unswapped, d2.swapped);
        Eigen::Vector2cd want2(ea * kInvSqrt2, -i * kInvSqrt2);
        CHECK(phase_aligned_distance(got2, want2) < 1e-10);
        CHECK(d2.probability == doctest::Approx(0.25).epsilon(1e-10));

        // The two conditional states are orthogonal.
        Complex dot = std::conj(got1(0)) * got2(0) + std::conj(got1(1)) * got2(1);
        CHECK(std::abs(dot) < 1e-10);
    }
}

TEST_CASE("phase fixing rotates the leading amplitude onto the positive real axis") {
    Eigen::Vector2cd v(Complex(0.0, 0.8), Complex(0.3, 0.0));
    Eigen::Vector2cd f = phase_fixed(v);
    CHECK(f(0).imag() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(f(0).real() == doctest::Approx(0.8).epsilon(1e-14));

    // Ties pick the first entry; zero vectors pass through.
    Eigen::Vector2cd tie(Complex(0.0, 0.5), Complex(0.5, 0.0));
    CHECK(phase_fixed(tie)(0).real() == doctest::Approx(0.5).epsilon(1e-14));
    Eigen::Vector2cd zero = Eigen::Vector2cd::Zero();
    CHECK(phase_fixed(zero)(0) == Complex(0.0, 0.0));

    Eigen::Vector2cd w(Complex(0.1, 0.2), Complex(-0.4, 0.3));
    CHECK(phase_aligned_distance(w, std::polar(1.0, 2.3) * w) < 1e-12);
}

TEST_CASE("sampling is reproducible, exhaustive, and respects zero cells") {
    std::vector<double> probs = {0.5, 0.0, 0.5};
    auto counts = sample_counts(probs, 10000, 42u);
    CHECK(counts[0] + counts[1] + counts[2] == 10000);
    CHECK(counts[1] == 0);
    CHECK(counts == sample_counts(probs, 10000, 42u));
    CHECK(counts != sample_counts(probs, 10000, 43u));

    // Four-sigma binomial envelope for the fixed seed.
    double sigma = std::sqrt(0.25 * 10000.0);
    CHECK(std::abs(static_cast<double>(counts[0]) - 5000.0) < 4.0 * sigma);

    CHECK(sample_counts(probs, 0, 1u) == std::vector<std::int64_t>{0, 0, 0});
}

TEST_CASE("sampling validates the distribution") {
    CHECK_THROWS_AS(sample_counts({0.5, -0.1}, 10, 1u), DomainError);
    CHECK_THROWS_AS(sample_counts({0.0, 0.0}, 10, 1u), DomainError);
    CHECK_THROWS_AS(sample_counts({std::nan(""), 1.0}, 10, 1u), DomainError);
    CHECK_THROWS_AS(sample_counts({}, 10, 1u), DomainError);
}

TEST_CASE("coincidence sampling concentrates on the supported cells") {
    CoincidenceTable t;
    t.p_select = 0.5;
    t.probs << 1.0, 0.0, 0.0, 0.0;
    auto counts = sample_shots(t, 500, 9u);
    CHECK(counts(0, 0) == 500);
    CHECK(counts(0, 1) + counts(1, 0) + counts(1, 1) == 0);

    CoincidenceTable law = coincidences({kPi / 3.0, 0.0});
    auto sampled = sample_shots(law, 100000, 7u);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            double p = law.probs(i, j);
            double sigma = std::sqrt(p * (1.0 - p) * 100000.0);
            CHECK(std::abs(static_cast<double>(sampled(i, j)) - p * 100000.0) <
                  4.0 * sigma + 1.0);
        }
    }
}
