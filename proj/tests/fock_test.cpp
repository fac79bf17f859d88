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
#include <random>

#include "doctest.h"
#include "fockforge/fock.hpp"
#include "test_util.hpp"

using namespace fockforge;

namespace {

Occupation occ(std::vector<int> counts) { return Occupation(std::move(counts)); }

}  // namespace

TEST_CASE("occupation validates its counts") {
    CHECK_THROWS_AS(occ({}), DomainError);
    CHECK_THROWS_AS(occ({1, -1}), DomainError);
    Occupation q = occ({2, 0, 1});
    CHECK(q.modes() == 3);
    CHECK(q.total() == 3);
    CHECK(q[0] == 2);
    CHECK(q[2] == 1);
    CHECK(Occupation::vacuum(4) == occ({0, 0, 0, 0}));
}

TEST_CASE("basis enumeration lists occupations in descending lexicographic order") {
    auto basis = enumerate_basis(3, 2);
    std::vector<Occupation> expected = {occ({2, 0, 0}), occ({1, 1, 0}), occ({1, 0, 1}),
                                        occ({0, 2, 0}), occ({0, 1, 1}), occ({0, 0, 2})};
    CHECK(basis == expected);

    BasisOrder before;
    for (size_t i = 0; i + 1 < basis.size(); ++i) {
        CHECK(before(basis[i], basis[i + 1]));
        CHECK_FALSE(before(basis[i + 1], basis[i]));
    }
}

TEST_CASE("basis sizes follow the stars-and-bars count") {
    // C(photons + modes - 1, modes - 1)
    CHECK(enumerate_basis(4, 2).size() == 10);
    CHECK(enumerate_basis(2, 2).size() == 3);
    CHECK(enumerate_basis(1, 5).size() == 1);
    CHECK(enumerate_basis(3, 0).size() == 1);
    CHECK(enumerate_basis(3, 0).front() == Occupation::vacuum(3));
    CHECK(enumerate_basis(4, 4).size() == 35);
}

TEST_CASE("from_photons places one creation per listed mode") {
    FockState s = FockState::from_photons(4, {0, 3});
    CHECK(s.photons() == 2);
    CHECK(s.amplitude(occ({1, 0, 0, 1})) == Complex(1.0, 0.0));
    CHECK(s.amplitudes().size() == 1);

    FockState doubled = FockState::from_photons(2, {0, 0});
    CHECK(doubled.amplitude(occ({2, 0})) == Complex(1.0, 0.0));

    CHECK(FockState::from_photons(2, {}).photons() == 0);
    CHECK_THROWS_AS(FockState::from_photons(2, {2}), DomainError);
}

TEST_CASE("states reject mixed photon numbers and foreign patterns") {
    FockState s(3);
    CHECK_FALSE(s.photons().has_value());
    s.set_amplitude(occ({1, 1, 0}), Complex(0.5, 0.0));
    CHECK(s.photons() == 2);
    CHECK_THROWS_AS(s.set_amplitude(occ({1, 0, 0}), Complex(1.0, 0.0)), DomainError);
    CHECK_THROWS_AS(s.set_amplitude(occ({1, 1}), Complex(1.0, 0.0)), DomainError);
    CHECK(s.amplitude(occ({0, 1, 1})) == Complex(0.0, 0.0));
}

TEST_CASE("zero amplitudes are erased and photon number resets") {
    FockState s(2);
    s.set_amplitude(occ({1, 1}), Complex(0.25, 0.0));
    CHECK(s.amplitudes().size() == 1);
    s.set_amplitude(occ({1, 1}), Complex(0.0, 0.0));
    CHECK(s.amplitudes().empty());
    CHECK_FALSE(s.photons().has_value());
    // A different photon sector becomes admissible again.
    s.set_amplitude(occ({1, 0}), Complex(1.0, 0.0));
    CHECK(s.photons() == 1);
}

TEST_CASE("add_amplitude accumulates") {
    FockState s(2);
    s.add_amplitude(occ({2, 0}), Complex(0.25, 0.5));
    s.add_amplitude(occ({2, 0}), Complex(0.25, -0.5));
    CHECK(s.amplitude(occ({2, 0})) == Complex(0.5, 0.0));
}

TEST_CASE("inner product is conjugate linear in its first argument") {
    FockState a(2), b(2);
    a.set_amplitude(occ({1, 0}), Complex(0.0, 1.0));
    b.set_amplitude(occ({1, 0}), Complex(1.0, 0.0));
    CHECK(inner_product(a, b) == Complex(0.0, -1.0));
    CHECK(inner_product(b, a) == Complex(0.0, 1.0));

    FockState c(2);
    c.set_amplitude(occ({0, 1}), Complex(1.0, 0.0));
    CHECK(inner_product(b, c) == Complex(0.0, 0.0));

    FockState wrong_modes(3);
    wrong_modes.set_amplitude(occ({1, 0, 0}), Complex(1.0, 0.0));
    CHECK_THROWS_AS(inner_product(b, wrong_modes), DomainError);

    FockState wrong_photons(2);
    wrong_photons.set_amplitude(occ({1, 1}), Complex(1.0, 0.0));
    CHECK_THROWS_AS(inner_product(b, wrong_photons), DomainError);
}

TEST_CASE("normalization rescales and rejects the zero state") {
    FockState s(2);
    s.set_amplitude(occ({2, 0}), Complex(3.0, 0.0));
    s.set_amplitude(occ({0, 2}), Complex(0.0, 4.0));
    Normalized n = normalize(s);
    CHECK(n.norm == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(n.state.squared_norm() == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(normalize(FockState(2)), NotNormalizable);
}

TEST_CASE("random states have unit norm and reproducible content") {
    std::mt19937_64 rng(11u);
    FockState s = fockforge::testing::random_state(4, 2, rng);
    CHECK(s.squared_norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.amplitudes().size() == 10);
}

TEST_CASE("json serialization matches the documented shape") {
    FockState s = FockState::basis_state(occ({1, 0, 0, 1}));
    CHECK(to_json(s) ==
          "{\"modes\":4,\"photons\":2,\"amplitudes\":["
          "{\"pattern\":[1,0,0,1],\"re\":1,\"im\":0}]}");
}

TEST_CASE("json round-trips bit-exact amplitudes") {
    std::mt19937_64 rng(17u);
    for (int trial = 0; trial < 20; ++trial) {
        FockState s = fockforge::testing::random_state(3, 2, rng);
        FockState back = fock_state_from_json(to_json(s));
        REQUIRE(back.amplitudes().size() == s.amplitudes().size());
        for (const auto& [pattern, amp] : s.amplitudes()) {
            CHECK(back.amplitude(pattern) == amp);
        }
    }
}

TEST_CASE("json parsing validates structure") {
    CHECK_THROWS_AS(fock_state_from_json("not json"), DomainError);
    CHECK_THROWS_AS(fock_state_from_json("{\"modes\":2}"), DomainError);
    CHECK_THROWS_AS(fock_state_from_json("{\"modes\":2,\"photons\":1,\"amplitudes\":["
                                         "{\"pattern\":[1,0,0],\"re\":1,\"im\":0}]}"),
                    DomainError);
    CHECK_THROWS_AS(fock_state_from_json("{\"modes\":2,\"photons\":1,\"amplitudes\":["
                                         "{\"pattern\":[1,1],\"re\":1,\"im\":0}]}"),
                    DomainError);
}
