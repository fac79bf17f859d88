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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fockforge/common.hpp"

namespace fockforge {

// Photon counts per optical mode, e.g. (1,0,0,1) on four modes.
class Occupation {
   public:
    Occupation() = default;
    explicit Occupation(std::vector<int> counts);
    static Occupation vacuum(int modes);

    int modes() const { return static_cast<int>(counts_.size()); }
    int total() const;
    int operator[](int mode) const { return counts_[static_cast<size_t>(mode)]; }
    const std::vector<int>& counts() const { return counts_; }

    friend bool operator==(const Occupation&, const Occupation&) = default;

   private:
    std::vector<int> counts_;
};

// Canonical basis order: lexicographically descending photon counts, so
// (n,0,...,0) comes first and (0,...,0,n) last. Used as the map comparator so
// that iterating a state visits patterns in basis order.
struct BasisOrder {
    bool operator()(const Occupation& a, const Occupation& b) const;
};

// All occupation patterns of `photons` photons over `modes` modes, in the
// canonical order above. Size is C(photons + modes - 1, modes - 1).
std::vector<Occupation> enumerate_basis(int modes, int photons);

// A pure state with a fixed photon number, stored as a sparse map from
// occupation pattern to complex amplitude. Patterns absent from the map have
// amplitude zero. All stored patterns share the photon total; a state with no
// stored amplitudes is the zero vector (not the vacuum, which is the n = 0
// basis state).
class FockState {
   public:
    using AmplitudeMap = std::map<Occupation, Complex, BasisOrder>;

    explicit FockState(int modes);

    // Unit basis state for one pattern.
    static FockState basis_state(const Occupation& pattern);

    // Unit basis state with one photon created in each listed mode (repeats
    // allowed; order irrelevant). An empty list gives the vacuum.
    static FockState from_photons(int modes, const std::vector<int>& photon_modes);

    int modes() const { return modes_; }
    // Photon number shared by all stored patterns; nullopt for the zero state.
    std::optional<int> photons() const;

    Complex amplitude(const Occupation& pattern) const;
    void set_amplitude(const Occupation& pattern, Complex value);
    void add_amplitude(const Occupation& pattern, Complex value);

    double squared_norm() const;
    const AmplitudeMap& amplitudes() const { return amps_; }

    friend bool operator==(const FockState&, const FockState&) = default;

   private:
    void check_pattern(const Occupation& pattern) const;

    int modes_ = 0;
    AmplitudeMap amps_;
};

// <a|b>, conjugate-linear in the first argument. Both states must share the
// mode count and (when both are nonzero) the photon number.
Complex inner_product(const FockState& a, const FockState& b);

struct Normalized {
    FockState state;
    double norm;  // norm of the input, i.e. the scale that was divided out
};

// Scales to unit norm. Throws NotNormalizable when the squared norm is at or
// below tol.eps^2.
Normalized normalize(const FockState& s, ComplexTolerance tol = {});

// JSON round-trip. Emission uses 17 significant digits and lists amplitudes
// in canonical basis order:
//   {"modes":4,"photons":2,"amplitudes":[{"pattern":[1,0,0,1],"re":1,"im":0}]}
std::string to_json(const FockState& s);
FockState fock_state_from_json(std::string_view text);

}  // namespace fockforge
