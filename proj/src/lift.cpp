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

#include "fockforge/lift.hpp"

#include <cmath>
#include <vector>

#include "fockforge/permanent.hpp"

namespace fockforge {

namespace {

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) {
        f *= i;
    }
    return f;
}

std::vector<int> repeated_modes(const Occupation& pattern) {
    std::vector<int> modes;
    modes.reserve(static_cast<size_t>(pattern.total()));
    for (int m = 0; m < pattern.modes(); ++m) {
        for (int k = 0; k < pattern[m]; ++k) {
            modes.push_back(m);
        }
    }
    return modes;
}

double pattern_norm(const Occupation& pattern) {
    double f = 1.0;
    for (int m = 0; m < pattern.modes(); ++m) {
        f *= factorial(pattern[m]);
    }
    return f;
}

}  // namespace

Complex fock_amplitude(const ModeUnitary& u, const Occupation& in, const Occupation& out) {
    if (in.modes() != u.dim() || out.modes() != u.dim()) {
        throw DomainError("pattern mode count does not match the unitary");
    }
    if (in.total() != out.total()) {
        throw DomainError("transition amplitude requires equal photon numbers");
    }
    const auto cols = repeated_modes(in);
    const auto rows = repeated_modes(out);
    const auto n = static_cast<Eigen::Index>(cols.size());
    Eigen::MatrixXcd sub(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            sub(r, c) = u.matrix()(rows[static_cast<size_t>(r)], cols[static_cast<size_t>(c)]);
        }
    }
    return permanent_fast(sub) / std::sqrt(pattern_norm(in) * pattern_norm(out));
}

FockState evolve(const FockState& s, const ModeUnitary& u) {
    if (s.modes() != u.dim()) {
        throw DomainError("state mode count does not match the unitary");
    }
    FockState out(s.modes());
    auto n = s.photons();
    if (!n) {
        return out;
    }
    for (const auto& target : enumerate_basis(s.modes(), *n)) {
        Complex amp(0.0, 0.0);
        for (const auto& [source, a] : s.amplitudes()) {
            amp += a * fock_amplitude(u, source, target);
        }
        out.set_amplitude(target, amp);
    }
    return out;
}

}  // namespace fockforge
