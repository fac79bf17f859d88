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

#include "fockforge/operator_algebra.hpp"

#include <algorithm>
#include <cmath>

namespace fockforge {

OperatorPolynomial::OperatorPolynomial(int modes) : modes_(modes) {
    if (modes < 1) {
        throw DomainError("mode count must be at least 1");
    }
}

OperatorPolynomial OperatorPolynomial::creation_product(int modes, std::vector<int> photon_modes,
                                                        Complex coeff) {
    OperatorPolynomial p(modes);
    p.add_term(std::move(photon_modes), coeff);
    return p;
}

OperatorPolynomial OperatorPolynomial::for_basis_state(const Occupation& pattern) {
    double norm = 1.0;
    std::vector<int> monomial;
    for (int m = 0; m < pattern.modes(); ++m) {
        for (int k = 1; k <= pattern[m]; ++k) {
            norm *= k;
            monomial.push_back(m);
        }
    }
    return creation_product(pattern.modes(), std::move(monomial),
                            Complex(1.0 / std::sqrt(norm), 0.0));
}

void OperatorPolynomial::add_term(Monomial monomial, Complex coeff) {
    for (int m : monomial) {
        if (m < 0 || m >= modes_) {
            throw DomainError("creation operator mode index out of range");
        }
    }
    std::sort(monomial.begin(), monomial.end());
    auto [it, inserted] = terms_.try_emplace(std::move(monomial), coeff);
    if (!inserted) {
        it->second += coeff;
    }
}

void OperatorPolynomial::prune(double threshold) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) < threshold) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
}

OperatorPolynomial substitute(const OperatorPolynomial& p, const ModeUnitary& u) {
    if (p.modes() != u.dim()) {
        throw DomainError("polynomial mode count does not match the unitary");
    }
    const int m = p.modes();
    OperatorPolynomial out(m);
    for (const auto& [monomial, coeff] : p.terms()) {
        // Expand prod_t (sum_j U(j, monomial[t]) b_j^†) one factor at a time.
        std::map<OperatorPolynomial::Monomial, Complex> partial{{{}, coeff}};
        for (int k : monomial) {
            std::map<OperatorPolynomial::Monomial, Complex> next;
            for (const auto& [modes_so_far, c] : partial) {
                for (int j = 0; j < m; ++j) {
                    Complex w = c * u.matrix()(j, k);
                    if (w == Complex(0.0, 0.0)) {
                        continue;
                    }
                    auto key = modes_so_far;
                    key.insert(std::upper_bound(key.begin(), key.end(), j), j);
                    next[std::move(key)] += w;
                }
            }
            partial = std::move(next);
        }
        for (auto& [mono, c] : partial) {
            out.add_term(mono, c);
        }
    }
    out.prune(kCoefficientPrune);
    return out;
}

FockState to_fock_state(const OperatorPolynomial& p) {
    FockState s(p.modes());
    std::optional<size_t> degree;
    for (const auto& [monomial, coeff] : p.terms()) {
        if (degree && monomial.size() != *degree) {
            throw DomainError("polynomial mixes photon numbers");
        }
        degree = monomial.size();
        std::vector<int> counts(static_cast<size_t>(p.modes()), 0);
        for (int m : monomial) {
            counts[static_cast<size_t>(m)] += 1;
        }
        double norm = 1.0;
        for (int c : counts) {
            for (int k = 2; k <= c; ++k) {
                norm *= k;
            }
        }
        s.add_amplitude(Occupation(std::move(counts)), coeff * std::sqrt(norm));
    }
    return s;
}

}  // namespace fockforge
