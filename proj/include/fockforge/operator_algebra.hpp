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
#include <vector>

#include "fockforge/circuit.hpp"
#include "fockforge/fock.hpp"

namespace fockforge {

// Polynomials in commuting mode creation operators. Each term is a monomial
// (a sorted multiset of mode indices, one entry per creation operator) with a
// complex coefficient. This gives a second, permanent-free route to Fock
// evolution: substitute the mode transformation into each creation operator
// and expand.
class OperatorPolynomial {
   public:
    // Sorted multiset of mode indices; {0, 0, 2} means b0^† b0^† b2^†.
    using Monomial = std::vector<int>;
    using TermMap = std::map<Monomial, Complex>;

    explicit OperatorPolynomial(int modes);

    // coeff * prod_k b_{modes[k]}^† (order irrelevant).
    static OperatorPolynomial creation_product(int modes, std::vector<int> photon_modes,
                                               Complex coeff = Complex(1.0, 0.0));

    // The polynomial that produces the unit basis state |pattern> when applied
    // to the vacuum, i.e. the creation product divided by sqrt(prod_i n_i!).
    static OperatorPolynomial for_basis_state(const Occupation& pattern);

    int modes() const { return modes_; }
    const TermMap& terms() const { return terms_; }

    void add_term(Monomial monomial, Complex coeff);

    // Drops terms with |coeff| < threshold.
    void prune(double threshold);

    friend bool operator==(const OperatorPolynomial&, const OperatorPolynomial&) = default;

   private:
    int modes_ = 0;
    TermMap terms_;
};

// Coefficients below this magnitude are dropped after expansion.
inline constexpr double kCoefficientPrune = 1e-14;

// Replaces every creation operator a_k^† by sum_j U(j,k) b_j^† and expands.
OperatorPolynomial substitute(const OperatorPolynomial& p, const ModeUnitary& u);

// Applies the polynomial to the vacuum. A monomial with occupation pattern q
// contributes coeff * sqrt(prod_i q_i!) to that pattern's amplitude. All
// terms must share the same degree (photon number); the empty polynomial maps
// to the zero state.
FockState to_fock_state(const OperatorPolynomial& p);

}  // namespace fockforge
