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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "fockforge/common.hpp"

namespace fockforge {

// Reference permanent: explicit sum over all n! permutations. Exact up to
// rounding, but only usable for small matrices; serves as the independent
// cross-check for permanent_fast. The permanent of the empty matrix is 1.
template <typename Derived>
typename Derived::Scalar permanent_naive(const Eigen::MatrixBase<Derived>& expr) {
    using Scalar = typename Derived::Scalar;
    const auto m = expr.eval();
    const auto n = m.rows();
    if (n != m.cols()) {
        throw DomainError("permanent requires a square matrix");
    }
    if (n > 10) {
        throw DomainError("permanent_naive supports dimensions up to 10");
    }
    if (n == 0) {
        return Scalar(1);
    }
    std::vector<Eigen::Index> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), Eigen::Index{0});
    Scalar sum(0);
    do {
        Scalar prod(1);
        for (Eigen::Index i = 0; i < n; ++i) {
            prod *= m(i, perm[static_cast<size_t>(i)]);
        }
        sum += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

// Glynn's formula evaluated over a Gray-code walk of the row sign vectors:
//   per(M) = 2^(1-n) * sum_{d, d_0=+1} (prod_k d_k) * prod_j (sum_i d_i M(i,j)).
// Each Gray-code step flips one row sign and updates the n column sums in
// O(n), giving O(2^(n-1) * n) total work. The permanent of the empty matrix
// is 1.
template <typename Derived>
typename Derived::Scalar permanent_fast(const Eigen::MatrixBase<Derived>& expr) {
    using Scalar = typename Derived::Scalar;
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m = expr;
    const auto n = m.rows();
    if (n != m.cols()) {
        throw DomainError("permanent requires a square matrix");
    }
    if (n > 30) {
        throw DomainError("permanent_fast supports dimensions up to 30");
    }
    if (n == 0) {
        return Scalar(1);
    }
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> colsum = m.colwise().sum();
    Scalar total = colsum.prod();
    double sign = 1.0;
    const std::uint64_t steps = std::uint64_t{1} << (n - 1);
    std::uint64_t gray = 0;
    for (std::uint64_t k = 1; k < steps; ++k) {
        const std::uint64_t next = k ^ (k >> 1);
        const int bit = std::countr_zero(gray ^ next);
        // Bit b of the Gray code holds the sign of row b+1 (row 0 is pinned
        // to +1); flipping it moves that row's contribution by -/+ 2.
        const double step = (next >> bit) & 1 ? -2.0 : 2.0;
        colsum += Scalar(step) * m.row(bit + 1).transpose();
        gray = next;
        sign = -sign;
        total += Scalar(sign) * colsum.prod();
    }
    return total / Scalar(static_cast<double>(steps));
}

}  // namespace fockforge
