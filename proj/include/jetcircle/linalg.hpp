/*
   Copyright 2026 The jetcircle Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef JETCIRCLE_LINALG_HPP
#define JETCIRCLE_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "jetcircle/arith.hpp"

namespace jetcircle {

// Dense row-major matrix over F_p.
class FpMatrix {
   public:
    FpMatrix() = default;
    FpMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::uint32_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    std::uint32_t* row(std::size_t i) { return a_.data() + i * cols_; }
    const std::uint32_t* row(std::size_t i) const { return a_.data() + i * cols_; }

   private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::uint32_t> a_;
};

// Reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(const PrimeField& F, FpMatrix& A);
std::size_t rank(const PrimeField& F, FpMatrix A);
// Basis of {x : A x = 0}.
std::vector<std::vector<std::uint32_t>> kernel_basis(const PrimeField& F, FpMatrix A);
// Basis of the column space, as reduced vectors.
std::vector<std::vector<std::uint32_t>> image_basis(const PrimeField& F, const FpMatrix& A);
// Some x with A x = b, if one exists.
std::optional<std::vector<std::uint32_t>> solve(const PrimeField& F, const FpMatrix& A, const std::vector<std::uint32_t>& b);

// Precomputed solver for A x = b with fixed A: particular solutions plus kernel.
class LinearSolver {
   public:
    LinearSolver(const PrimeField& F, const FpMatrix& A);

    std::size_t rank() const noexcept { return pivots_.size(); }
    std::size_t nullity() const noexcept { return kernel_.size(); }
    const std::vector<std::vector<std::uint32_t>>& kernel() const noexcept { return kernel_; }
    bool surjective() const noexcept { return pivots_.size() == rows_; }
    std::optional<std::vector<std::uint32_t>> particular(const std::vector<std::uint32_t>& b) const;

   private:
    PrimeField F_;
    std::size_t rows_, cols_;
    FpMatrix T_;  // row operations applied to the identity
    std::vector<std::size_t> pivots_;
    std::vector<std::vector<std::uint32_t>> kernel_;
};

// Visits every F_p-linear combination of basis vectors added to an offset.
template <class Fn>
void for_each_in_coset(const PrimeField& F, const std::vector<std::uint32_t>& offset,
                       const std::vector<std::vector<std::uint32_t>>& basis, Fn&& fn) {
    const std::size_t k = basis.size();
    const std::size_t n = offset.size();
    std::vector<std::uint32_t> coef(k, 0);
    std::vector<std::uint32_t> v = offset;
    const std::uint32_t p = F.p();
    while (true) {
        fn(static_cast<const std::vector<std::uint32_t>&>(v));
        std::size_t i = 0;
        for (; i < k; ++i) {
            for (std::size_t j = 0; j < n; ++j) v[j] = F.add(v[j], basis[i][j]);
            if (++coef[i] < p) break;
            coef[i] = 0;  // wrapped: v has returned to its previous value on this axis
        }
        if (i == k) break;
    }
}

}  // namespace jetcircle

#endif
