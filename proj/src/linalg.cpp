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

#include "jetcircle/linalg.hpp"

#include <utility>

namespace jetcircle {

std::vector<std::size_t> rref(const PrimeField& F, FpMatrix& A) {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    const std::size_t R = A.rows(), C = A.cols();
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t s = r;
        while (s < R && A.at(s, c) == 0) ++s;
        if (s == R) continue;
        if (s != r)
            for (std::size_t j = 0; j < C; ++j) std::swap(A.at(s, j), A.at(r, j));
        const std::uint32_t inv = F.inv(A.at(r, c));
        std::uint32_t* pr = A.row(r);
        for (std::size_t j = c; j < C; ++j) pr[j] = F.mul(pr[j], inv);
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r) continue;
            const std::uint32_t f = A.at(i, c);
            if (f == 0) continue;
            std::uint32_t* pi = A.row(i);
            for (std::size_t j = c; j < C; ++j) pi[j] = F.sub(pi[j], F.mul(f, pr[j]));
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

std::size_t rank(const PrimeField& F, FpMatrix A) { return rref(F, A).size(); }

std::vector<std::vector<std::uint32_t>> kernel_basis(const PrimeField& F, FpMatrix A) {
    const auto piv = rref(F, A);
    const std::size_t C = A.cols();
    std::vector<bool> is_piv(C, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<std::uint32_t>> out;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_piv[f]) continue;
        std::vector<std::uint32_t> v(C, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F.neg(A.at(i, f));
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<std::vector<std::uint32_t>> image_basis(const PrimeField& F, const FpMatrix& A) {
    FpMatrix T(A.cols(), A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) T.at(j, i) = A.at(i, j);
    const auto piv = rref(F, T);
    std::vector<std::vector<std::uint32_t>> out;
    for (std::size_t i = 0; i < piv.size(); ++i) out.emplace_back(T.row(i), T.row(i) + T.cols());
    return out;
}

std::optional<std::vector<std::uint32_t>> solve(const PrimeField& F, const FpMatrix& A, const std::vector<std::uint32_t>& b) {
    return LinearSolver(F, A).particular(b);
}

LinearSolver::LinearSolver(const PrimeField& F, const FpMatrix& A) : F_(F), rows_(A.rows()), cols_(A.cols()) {
    // Augment with the identity to record the row operations.
    FpMatrix M(rows_, cols_ + rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) M.at(i, j) = A.at(i, j);
        M.at(i, cols_ + i) = 1;
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t s = r;
        while (s < rows_ && M.at(s, c) == 0) ++s;
        if (s == rows_) continue;
        if (s != r)
            for (std::size_t j = 0; j < M.cols(); ++j) std::swap(M.at(s, j), M.at(r, j));
        const std::uint32_t inv = F.inv(M.at(r, c));
        for (std::size_t j = 0; j < M.cols(); ++j) M.at(r, j) = F.mul(M.at(r, j), inv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || M.at(i, c) == 0) continue;
            const std::uint32_t f = M.at(i, c);
            for (std::size_t j = 0; j < M.cols(); ++j) M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(r, j)));
        }
        pivots_.push_back(c);
        ++r;
    }
    T_ = FpMatrix(rows_, rows_ + cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) T_.at(i, j) = M.at(i, j);
    std::vector<bool> is_piv(cols_, false);
    for (auto c : pivots_) is_piv[c] = true;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_piv[f]) continue;
        std::vector<std::uint32_t> v(cols_, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots_.size(); ++i) v[pivots_[i]] = F.neg(T_.at(i, f));
        kernel_.push_back(std::move(v));
    }
}

std::optional<std::vector<std::uint32_t>> LinearSolver::particular(const std::vector<std::uint32_t>& b) const {
    // Transformed right-hand side: rows of the recorded operation matrix applied to b.
    std::vector<std::uint32_t> tb(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < rows_; ++j) acc += static_cast<std::uint64_t>(T_.at(i, cols_ + j)) * b[j];
        tb[i] = static_cast<std::uint32_t>(acc % F_.p());
    }
    for (std::size_t i = pivots_.size(); i < rows_; ++i)
        if (tb[i] != 0) return std::nullopt;
    std::vector<std::uint32_t> x(cols_, 0);
    for (std::size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = tb[i];
    return x;
}

}  // namespace jetcircle
