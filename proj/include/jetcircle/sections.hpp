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

#ifndef JETCIRCLE_SECTIONS_HPP
#define JETCIRCLE_SECTIONS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "jetcircle/arith.hpp"

namespace jetcircle {

// Polynomial of degree <= r in x with coefficients in F_p[t]/t^(m+1).
// Storage: c[i*(m+1)+k] is the coefficient of x^i t^k.
struct JetSection {
    std::size_t r = 0;
    std::size_t m = 0;
    std::vector<std::uint32_t> c;

    JetSection() = default;
    JetSection(std::size_t r_, std::size_t m_) : r(r_), m(m_), c((r_ + 1) * (m_ + 1), 0) {}

    static JetSection constant(std::size_t r, std::size_t m, std::uint32_t v);
    // From t-layers: layers[k][i] is the coefficient of x^i t^k.
    static JetSection from_layers(std::size_t r, const std::vector<std::vector<std::uint32_t>>& layers);

    std::uint32_t& at(std::size_t i, std::size_t k) { return c[i * (m + 1) + k]; }
    std::uint32_t at(std::size_t i, std::size_t k) const { return c[i * (m + 1) + k]; }
    JetScalar coefficient(std::size_t i) const;
    std::vector<std::uint32_t> layer(std::size_t k) const;
    std::vector<std::uint32_t> mod_t() const { return layer(0); }
    std::size_t dimension() const noexcept { return (r + 1) * (m + 1); }
    bool is_zero() const;
    bool operator==(const JetSection& o) const = default;
};

JetSection add_sections(const PrimeField& F, const JetSection& a, const JetSection& b);
JetSection sub_sections(const PrimeField& F, const JetSection& a, const JetSection& b);
JetSection scale_section(const PrimeField& F, const JetSection& a, std::uint32_t s);
JetSection mul_sections(const PrimeField& F, const JetSection& f, const JetSection& g);
// Raises the degree bound without changing the polynomial.
JetSection widen(const JetSection& a, std::size_t r);

// Element of P_{r,m}^dual: parts[k][i] pairs with x^i in the t^k slot.
struct DualFunctional {
    std::size_t r = 0;
    std::size_t m = 0;
    std::vector<std::vector<std::uint32_t>> parts;

    DualFunctional() = default;
    DualFunctional(std::size_t r_, std::size_t m_) : r(r_), m(m_), parts(m_ + 1, std::vector<std::uint32_t>(r_ + 1, 0)) {}

    // alpha(y) in R_m with t^k coefficient sum_{i+j=k} alpha_i(y_j).
    JetScalar apply(const PrimeField& F, const JetSection& y) const;
    bool is_zero() const;
    bool operator==(const DualFunctional& o) const = default;
};

// Pairing of one part with a polynomial layer.
std::uint32_t pair_layer(const PrimeField& F, const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& y);

// Effective divisor on P^1: monic finite part h (low to high coefficients) plus multiplicity at infinity.
struct DivisorP1 {
    std::vector<std::uint32_t> h{1};
    std::size_t k_inf = 0;

    std::size_t degree() const noexcept { return h.size() - 1 + k_inf; }
    bool is_zero() const noexcept { return degree() == 0; }
    std::string to_string() const;
    bool operator==(const DivisorP1& o) const = default;
};

std::vector<std::vector<std::uint32_t>> vanishing_subspace(const PrimeField& F, std::size_t r, const DivisorP1& Z);
bool factors_through(const PrimeField& F, const DualFunctional& alpha, const DivisorP1& Z);
bool part_factors_through(const PrimeField& F, const std::vector<std::uint32_t>& alpha0, const DivisorP1& Z);

struct MinimalDivisor {
    DivisorP1 Z;
    std::size_t degree = 0;
    bool unique_below_bound = true;
    std::size_t minimizers = 1;
};

// Scans divisors by degree; uniqueness is reported relative to uniqueness_bound when given.
MinimalDivisor minimal_divisor(const PrimeField& F, const DualFunctional& alpha,
                               std::optional<std::size_t> uniqueness_bound = std::nullopt);
MinimalDivisor minimal_divisor_part(const PrimeField& F, const std::vector<std::uint32_t>& alpha0, std::size_t r,
                                    std::optional<std::size_t> uniqueness_bound = std::nullopt);

bool globally_generates(const PrimeField& F, const std::vector<JetSection>& x);
// Tuple of polynomials over F_p of degree <= e: layout coeffs[j*(e+1)+i].
bool globally_generates_poly(const PrimeField& F, const std::uint32_t* coeffs, std::size_t count, std::size_t e);

// Polynomial gcd over F_p (monic, or empty for zero).
std::vector<std::uint32_t> poly_gcd(const PrimeField& F, std::vector<std::uint32_t> a, std::vector<std::uint32_t> b);

void for_each_dual(const PrimeField& F, std::size_t r, std::size_t m, const Budget& budget,
                   const std::function<void(const DualFunctional&)>& fn);
DualFunctional dual_from_index(const PrimeField& F, std::size_t r, std::size_t m, std::uint64_t index);
std::uint64_t dual_index(const PrimeField& F, const DualFunctional& a);
std::vector<DivisorP1> enumerate_divisors(const PrimeField& F, std::size_t degree, const Budget& budget = Budget::standard());
std::vector<DualFunctional> enumerate_duals(const PrimeField& F, std::size_t r, std::size_t m, const Budget& budget);

// Minimal-divisor data for every t^0 part on P_r, indexed by the base-p value of the part
// (coordinate 0 least significant).
class DegreeTable {
   public:
    DegreeTable(const PrimeField& F, std::size_t r, std::optional<std::size_t> uniqueness_bound = std::nullopt);

    std::size_t r() const noexcept { return r_; }
    std::size_t size() const noexcept { return deg_.size(); }
    std::size_t degree(std::uint64_t part_index) const { return deg_[part_index]; }
    bool unique(std::uint64_t part_index) const { return unique_[part_index]; }
    std::size_t divisor_id(std::uint64_t part_index) const { return div_[part_index]; }
    const DivisorP1& divisor(std::size_t id) const { return divisors_[id]; }
    std::size_t divisor_count() const noexcept { return divisors_.size(); }

   private:
    std::size_t r_;
    std::vector<std::uint8_t> deg_;
    std::vector<std::uint8_t> unique_;
    std::vector<std::uint32_t> div_;
    std::vector<DivisorP1> divisors_;
};

std::uint64_t part_index(const PrimeField& F, const std::vector<std::uint32_t>& v);
std::vector<std::uint32_t> part_from_index(const PrimeField& F, std::size_t len, std::uint64_t index);

}  // namespace jetcircle

#endif
