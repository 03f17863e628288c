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

#ifndef JETCIRCLE_COUNTING_HPP
#define JETCIRCLE_COUNTING_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "jetcircle/geometry.hpp"
#include "jetcircle/linalg.hpp"

namespace jetcircle {

using JetTuple = std::vector<JetSection>;

struct CountParams {
    std::uint32_t p = 0;
    std::size_t n = 0, d = 0, e = 0, m = 0;
    std::string form_id;
};

struct CountRecord {
    std::string kind;  // "Mm" or "M1m"
    CountParams params;
    mpz_class raw_count;
    mpq_class normalized;
    long exponent = 0;
};

// mu = (n+1)(e+1) - (de+1) - 1, the g = 0 value.
long mu_genus0(std::size_t n, std::size_t d, std::size_t e);

enum class CountMode { fast, exhaustive };

CountRecord count_Mm(const SymmetricForm& F, std::size_t e, std::size_t m, const Budget& budget = Budget::standard(),
                     CountMode mode = CountMode::fast, unsigned workers = 0);
CountRecord count_M1m(const SymmetricForm& F, std::size_t e, std::size_t m, const Budget& budget = Budget::standard(),
                      CountMode mode = CountMode::fast, unsigned workers = 0);

struct LwTrend {
    std::vector<CountRecord> records;
    bool increasing = true;
    // |normalized - 1| per prime, as exact rationals
    std::vector<mpq_class> distance_to_one;
};

// The form is rebuilt for each prime from the given source ("conic", "fermat", or a form file).
LwTrend lw_trend(const std::string& form_source, std::size_t n, std::size_t d, std::size_t e, std::size_t m,
                 const std::vector<std::uint32_t>& primes, const Budget& budget = Budget::standard());

mpz_class count_jet_multilinear(const SymmetricForm& F, std::size_t k, const Budget& budget = Budget::standard(),
                                CountMode mode = CountMode::fast);
mpz_class count_psi_zero_sections(const SymmetricForm& F, std::size_t e, std::size_t s, std::size_t k,
                                  const Budget& budget = Budget::standard(), CountMode mode = CountMode::fast);

// Visits every point of M_m (globally generating x with F(x) = 0 in P_{de,m}).
void for_each_Mm_point(const SymmetricForm& F, std::size_t e, std::size_t m, const std::function<void(const JetTuple&)>& fn);

// Matrix of z -> sum_j z_j g_j from P_{e,m}^{n+1} to P_{e+r,m}; column block j uses JetSection layout.
FpMatrix pairing_matrix(const PrimeField& K, const std::vector<JetSection>& g, std::size_t e);

JetTuple tuple_from_flat(const std::uint32_t* flat, std::size_t vars, std::size_t e, std::size_t m);

}  // namespace jetcircle

#endif
