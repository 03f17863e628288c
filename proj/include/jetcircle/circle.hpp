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

#ifndef JETCIRCLE_CIRCLE_HPP
#define JETCIRCLE_CIRCLE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "jetcircle/counting.hpp"
#include "jetcircle/geometry.hpp"
#include "jetcircle/report.hpp"
#include "jetcircle/sections.hpp"

namespace jetcircle {

// Sections u of P_{r,m} and functionals are indexed layer-major: digit k*(r+1)+i holds the
// coefficient of x^i t^k, layer 0 least significant.
std::uint64_t section_index(const PrimeField& K, const JetSection& u);
// gamma_k = alpha_0 + ... + alpha_{m-k}, so that psi_m(alpha(u)) = zeta^{sum_k <gamma_k, u_k>}.
std::vector<std::vector<std::uint32_t>> effective_functional(const PrimeField& K, const DualFunctional& a);
std::uint64_t gamma_index(const PrimeField& K, const DualFunctional& a);
DualFunctional dual_from_gamma(const PrimeField& K, std::size_t r, std::size_t m, std::uint64_t gamma);
// The t^0 part of the functional with the given gamma index, as a part index.
std::uint64_t alpha0_of_gamma(const PrimeField& K, std::size_t r, std::size_t m, std::uint64_t gamma);

// p-ary Fourier transform of a histogram: entry gamma holds the coefficient vector of
// sum_u H(u) zeta^{<gamma,u>}.
class DftTable {
   public:
    DftTable(std::uint32_t p, std::size_t digits, const std::vector<std::int64_t>& hist);
    CyclotomicSum at(std::uint64_t gamma) const;
    std::uint64_t size() const noexcept { return size_; }

   private:
    std::uint32_t p_;
    std::uint64_t size_;
    std::vector<std::int64_t> t_;
};

inline constexpr std::uint64_t kDefaultTableCap = 1ull << 22;

// H(u) = #{x globally generating : F(x) = u} over P_{de,m}.
std::vector<std::int64_t> value_histogram(const SymmetricForm& F, std::size_t e, std::size_t m, const Budget& budget);
// #{x globally generating : F(x) = 0 mod t^m, F(x)_m = w} over w in P_de.
std::vector<std::int64_t> top_histogram(const SymmetricForm& F, std::size_t e, std::size_t m, const Budget& budget);

// Histograms keyed by the gamma index of beta; key 0 is the plain value histogram. Only
// x0 whose t^0 gradient map is not surjective can contribute to nonzero keys.
struct PairHistograms {
    std::map<std::uint64_t, std::vector<std::int64_t>> by_beta;
    std::uint64_t nonsurjective_x0 = 0;
};
PairHistograms pair_histograms(const SymmetricForm& F, std::size_t e, std::size_t m, bool top_only, const Budget& budget);

// All S(alpha) at once.
class SumTable {
   public:
    SumTable(const SymmetricForm& F, std::size_t e, std::size_t m, const Budget& budget = Budget::standard(),
             std::uint64_t cap = kDefaultTableCap);
    CyclotomicSum S(const DualFunctional& a) const;
    CyclotomicSum at_gamma(std::uint64_t g) const { return table_->at(g); }
    std::uint64_t size() const noexcept { return table_->size(); }

   private:
    PrimeField K_;
    std::size_t de_, m_;
    std::unique_ptr<DftTable> table_;
};

// All S(alpha, beta), one transform per beta key.
class PairSumTable {
   public:
    PairSumTable(const SymmetricForm& F, std::size_t e, std::size_t m, const Budget& budget = Budget::standard(),
                 std::uint64_t cap = kDefaultTableCap);
    CyclotomicSum S(const DualFunctional& a, const DualFunctional& b) const;
    const std::map<std::uint64_t, DftTable>& tables() const noexcept { return tables_; }
    const mpz_class& x1_factor() const noexcept { return x1_factor_; }
    std::uint64_t size() const noexcept { return size_; }

   private:
    PrimeField K_;
    std::size_t de_, m_;
    std::uint64_t size_;
    mpz_class x1_factor_;
    std::map<std::uint64_t, DftTable> tables_;
};

enum class SumMode { fast, direct };

CyclotomicSum S_alpha(const SymmetricForm& F, std::size_t e, std::size_t m, const DualFunctional& a,
                      const Budget& budget = Budget::standard(), SumMode mode = SumMode::fast);
CyclotomicSum S_alpha_beta(const SymmetricForm& F, std::size_t e, std::size_t m, const DualFunctional& a,
                           const DualFunctional& b, const Budget& budget = Budget::standard(), SumMode mode = SumMode::fast);
// Sum over z in P_e^{n+1} of psi(alpha0(z . grad F(y mod t))).
CyclotomicSum T_major(const SymmetricForm& F, std::size_t e, const DualFunctional& alpha0, const std::vector<JetSection>& y,
                      SumMode mode = SumMode::fast);

struct ArcLabel {
    bool major = true;
    DivisorP1 Z;
    std::size_t degree = 0;
    bool unique = true;
};
ArcLabel classify_arc(const PrimeField& K, const DualFunctional& a, std::size_t e);
struct PairArcLabel {
    ArcLabel alpha, beta;
    bool major = true;
};
PairArcLabel classify_arc_pair(const PrimeField& K, const DualFunctional& a, const DualFunctional& b, std::size_t e);

CheckReport check_orthogonality(const SymmetricForm& F, std::size_t e, std::size_t m, bool pairs = false,
                                const Budget& budget = Budget::standard());
CheckReport check_major_identity(const SymmetricForm& F, std::size_t e, std::size_t m, bool pairs = false,
                                 const Budget& budget = Budget::standard(), std::uint64_t cap = kDefaultTableCap);
// Exhaustive over globally generating y via the closed form, plus `slow_slices` y's by direct z-enumeration.
CheckReport check_t_vanishing(const SymmetricForm& F, std::size_t e, std::size_t slow_slices = 20, std::uint64_t seed = 1,
                              const Budget& budget = Budget::standard());
// Character orthogonality on P_{r,m}: sum_alpha psi_m(alpha(y)) = #P^dual iff y = 0.
CheckReport check_character_orthogonality(const PrimeField& K, std::size_t r, std::size_t m);

enum class NMode { fast, definition };
mpz_class N_count(const SymmetricForm& F, std::size_t e, const DualFunctional& a, long k1, long k2, std::size_t s,
                  const Budget& budget = Budget::standard(), NMode mode = NMode::fast);

// Decides |S|^(2^(d-2)) <= rhs: exactly when |S|^2 is rational, otherwise by interval
// arithmetic at 64, 128, ... bits up to precision_cap, then "undecided".
CheckReport weyl_compare(const CyclotomicSum& S, const mpq_class& rhs, std::size_t d, long precision_cap = 256);

class WeylChecker {
   public:
    WeylChecker(const SymmetricForm& F, std::size_t e, std::size_t m, const Budget& budget = Budget::standard(),
                long precision_cap = 256);
    CheckReport check(const DualFunctional& a);
    CheckReport check_pair(const DualFunctional& a, const DualFunctional& b);
    const SumTable& table() const { return *table_; }

   private:
    const mpz_class& N_cached(const DualFunctional& a, std::size_t k);
    CheckReport compare(const std::string& name, const CyclotomicSum& S, const mpq_class& rhs, Json params, Json details);

    const SymmetricForm& F_;
    std::size_t e_, m_, mp_;
    Budget budget_;
    long prec_cap_;
    std::unique_ptr<SumTable> table_;
    std::unique_ptr<PairSumTable> pair_table_;
    std::map<std::vector<std::uint32_t>, mpz_class> n_cache_;
};

CheckReport check_weyl(const SymmetricForm& F, std::size_t e, std::size_t m, const DualFunctional& a,
                       const std::optional<DualFunctional>& b = std::nullopt, const Budget& budget = Budget::standard(),
                       long precision_cap = 256);
// Deterministic sample: every alpha whose t^0 part has degree <= max_degree, then `extra` uniform draws.
std::vector<DualFunctional> weyl_sample(const PrimeField& K, std::size_t de, std::size_t m, std::size_t max_degree,
                                        std::size_t extra, std::uint64_t seed, std::size_t limit = 0);

CheckReport check_shrink(const SymmetricForm& F, std::size_t e, const DualFunctional& a, std::size_t k, std::size_t s,
                         const Budget& budget = Budget::standard());
// Tests that N_s counts only tuples with Psi = 0 mod t^(k+1) once s exceeds the divisor bound.
CheckReport dioph_audit(const SymmetricForm& F, std::size_t e, const DualFunctional& a, std::size_t k,
                        const Budget& budget = Budget::standard());

}  // namespace jetcircle

#endif
