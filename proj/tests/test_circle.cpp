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

#include "doctest.h"
#include "jetcircle/circle.hpp"

using namespace jetcircle;

namespace {

// Globally generating tuples of n+1 polynomials of degree <= e, by brute force.
std::uint64_t gg_count(const PrimeField& K, std::size_t vars, std::size_t e) {
    const std::size_t N = vars * (e + 1);
    std::vector<std::uint32_t> c(N, 0);
    std::uint64_t total = 1, count = 0;
    for (std::size_t i = 0; i < N; ++i) total *= K.p();
    for (std::uint64_t i = 0; i < total; ++i) {
        std::uint64_t v = i;
        for (auto& x : c) x = v % K.p(), v /= K.p();
        if (globally_generates_poly(K, c.data(), vars, e)) ++count;
    }
    return count;
}

DualFunctional scaled(const PrimeField& K, const DualFunctional& a, std::uint32_t lambda) {
    DualFunctional b = a;
    for (auto& part : b.parts)
        for (auto& x : part) x = K.mul(x, lambda);
    return b;
}

}  // namespace

TEST_CASE("S(alpha) at the trivial functional") {
    PrimeField K(3);
    const auto C = SymmetricForm::conic(K);
    const std::uint64_t gg1 = gg_count(K, 3, 1);
    CHECK(S_alpha(C, 1, 0, DualFunctional(2, 0)) == CyclotomicSum::integer(3, gg1));
    CHECK(S_alpha(C, 1, 1, DualFunctional(2, 1)) == CyclotomicSum::integer(3, gg1 * 729));
}

TEST_CASE("S(alpha) fast path agrees with direct enumeration") {
    PrimeField K(3);
    const auto C = SymmetricForm::conic(K);
    for (std::uint64_t i = 0; i < 729; i += 11) {
        const auto a = dual_from_index(K, 2, 1, i);
        CHECK(S_alpha(C, 1, 1, a) == S_alpha(C, 1, 1, a, Budget::standard(), SumMode::direct));
    }
    const SumTable T(C, 1, 1);
    for (std::uint64_t i = 0; i < 729; i += 17) {
        const auto a = dual_from_index(K, 2, 1, i);
        CHECK(T.S(a) == S_alpha(C, 1, 1, a));
    }
}

TEST_CASE("S(alpha) is invariant under alpha -> lambda^d alpha") {
    PrimeField K(5);
    const auto F = SymmetricForm::fermat(K, 1, 3);
    const SumTable T(F, 1, 1);
    for (std::uint64_t i = 0; i < 390625; i += 9973) {
        const auto a = dual_from_index(K, 3, 1, i);
        for (std::uint32_t l = 2; l < 5; ++l) CHECK(T.S(scaled(K, a, K.mul(l, K.mul(l, l)))) == T.S(a));
    }
}

TEST_CASE("S(alpha, beta) examples") {
    PrimeField K(3);
    const auto C = SymmetricForm::conic(K);
    const mpz_class x1 = ipow(3, 6);  // (m+1)(n+1)(e+1) at e = 1, m = 0
    const DualFunctional zero(2, 0);
    CHECK(S_alpha_beta(C, 1, 0, zero, zero) == CyclotomicSum::integer(3, gg_count(K, 3, 1) * x1));
    for (std::uint64_t i = 0; i < 27; i += 4) {
        const auto a = dual_from_index(K, 2, 0, i);
        CHECK(S_alpha_beta(C, 1, 0, a, zero) == S_alpha(C, 1, 0, a).scaled(x1));
        for (std::uint64_t j = 1; j < 27; j += 6) {
            const auto b = dual_from_index(K, 2, 0, j);
            CHECK(S_alpha_beta(C, 1, 0, a, b) == S_alpha_beta(C, 1, 0, a, b, Budget::standard(), SumMode::direct));
        }
    }
}

TEST_CASE("T for major functionals") {
    PrimeField K(3);
    const auto C = SymmetricForm::conic(K);
    const std::vector<JetSection> y{JetSection::from_layers(2, {{1, 0, 0}}), JetSection::from_layers(2, {{0, 1, 0}}),
                                    JetSection::from_layers(2, {{0, 0, 1}})};
    CHECK(T_major(C, 2, DualFunctional(4, 0), y) == CyclotomicSum::integer(3, ipow(3, 9)));
    const DegreeTable deg(K, 4);
    std::size_t tested = 0;
    for (std::uint64_t i = 1; i < deg.size(); ++i) {
        if (deg.degree(i) > 3) continue;
        const auto a = dual_from_index(K, 4, 0, i);
        CHECK(T_major(C, 2, a, y).is_zero());
        if (i % 5 == 0) CHECK(T_major(C, 2, a, y, SumMode::direct).is_zero());
        ++tested;
    }
    CHECK(tested > 100);
    const std::vector<JetSection> bad{JetSection::from_layers(2, {{0, 1, 0}}), JetSection::from_layers(2, {{0, 0, 1}}),
                                      JetSection(2, 0)};
    CHECK_THROWS_AS(T_major(C, 2, DualFunctional(4, 0), bad), Error);
}

TEST_CASE("arc classification") {
    PrimeField K(3);
    const auto zero = classify_arc(K, DualFunctional(4, 1), 2);
    CHECK(zero.major);
    CHECK(zero.Z.is_zero());
    const DegreeTable deg(K, 4);
    std::optional<std::uint64_t> three, four;
    for (std::uint64_t i = 0; i < deg.size(); ++i) {
        if (deg.degree(i) == 3 && !three) three = i;
        if (deg.degree(i) == 4 && !four) four = i;
    }
    REQUIRE(three);
    const auto l3 = classify_arc(K, dual_from_index(K, 4, 0, *three), 2);
    CHECK(l3.major);
    CHECK(l3.degree == 3);
    if (four) CHECK_FALSE(classify_arc(K, dual_from_index(K, 4, 0, *four), 2).major);
    // deg beta = e + 2 makes the pair minor. At e = 1, de = 2, every degree-3 functional qualifies.
    const DegreeTable d2(K, 2);
    for (std::uint64_t i = 0; i < d2.size(); ++i)
        if (d2.degree(i) == 3) {
            const auto pr = classify_arc_pair(K, DualFunctional(2, 0), dual_from_index(K, 2, 0, i), 1);
            CHECK_FALSE(pr.major);
            break;
        }
}

TEST_CASE("orthogonality identities") {
    PrimeField K(3);
    const auto C = SymmetricForm::conic(K);
    const auto r0 = check_orthogonality(C, 2, 0);
    CHECK(r0.verdict == "equal");
    CHECK(r0.details["lhs_value"] == ipow(3, 5).get_si() * 48);
    const auto r1 = check_orthogonality(C, 2, 1);
    CHECK(r1.verdict == "equal");
    CHECK(r1.details["factor_exponent"] == 10);
    const auto empty = check_orthogonality(C, 1, 0);
    CHECK(empty.verdict == "equal");
    CHECK(empty.details["lhs_value"] == 0);
    CHECK(check_orthogonality(C, 2, 0, true).verdict == "equal");
}

TEST_CASE("major arc identity") {
    PrimeField K(3);
    const auto C = SymmetricForm::conic(K);
    const auto r = check_major_identity(C, 2, 1);
    CHECK(r.verdict == "equal");
    CHECK(r.details["factor_exponent"] == 9);
    const auto marginal = check_major_identity(C, 2, 1, false, Budget::standard(), 1000);
    CHECK(marginal.details["method"] == "marginal");
    CHECK(marginal.verdict == "equal");
    const auto degenerate = check_major_identity(C, 1, 1);
    CHECK(degenerate.verdict == "equal");
    CHECK(degenerate.details["lhs_value"] == 0);
    CHECK_THROWS_AS(check_major_identity(C, 2, 0), Error);
}

TEST_CASE("character orthogonality on jets") {
    PrimeField K(3);
    CHECK(check_character_orthogonality(K, 2, 1).passed());
    CHECK(check_character_orthogonality(PrimeField(5), 1, 1).passed());
}

TEST_CASE("N counts") {
    PrimeField K(3);
    const auto C = SymmetricForm::conic(K);
    // alpha = 0: every tuple counts.
    for (long k1 : {0l, 1l})
        for (std::size_t s : {0u, 1u})
            CHECK(N_count(C, 2, DualFunctional(4, 1), k1, k1 + 1, s) == ipow(3, (k1 + 1) * 3 * 1 * (3 - s)));
    for (std::uint64_t i = 0; i < 59049; i += 4001) {
        const auto a = dual_from_index(K, 4, 1, i);
        for (long k2 = 0; k2 <= 2; ++k2)
            for (long k1 = std::max(0l, k2 - 1); k1 <= 1; ++k1)
                CHECK(N_count(C, 2, a, k1, k2, 1) == N_count(C, 2, a, k1, k2, 1, Budget::standard(), NMode::definition));
    }
}

TEST_CASE("Weyl inequality on small instances") {
    PrimeField K(3);
    const auto C = SymmetricForm::conic(K);
    const auto zero = check_weyl(C, 2, 1, DualFunctional(4, 1));
    CHECK(zero.verdict == "holds");
    WeylChecker W(C, 2, 1);
    std::size_t n = 0;
    for (const auto& a : weyl_sample(K, 4, 1, 1, 0, 1)) {
        CHECK(W.check(a).verdict == "holds");
        ++n;
    }
    CHECK(n > 0);
    const auto a = dual_from_index(K, 4, 1, 1234);
    CHECK(check_weyl(C, 2, 1, a, DualFunctional(4, 1)).verdict == "holds");
}

TEST_CASE("weyl sample is deterministic and covers low degree") {
    PrimeField K(3);
    const auto s1 = weyl_sample(K, 4, 1, 2, 10, 5), s2 = weyl_sample(K, 4, 1, 2, 10, 5);
    CHECK(s1 == s2);
    const DegreeTable deg(K, 4);
    std::size_t low = 0;
    for (std::uint64_t i = 0; i < deg.size(); ++i)
        if (deg.degree(i) <= 2) ++low;
    CHECK(s1.size() == low * 243 + 10);
}

TEST_CASE("Weyl comparison verdicts") {
    CHECK(weyl_compare(CyclotomicSum::integer(3, 5), 5, 2).verdict == "holds");
    CHECK(weyl_compare(CyclotomicSum::integer(3, 6), 5, 2).verdict == "fails");
    // |1 + zeta_5|^2 is irrational; bounds on either side are decided by intervals.
    const auto v = CyclotomicSum::unit(5, 0) + CyclotomicSum::unit(5, 1);
    CHECK(weyl_compare(v, mpq_class(3, 2), 3).verdict == "fails");
    CHECK(weyl_compare(v, 3, 3).verdict == "holds");
}

TEST_CASE("shrinking lemma") {
    PrimeField K(3);
    const auto C = SymmetricForm::conic(K);
    const auto zero = check_shrink(C, 2, DualFunctional(4, 0), 0, 1);
    CHECK(zero.verdict == "holds");
    CHECK(zero.tightness == doctest::Approx(1.0));
    CHECK(check_shrink(C, 2, dual_from_index(K, 4, 0, 7), 0, 0).verdict == "holds");
    for (std::uint64_t i = 3; i < 243; i += 12) CHECK(check_shrink(C, 2, dual_from_index(K, 4, 0, i), 0, 1).passed());
}

TEST_CASE("t-vanishing on the conic") {
    PrimeField K(3);
    const auto r = check_t_vanishing(SymmetricForm::conic(K), 2, 5, 3);
    CHECK(r.verdict == "holds");
    CHECK(r.details["slow_mismatches"] == 0);
}

TEST_CASE("Diophantine audit for high-degree functionals") {
    PrimeField K(3);
    const auto C = SymmetricForm::conic(K);
    const DegreeTable deg(K, 4);
    std::size_t n = 0;
    for (std::uint64_t i = 0; i < deg.size() && n < 10; ++i)
        if (deg.degree(i) == 3) {
            CHECK(dioph_audit(C, 2, dual_from_index(K, 4, 0, i), 0).passed());
            ++n;
        }
}
