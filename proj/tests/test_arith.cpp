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

#include <random>

#include "doctest.h"
#include "jetcircle/arith.hpp"

using namespace jetcircle;

TEST_CASE("prime field arithmetic") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(101));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK_THROWS_AS(PrimeField(9), Error);
    PrimeField K(7);
    CHECK(K.add(5, 4) == 2);
    CHECK(K.reduce(-1) == 6);
    CHECK(K.mul(3, 5) == 1);
    CHECK(K.mul(3, K.inv(3)) == 1);
    CHECK(K.neg(0) == 0);
    for (std::uint32_t a = 1; a < 7; ++a) CHECK(K.mul(a, K.inv(a)) == 1);
    CHECK(ipow(3, 9) == 19683);
    CHECK(ipow(7, 60) > mpz_class("1000000000000000000000000000000000000000000000000"));
}

TEST_CASE("budget ceilings") {
    CHECK(Budget::standard().ceiling == 1000000000);
    CHECK(Budget::forced().ceiling == mpz_class("100000000000"));
    CHECK_NOTHROW(Budget::standard().require(1000000000, "at ceiling"));
    try {
        Budget::standard().require(ipow(7, 60), "probe");
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.kind() == ErrorKind::budget);
        CHECK(e.required() == ipow(7, 60));
        CHECK(std::string(e.what()).find(ipow(7, 60).get_str()) != std::string::npos);
    }
}

TEST_CASE("jet scalar ring") {
    PrimeField K(3);
    const JetScalar a{1, 1};
    CHECK(jet_mul(K, a, a) == JetScalar{1, 2});
    CHECK(jet_add(K, a, JetScalar{2, 2}) == JetScalar{0, 0});
    CHECK(jet_mul(K, JetScalar{0, 1, 0}, JetScalar{0, 1, 0}) == JetScalar{0, 0, 1});
    CHECK(jet_mul(K, JetScalar{0, 0, 1}, JetScalar{0, 1, 0}).is_zero());
}

TEST_CASE("psi_m examples") {
    PrimeField K3(3), K5(5);
    CHECK(psi_m(K3, JetScalar{0, 0, 0}) == CyclotomicSum::integer(3, 1));
    CHECK(psi_m(K3, JetScalar{1, 2}) == CyclotomicSum::integer(3, 1));
    CHECK(psi_m(K5, JetScalar{2, 0, 1}) == CyclotomicSum::unit(5, 3));
}

TEST_CASE("psi_m is additive-to-multiplicative") {
    std::mt19937_64 rng(11);
    for (std::uint32_t p : {3u, 5u, 7u}) {
        PrimeField K(p);
        std::uniform_int_distribution<std::uint32_t> c(0, p - 1);
        for (int trial = 0; trial < 200; ++trial) {
            JetScalar u(3), v(3);
            for (auto& x : u.coeffs) x = c(rng);
            for (auto& x : v.coeffs) x = c(rng);
            CHECK(psi_m(K, jet_add(K, u, v)) == psi_m(K, u) * psi_m(K, v));
        }
    }
}

TEST_CASE("cyclotomic accumulation and canonical form") {
    const auto z3 = CyclotomicSum::unit(3, 1);
    const auto acc = cyclo_accumulate(CyclotomicSum::zero(3), z3, 3);
    CHECK(acc[1] == 3);
    CHECK(acc == z3.scaled(3));
    CyclotomicSum s = CyclotomicSum::unit(3, 0) + CyclotomicSum::unit(3, 1) + CyclotomicSum::unit(3, 2);
    CHECK(s.is_zero());
    CHECK(s == CyclotomicSum::zero(3));
    CHECK(s.normalized().counts() == CyclotomicSum::zero(3).counts());
    const auto two = CyclotomicSum::unit(5, 2).scaled(2);
    CHECK(cyclo_accumulate(two, CyclotomicSum::unit(5, 2), -2).is_zero());
    CHECK(CyclotomicSum::from_counts(3, {5, 2, 2}) == CyclotomicSum::integer(3, 3));
    CHECK(CyclotomicSum::from_counts(3, {5, 2, 2}).is_rational());
    CHECK(CyclotomicSum::from_counts(3, {5, 2, 2}).rational_value() == 3);
    CHECK_FALSE(z3.is_rational());
    CHECK(z3 * z3.conj() == CyclotomicSum::integer(3, 1));
    CHECK(z3 * z3 * z3 == CyclotomicSum::integer(3, 1));
}

TEST_CASE("cyclo_magnitude examples") {
    const auto zero = cyclo_magnitude(CyclotomicSum::zero(3), 128);
    CHECK(zero.lo_double() == 0.0);
    CHECK(zero.hi_double() == 0.0);
    const auto nine = cyclo_magnitude(CyclotomicSum::integer(5, 9), 128);
    CHECK(nine.contains(mpq_class(9)));
    CHECK(nine.width_log2() < -40);
    const auto one = cyclo_magnitude(CyclotomicSum::unit(3, 0) + CyclotomicSum::unit(3, 1), 128);
    CHECK(one.contains(mpq_class(1)));
    CHECK(one.width_log2() < -40);
    // |1 + zeta_5| = 2 cos(pi/5)
    const auto r5 = cyclo_magnitude(CyclotomicSum::unit(5, 0) + CyclotomicSum::unit(5, 1), 128);
    CHECK(r5.compare(mpq_class(1618, 1000)) == 1);
    CHECK(r5.compare(mpq_class(16181, 10000)) == -1);
    CHECK(r5.compare(mpq_class(3, 2)) == 1);
    CHECK(r5.compare(mpq_class(2)) == -1);
}

TEST_CASE("interval refinement narrows with precision") {
    const auto v = CyclotomicSum::unit(7, 1) + CyclotomicSum::unit(7, 3).scaled(2);
    const auto lo = cyclo_magnitude(v, 64), hi = cyclo_magnitude(v, 256);
    CHECK(hi.width_log2() < lo.width_log2());
    CHECK(mpfr_cmp(hi.lo(), lo.lo()) >= 0);
    CHECK(mpfr_cmp(hi.hi(), lo.hi()) <= 0);
    CHECK_THROWS_AS(cyclo_magnitude(v, 16), Error);
}
