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
#include "jetcircle/counting.hpp"
#include "jetcircle/geometry.hpp"

using namespace jetcircle;

namespace {

mpq_class frac(long a, long b) {
    mpq_class q(a, b);
    q.canonicalize();
    return q;
}

}  // namespace

TEST_CASE("conic counts in closed form") {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        PrimeField K(p);
        const auto F = SymmetricForm::conic(K);
        const auto r = count_Mm(F, 2, 0);
        const long q = p;
        CHECK(r.raw_count == (q - 1) * (q * q * q - q));
        CHECK(r.exponent == 4);
        CHECK(r.normalized == frac((q - 1) * (q * q * q - q), q * q * q * q));
    }
    PrimeField K3(3), K5(5);
    CHECK(count_Mm(SymmetricForm::conic(K3), 1, 0).raw_count == 0);
    CHECK(count_Mm(SymmetricForm::conic(K5), 1, 0).raw_count == 0);
    CHECK(count_Mm(SymmetricForm::conic(K3), 1, 0).normalized == 0);
}

TEST_CASE("fast and exhaustive engines agree") {
    PrimeField K3(3);
    const auto C = SymmetricForm::conic(K3);
    CHECK(count_Mm(C, 2, 0, Budget::standard(), CountMode::exhaustive).raw_count == 48);
    CHECK(count_Mm(C, 1, 1, Budget::standard(), CountMode::exhaustive).raw_count == count_Mm(C, 1, 1).raw_count);
    PrimeField K5(5);
    const auto F = SymmetricForm::fermat(K5, 1, 3);
    for (std::size_t m : {0u, 1u}) {
        CHECK(count_Mm(F, 1, m, Budget::standard(), CountMode::exhaustive).raw_count == count_Mm(F, 1, m).raw_count);
        CHECK(count_M1m(F, 1, m, Budget::standard(), CountMode::exhaustive).raw_count == count_M1m(F, 1, m).raw_count);
    }
}

TEST_CASE("tangent and jet counts over the smooth conic cone") {
    PrimeField K(3);
    const auto C = SymmetricForm::conic(K);
    CHECK(count_M1m(C, 2, 0).raw_count == 3888);
    CHECK(count_M1m(C, 2, 0, Budget::standard(), CountMode::exhaustive).raw_count == 3888);
    CHECK(count_M1m(C, 1, 0).raw_count == 0);
    const auto j1 = count_Mm(C, 2, 1);
    CHECK(j1.raw_count == 3888);
    CHECK(j1.normalized == frac(48, 81));
}

TEST_CASE("point visitor agrees with the count") {
    PrimeField K(3);
    const auto C = SymmetricForm::conic(K);
    std::uint64_t visits = 0;
    for_each_Mm_point(C, 2, 1, [&](const JetTuple& x) {
        CHECK(eval_form(C, x).is_zero());
        ++visits;
    });
    CHECK(visits == 3888);
}

TEST_CASE("worker count does not change results") {
    PrimeField K(5);
    const auto F = SymmetricForm::fermat(K, 1, 3);
    const auto a = count_Mm(F, 2, 1, Budget::standard(), CountMode::fast, 1);
    const auto b = count_Mm(F, 2, 1, Budget::standard(), CountMode::fast, 3);
    CHECK(a.raw_count == b.raw_count);
}

TEST_CASE("lw_trend on the conic") {
    const auto t = lw_trend("conic", 2, 2, 2, 0, {3, 5, 7});
    REQUIRE(t.records.size() == 3);
    CHECK(t.records[0].normalized == frac(48, 81));
    CHECK(t.records[1].normalized == frac(480, 625));
    CHECK(t.records[2].normalized == frac(2016, 2401));
    CHECK(t.increasing);
    CHECK(t.distance_to_one[2] < t.distance_to_one[0]);
    CHECK_THROWS_AS(lw_trend("conic", 2, 2, 2, 0, {2}), Error);
}

TEST_CASE("budget guard") {
    PrimeField K(7);
    const auto F = SymmetricForm::fermat(K, 4, 3);
    try {
        count_Mm(F, 3, 2);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.required() >= ipow(7, 60));
    }
}

TEST_CASE("mu for genus 0") {
    CHECK(mu_genus0(2, 2, 2) == 3);
    CHECK(mu_genus0(3, 2, 3) == 8);
}

TEST_CASE("multilinear jet counts") {
    PrimeField K3(3), K5(5);
    const auto C = SymmetricForm::conic(K3);
    for (std::size_t k = 0; k <= 2; ++k) CHECK(count_jet_multilinear(C, k) == 1);
    const auto F = SymmetricForm::fermat(K5, 1, 3);
    CHECK(count_jet_multilinear(F, 0) >= 1);
    CHECK(count_jet_multilinear(F, 0, Budget::standard(), CountMode::exhaustive) == count_jet_multilinear(F, 0));
    CHECK(count_jet_multilinear(F, 1, Budget::standard(), CountMode::exhaustive) == count_jet_multilinear(F, 1));
    // Exponent (k+1)(n+1)(d-1) - (n+1)(floor(k/(d-1)) + 1) = 6 at k = 1, with constant 10.
    CHECK(count_jet_multilinear(F, 1) <= 10 * ipow(5, 6));
}

TEST_CASE("sections with vanishing multilinear forms") {
    PrimeField K(3);
    const auto C = SymmetricForm::conic(K);
    CHECK(count_psi_zero_sections(C, 1, 0, 0) == 1);
    CHECK(count_psi_zero_sections(C, 1, 0, 0, Budget::standard(), CountMode::exhaustive) == 1);
    CHECK(count_psi_zero_sections(C, 2, 2, 0) == 1);
    CHECK(count_psi_zero_sections(C, 2, 1, 1) >= 1);
}
