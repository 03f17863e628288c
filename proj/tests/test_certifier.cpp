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
#include "jetcircle/certifier.hpp"

using namespace jetcircle;

namespace {

mpq_class frac(long a, long b) {
    mpq_class q(a, b);
    q.canonicalize();
    return q;
}

const IdentityEntry* find(const IdentityReport& r, const std::string& group, const std::string& name, long d, long g) {
    for (const auto& e : r.entries)
        if (e.group == group && e.name == name && e.d == d && e.g == g) return &e;
    return nullptr;
}

}  // namespace

TEST_CASE("rounding helpers and mode parsing") {
    CHECK(floor_q(frac(-7, 2)) == -4);
    CHECK(ceil_q(frac(-7, 2)) == -3);
    CHECK(floor_q(frac(7, 2)) == 3);
    CHECK(ceil_q(mpq_class(4)) == 4);
    CHECK(parse_bound_mode("terminal") == BoundMode::terminal);
    CHECK(to_string(BoundMode::canonical) == "canonical");
    CHECK_THROWS_AS(parse_bound_mode("other"), Error);
}

TEST_CASE("f_g examples") {
    CHECK(f_g(0) == 0);
    CHECK(f_g(1) == 0);
    CHECK(f_g(2) == frac(3, 2));
}

TEST_CASE("mu_dims examples") {
    const auto a = mu_dims(3, 2, 3, 0);
    CHECK(a.mu == 8);
    CHECK(a.mu_bar == 5);
    CHECK(mu_dims(2, 2, 2, 0).mu == 3);
}

TEST_CASE("thresholds examples") {
    const auto c21 = thresholds(2, 1, 17, BoundMode::canonical);
    CHECK(c21.threshold == 6);
    CHECK(c21.n_plus_1 == 7);
    CHECK(c21.e0 == 16);
    const auto t21 = thresholds(2, 1, 25, BoundMode::terminal);
    CHECK(t21.threshold == 11);
    CHECK(t21.n_plus_1 == 12);
    CHECK(t21.e0 == 24);
    CHECK(e0_value(3, 1, BoundMode::canonical) == 114);
}

TEST_CASE("s_value examples") {
    CHECK(s_value(3, 0, 4, 6) == 2);
    CHECK(s_value(2, 1, 10, 11) == 2);
    CHECK(s_value(2, 2, 20, 20) == 3);
}

TEST_CASE("A quantity examples") {
    const auto a = A_quantity(3, 0, 4, 1, 6);
    REQUIRE(a.value);
    CHECK(*a.value == frac(50, 3));
    const auto b = A_quantity(2, 1, 30, 1, 31);
    REQUIRE(b.value);
    CHECK(*b.value == frac(61, 14));
    for (long e = 2; e <= 12; ++e)
        for (long m = 1; m <= 6; ++m) {
            const auto v = A_quantity(3, 0, e, m, 3 * e);
            if (v.status == "ok") CHECK(*v.value > 0);
        }
}

TEST_CASE("M and A-prime examples") {
    const auto M = M_quantity(2, 1, 30, 1, 31, 31);
    REQUIRE(M.M);
    CHECK(*M.M == 56);
    CHECK(M.m_case == 3);
    const auto Ap = A_prime(2, 1, 30, 1, 31, 31);
    REQUIRE(Ap.value);
    CHECK(*Ap.value == frac(61, 14));
    CHECK(*Ap.value < 12);
}

TEST_CASE("certify passes on the covered cases") {
    CertifyOptions g0;
    g0.d = 3;
    g0.g = 0;
    g0.e_span = std::make_pair(1l, 30l);
    g0.m_span = {1, 40};
    g0.n_plus_1 = mpz_class(56);
    const auto c0 = certify(g0);
    CHECK(c0.pass);
    CHECK(c0.body["verdict"] == "pass");

    CertifyOptions c21;
    c21.d = 2;
    c21.g = 1;
    c21.e_span = std::make_pair(17l, 100l);
    c21.m_span = {1, 40};
    c21.n_plus_1 = mpz_class(7);
    CHECK(certify(c21).pass);

    CertifyOptions t21 = c21;
    t21.mode = BoundMode::terminal;
    t21.e_span = std::make_pair(25l, 80l);
    t21.m_span = {1, 20};
    t21.n_plus_1 = mpz_class(12);
    CHECK(certify(t21).pass);
}

TEST_CASE("certify rejects a threshold that is too small") {
    CertifyOptions o;
    o.d = 2;
    o.g = 1;
    o.e_span = std::make_pair(17l, 30l);
    o.m_span = {1, 5};
    o.n_plus_1 = mpz_class(6);
    const auto c = certify(o);
    CHECK_FALSE(c.pass);
    CHECK(c.body["counterexamples"].get<long>() > 0);
}

TEST_CASE("certify is deterministic across worker counts") {
    CertifyOptions o;
    o.d = 3;
    o.g = 1;
    o.e_span = std::make_pair(115l, 140l);
    o.m_span = {1, 10};
    auto a = certify(o);
    o.workers = 3;
    auto b = certify(o);
    CHECK(a.body == b.body);
}

TEST_CASE("uncovered and empty inputs") {
    CertifyOptions o;
    o.d = 2;
    o.g = 0;
    CHECK_THROWS_AS(certify(o), Error);
    CertifyOptions e;
    e.d = 3;
    e.g = 1;
    e.e_span = std::make_pair(150l, 140l);
    CHECK_THROWS_AS(certify(e), Error);
}

TEST_CASE("reproduced identities") {
    const auto r = reproduce_paper_identities(3, 4);
    const auto* i1 = find(r, "i", "2(56g+21f-7)/(16g+6f-2)", 2, 1);
    REQUIRE(i1);
    CHECK(i1->lhs == 7);
    CHECK(i1->holds);
    const auto* ii = find(r, "ii", "Rain(e0)", 3, 1);
    REQUIRE(ii);
    CHECK(ii->lhs == 57);
    CHECK(ii->holds);
    const auto* iii = find(r, "iii", "h(e0)", 3, 1);
    REQUIRE(iii);
    CHECK(iii->lhs <= 56);
    CHECK(iii->holds);
    CHECK(r.to_json().contains("entries"));
}
