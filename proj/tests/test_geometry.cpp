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
#include "jetcircle/geometry.hpp"

using namespace jetcircle;

namespace {

JetSection poly(std::size_t r, const std::vector<std::vector<std::uint32_t>>& layers) {
    return JetSection::from_layers(r, layers);
}

std::vector<JetSection> random_tuple(const PrimeField& K, std::size_t vars, std::size_t r, std::size_t m,
                                     std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> c(0, K.p() - 1);
    std::vector<JetSection> x(vars, JetSection(r, m));
    for (auto& s : x)
        for (auto& v : s.c) v = c(rng);
    return x;
}

JetSection pairing(const PrimeField& K, const std::vector<JetSection>& z, const std::vector<JetSection>& v) {
    JetSection acc = mul_sections(K, z[0], v[0]);
    for (std::size_t i = 1; i < z.size(); ++i) acc = add_sections(K, acc, mul_sections(K, z[i], v[i]));
    return acc;
}

}  // namespace

TEST_CASE("symmetric tensor round trip") {
    std::mt19937_64 rng(5);
    for (std::uint32_t p : {5u, 7u}) {
        PrimeField K(p);
        const std::vector<Monomial> monos{{{3, 0, 0}, 2}, {{1, 1, 1}, 3}, {{0, 2, 1}, 1}, {{1, 2, 0}, 4}, {{0, 0, 3}, 1}};
        const SymmetricForm F(K, 2, 3, monos);
        std::uniform_int_distribution<std::uint32_t> c(0, p - 1);
        for (int t = 0; t < 200; ++t) {
            const std::vector<std::uint32_t> x{c(rng), c(rng), c(rng)};
            CHECK(F.eval_point(x) == eval_monomials(K, monos, x));
            CHECK(F.eval_point(x) == eval_monomials(K, F.monomials(), x));
        }
    }
}

TEST_CASE("eval_form examples") {
    PrimeField K(3);
    const auto F = SymmetricForm::conic(K);
    const std::vector<JetSection> zero(3, JetSection(2, 1));
    CHECK(eval_form(F, zero).is_zero());
    const std::vector<JetSection> ver{poly(2, {{1, 0, 0}}), poly(2, {{0, 1, 0}}), poly(2, {{0, 0, 1}})};
    CHECK(eval_form(F, ver).is_zero());
    const std::vector<JetSection> bumped{poly(2, {{1, 0, 0}, {0, 0, 0}}), poly(2, {{0, 1, 0}, {0, 0, 0}}),
                                         poly(2, {{0, 0, 1}, {1, 0, 0}})};
    const JetSection v = eval_form(F, bumped);
    CHECK(v.r == 4);
    CHECK(v == poly(4, {{0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}}));
}

TEST_CASE("gradient examples and Euler relation") {
    PrimeField K(5);
    const auto F = SymmetricForm::conic(K);
    const std::vector<JetSection> ver{poly(2, {{1, 0, 0}}), poly(2, {{0, 1, 0}}), poly(2, {{0, 0, 1}})};
    const auto g = gradient(F, ver);
    REQUIRE(g.size() == 3);
    CHECK(g[0] == poly(2, {{0, 0, 1}}));
    CHECK(g[1] == poly(2, {{0, K.neg(2), 0}}));
    CHECK(g[2] == poly(2, {{1, 0, 0}}));
    for (const auto& s : gradient(F, std::vector<JetSection>(3, JetSection(2, 0)))) CHECK(s.is_zero());
    CHECK(pairing(K, ver, g).is_zero());

    std::mt19937_64 rng(9);
    PrimeField K7(7);
    const auto C = SymmetricForm::fermat(K7, 2, 3);
    for (int t = 0; t < 20; ++t) {
        const auto x = random_tuple(K7, 3, 2, 1, rng);
        CHECK(pairing(K7, x, gradient(C, x)) == scale_section(K7, eval_form(C, x), 3));
    }
}

TEST_CASE("multilinear forms, d = 2") {
    PrimeField K(5);
    const auto F = SymmetricForm::conic(K);
    // Psi_j(y) = 2! sum_i a_{ij} y_i, which is the j-th partial evaluated at y.
    const std::vector<std::uint32_t> y{1, 2, 3};
    CHECK(multilinear_psi(F, 0, {y}) == 3);
    CHECK(multilinear_psi(F, 1, {y}) == K.neg(4));
    CHECK(multilinear_psi(F, 2, {y}) == 1);
    CHECK(multilinear_psi(F, 1, {{0, 0, 0}}) == 0);
}

TEST_CASE("multilinear forms, diagonal cubic") {
    PrimeField K(7);
    const auto F = SymmetricForm::fermat(K, 2, 3);
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<std::uint32_t> c(0, 6);
    for (int t = 0; t < 50; ++t) {
        const std::vector<std::uint32_t> y{c(rng), c(rng), c(rng)}, z{c(rng), c(rng), c(rng)};
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(multilinear_psi(F, j, {y, z}) == K.mul(6, K.mul(y[j], z[j])));
            CHECK(multilinear_psi(F, j, {y, {0, 0, 0}}) == 0);
            CHECK(multilinear_psi(F, j, {y, z}) == multilinear_psi(F, j, {z, y}));
        }
    }
}

TEST_CASE("difference operator basics") {
    PrimeField K(5);
    std::mt19937_64 rng(4);
    const auto F = SymmetricForm::fermat(K, 1, 3);
    const SectionMap G = [&](const std::vector<JetSection>& x) { return eval_form(F, x); };
    const auto x = random_tuple(K, 2, 1, 1, rng);
    CHECK(difference_apply(K, G, {}, x) == G(x));
    const auto w = random_tuple(K, 2, 0, 1, rng);
    const SectionMap L = [&](const std::vector<JetSection>& v) { return pairing(K, w, v); };
    const auto y = random_tuple(K, 2, 1, 1, rng);
    CHECK(difference_apply(K, L, {y}, x) == L(y));
    // d differences of a degree-d form are constant in x.
    const auto y2 = random_tuple(K, 2, 1, 1, rng), y3 = random_tuple(K, 2, 1, 1, rng);
    const auto x2 = random_tuple(K, 2, 1, 1, rng);
    CHECK(difference_apply(K, G, {y, y2, y3}, x) == difference_apply(K, G, {y, y2, y3}, x2));
}

TEST_CASE("differencing against multilinear forms") {
    std::mt19937_64 rng(17);
    SUBCASE("d = 2: G(y) = z . Psi(y)") {
        PrimeField K(5);
        const auto F = SymmetricForm::conic(K);
        for (int t = 0; t < 30; ++t) {
            const auto z = random_tuple(K, 3, 1, 1, rng), y = random_tuple(K, 3, 1, 1, rng);
            const SectionMap G = [&](const std::vector<JetSection>& x) { return gradient_pairing(F, z, x); };
            std::vector<JetSection> psi;
            for (std::size_t j = 0; j < 3; ++j) psi.push_back(multilinear_psi(F, j, {y}));
            CHECK(difference_apply(K, G, {}, y) == pairing(K, z, psi));
        }
    }
    SUBCASE("d = 3: one difference equals z . Psi(y1, y2) plus G(y1)") {
        PrimeField K(7);
        const auto F = SymmetricForm::fermat(K, 2, 3);
        for (int t = 0; t < 30; ++t) {
            const auto z = random_tuple(K, 3, 1, 1, rng), y1 = random_tuple(K, 3, 1, 1, rng),
                       y2 = random_tuple(K, 3, 1, 1, rng);
            const SectionMap G = [&](const std::vector<JetSection>& x) { return gradient_pairing(F, z, x); };
            std::vector<JetSection> psi;
            for (std::size_t j = 0; j < 3; ++j) psi.push_back(multilinear_psi(F, j, {y1, y2}));
            const JetSection lhs = difference_apply(K, G, {y1}, y2);
            CHECK(lhs == add_sections(K, pairing(K, z, psi), G(y1)));
            // The multilinear part is recovered by removing the value at y2 = 0.
            const std::vector<JetSection> zero(3, JetSection(1, 1));
            CHECK(sub_sections(K, lhs, difference_apply(K, G, {y1}, zero)) == pairing(K, z, psi));
        }
    }
}

TEST_CASE("smoothness examples") {
    PrimeField K3(3), K5(5);
    const SymmetricForm sq(K3, 1, 2, {{{2, 0}, 1}});
    const auto r = smoothness_check(sq, 1);
    REQUIRE(r.witness_degree.has_value());
    CHECK(*r.witness_degree == 1);
    CHECK(r.witness.at(0) == std::vector<std::uint32_t>{0});

    const auto conic = smoothness_check(SymmetricForm::conic(K3), 1);
    CHECK_FALSE(conic.witness_degree.has_value());
    CHECK(conic.cap == 1);
    CHECK(conic.certified);

    const auto fermat = SymmetricForm::fermat(K5, 2, 3);
    CHECK(bezout_cap(fermat) == 4);
    const auto fr = smoothness_check(fermat, 4, Budget::forced());
    CHECK_FALSE(fr.witness_degree.has_value());
    CHECK(fr.verified_up_to == 4);
    CHECK(fr.certified);
}

TEST_CASE("reducible cubic is singular") {
    // (x0^2 - 2 x1^2) x2 over F_5 is singular at (0:0:1).
    PrimeField K(5);
    const SymmetricForm F(K, 2, 3, {{{2, 0, 1}, 1}, {{0, 2, 1}, K.neg(2)}});
    const auto r = smoothness_check(F, 2);
    REQUIRE(r.witness_degree.has_value());
    CHECK(*r.witness_degree == 1);
    CHECK_FALSE(r.certified);
}

TEST_CASE("form parsing and loading") {
    PrimeField K(5);
    const auto F = parse_form(K, "# conic\n1 0 1 1\n0 2 0 -1\n");
    CHECK(F.n() == 2);
    CHECK(F.d() == 2);
    const auto C = SymmetricForm::conic(K);
    for (std::uint32_t a = 0; a < 5; ++a)
        for (std::uint32_t b = 0; b < 5; ++b) CHECK(F.eval_point({a, b, 1}) == C.eval_point({a, b, 1}));
    CHECK_THROWS_AS(parse_form(K, "1 0 x\n"), Error);
    CHECK_THROWS_AS(parse_form(K, "1 0 1 1\n2 1 0 1\n"), Error);
    CHECK_THROWS_AS(load_form(K, "/nonexistent/form.txt", 2, 2), Error);
    CHECK(load_form(K, "fermat", 1, 3).d() == 3);
}

TEST_CASE("random smooth forms are deterministic and smooth") {
    PrimeField K(5);
    const auto A = random_smooth_form(K, 1, 3, 42), B = random_smooth_form(K, 1, 3, 42);
    CHECK(A.tensor() == B.tensor());
    CHECK_FALSE(smoothness_check(A, bezout_cap(A)).witness_degree.has_value());
}

TEST_CASE("coordinate changes preserve values") {
    PrimeField K(7);
    const auto F = SymmetricForm::fermat(K, 1, 3);
    const std::vector<std::uint32_t> A{1, 2, 3, 1};
    const auto G = F.transformed(A);
    for (std::uint32_t a = 0; a < 7; ++a)
        for (std::uint32_t b = 0; b < 7; ++b) {
            const std::uint32_t u = K.add(a, K.mul(2, b)), v = K.add(K.mul(3, a), b);
            CHECK(G.eval_point({a, b}) == F.eval_point({u, v}));
        }
}
