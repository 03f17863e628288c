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

#include "jetcircle/counting.hpp"

#include <algorithm>

#include "jetcircle/parallel.hpp"

namespace jetcircle {

namespace {

// Base-p counter over a vector; digit 0 is least significant.
struct Odometer {
    std::vector<std::uint32_t> v;
    std::uint32_t p;

    Odometer(std::size_t len, std::uint32_t p_, std::uint64_t start = 0) : v(len, 0), p(p_) {
        for (std::size_t i = 0; i < len; ++i) {
            v[i] = static_cast<std::uint32_t>(start % p);
            start /= p;
        }
    }
    // Returns false after wrapping around to zero.
    bool next() {
        for (auto& d : v) {
            if (++d < p) return true;
            d = 0;
        }
        return false;
    }
};

unsigned resolve_workers(unsigned w) { return w == 0 ? default_workers() : w; }

// Splits [0, total) into shard ranges and sums per-shard counts in order.
mpz_class sharded_sum(std::uint64_t total, unsigned workers,
                      const std::function<mpz_class(std::uint64_t, std::uint64_t)>& range_fn) {
    const std::size_t shards = workers <= 1 ? 1 : std::min<std::uint64_t>(total, 8ull * workers);
    std::vector<mpz_class> part(shards);
    run_shards(shards, workers, [&](std::size_t s) {
        const std::uint64_t lo = total / shards * s + std::min<std::uint64_t>(s, total % shards);
        const std::uint64_t hi = lo + total / shards + (s < total % shards ? 1 : 0);
        part[s] = range_fn(lo, hi);
    });
    mpz_class sum = 0;
    for (const auto& v : part) sum += v;
    return sum;
}

mpq_class normalize_by(const mpz_class& raw, std::uint32_t p, long exponent) {
    mpq_class q;
    if (exponent >= 0)
        q = mpq_class(raw, ipow(p, static_cast<std::uint64_t>(exponent)));
    else
        q = mpq_class(raw * ipow(p, static_cast<std::uint64_t>(-exponent)));
    q.canonicalize();
    return q;
}

CountParams params_of(const SymmetricForm& F, std::size_t e, std::size_t m) {
    return CountParams{F.field().p(), F.n(), F.d(), e, m, F.id()};
}

void set_layer(JetTuple& x, std::size_t k, const std::vector<std::uint32_t>& flat, std::size_t e) {
    for (std::size_t j = 0; j < x.size(); ++j)
        for (std::size_t i = 0; i <= e; ++i) x[j].at(i, k) = flat[j * (e + 1) + i];
}

void clear_layer(JetTuple& x, std::size_t k) {
    for (auto& s : x)
        for (std::size_t i = 0; i <= s.r; ++i) s.at(i, k) = 0;
}

// Layered walk over the jets above a fixed x0 in M_0. With fn == nullptr it counts, using the
// top-layer coset size as multiplicity; otherwise every point is visited.
mpz_class walk_layers(const SymmetricForm& F, std::size_t e, std::size_t m, JetTuple& x, const LinearSolver& S, std::size_t k,
                      const std::function<void(const JetTuple&)>* fn) {
    const PrimeField& K = F.field();
    const JetSection val = eval_form(F, x);
    std::vector<std::uint32_t> rhs(val.r + 1);
    for (std::size_t i = 0; i <= val.r; ++i) rhs[i] = K.neg(val.at(i, k));
    const auto part = S.particular(rhs);
    if (!part) return 0;
    if (k == m && fn == nullptr) return ipow(K.p(), S.nullity());
    mpz_class total = 0;
    for_each_in_coset(K, *part, S.kernel(), [&](const std::vector<std::uint32_t>& v) {
        set_layer(x, k, v, e);
        if (k == m) {
            (*fn)(x);
            total += 1;
        } else {
            total += walk_layers(F, e, m, x, S, k + 1, fn);
        }
    });
    clear_layer(x, k);
    return total;
}

// Enumerates x0 in [lo, hi) with F(x0) = 0 and x0 globally generating.
template <class Fn>
void for_each_M0(const SymmetricForm& F, std::size_t e, std::uint64_t lo, std::uint64_t hi, Fn&& fn) {
    const std::size_t N = F.vars() * (e + 1);
    const std::size_t de = F.d() * e;
    Odometer od(N, F.field().p(), lo);
    std::vector<std::uint32_t> val(de + 1);
    for (std::uint64_t idx = lo; idx < hi; ++idx, od.next()) {
        eval_form_poly(F, od.v.data(), e, val.data());
        if (std::any_of(val.begin(), val.end(), [](std::uint32_t c) { return c != 0; })) continue;
        if (!globally_generates_poly(F.field(), od.v.data(), F.vars(), e)) continue;
        fn(od.v);
    }
}

void check_count_pre(const SymmetricForm& F, std::size_t e, std::size_t m, const Budget& budget, const std::string& what) {
    const std::size_t N = F.vars() * (e + 1);
    budget.require(ipow(F.field().p(), N * (m + 1)), what + "(e=" + std::to_string(e) + ", m=" + std::to_string(m) + ")");
}

}  // namespace

long mu_genus0(std::size_t n, std::size_t d, std::size_t e) {
    return static_cast<long>((n + 1) * (e + 1)) - static_cast<long>(d * e + 1) - 1;
}

JetTuple tuple_from_flat(const std::uint32_t* flat, std::size_t vars, std::size_t e, std::size_t m) {
    JetTuple x(vars, JetSection(e, m));
    const std::size_t blk = (e + 1) * (m + 1);
    for (std::size_t j = 0; j < vars; ++j) std::copy(flat + j * blk, flat + (j + 1) * blk, x[j].c.begin());
    return x;
}

FpMatrix pairing_matrix(const PrimeField& K, const std::vector<JetSection>& g, std::size_t e) {
    const std::size_t rg = g[0].r, m = g[0].m, M = m + 1;
    FpMatrix A((e + rg + 1) * M, g.size() * (e + 1) * M);
    for (std::size_t j = 0; j < g.size(); ++j)
        for (std::size_t i = 0; i <= e; ++i)
            for (std::size_t k = 0; k <= m; ++k) {
                const std::size_t col = j * (e + 1) * M + i * M + k;
                for (std::size_t a = 0; a <= rg; ++a)
                    for (std::size_t l = 0; k + l <= m; ++l) {
                        const std::uint32_t c = g[j].at(a, l);
                        if (!c) continue;
                        auto& slot = A.at((i + a) * M + k + l, col);
                        slot = K.add(slot, c);
                    }
            }
    return A;
}

void for_each_Mm_point(const SymmetricForm& F, std::size_t e, std::size_t m, const std::function<void(const JetTuple&)>& fn) {
    const std::size_t N = F.vars() * (e + 1);
    const std::uint64_t total = ipow(F.field().p(), N).get_ui();
    for_each_M0(F, e, 0, total, [&](const std::vector<std::uint32_t>& x0) {
        JetTuple x(F.vars(), JetSection(e, m));
        set_layer(x, 0, x0, e);
        if (m == 0) {
            fn(x);
            return;
        }
        LinearSolver S(F.field(), gradient_matrix_poly(F, x0.data(), e));
        walk_layers(F, e, m, x, S, 1, &fn);
    });
}

CountRecord count_Mm(const SymmetricForm& F, std::size_t e, std::size_t m, const Budget& budget, CountMode mode, unsigned workers) {
    check_count_pre(F, e, m, budget, "count_Mm");
    workers = resolve_workers(workers);
    const PrimeField& K = F.field();
    const std::size_t N = F.vars() * (e + 1);
    const std::uint64_t total = ipow(K.p(), N).get_ui();
    mpz_class raw;
    if (mode == CountMode::fast) {
        raw = sharded_sum(total, workers, [&](std::uint64_t lo, std::uint64_t hi) {
            mpz_class c = 0;
            for_each_M0(F, e, lo, hi, [&](const std::vector<std::uint32_t>& x0) {
                if (m == 0) {
                    c += 1;
                    return;
                }
                JetTuple x(F.vars(), JetSection(e, m));
                set_layer(x, 0, x0, e);
                LinearSolver S(K, gradient_matrix_poly(F, x0.data(), e));
                c += walk_layers(F, e, m, x, S, 1, nullptr);
            });
            return c;
        });
    } else {
        // Every tuple is evaluated as a jet; tuples whose t^0 layer already fails are skipped,
        // which is exact since F(x) mod t = F(x mod t).
        raw = sharded_sum(total, workers, [&](std::uint64_t lo, std::uint64_t hi) {
            mpz_class c = 0;
            Odometer od(N, K.p(), lo);
            for (std::uint64_t idx = lo; idx < hi; ++idx, od.next()) {
                JetTuple x0 = tuple_from_flat(od.v.data(), F.vars(), e, 0);
                if (!eval_form(F, x0).is_zero() || !globally_generates(K, x0)) continue;
                JetTuple x(F.vars(), JetSection(e, m));
                set_layer(x, 0, od.v, e);
                Odometer up(N * m, K.p());
                do {
                    for (std::size_t k = 1; k <= m; ++k)
                        set_layer(x, k, std::vector<std::uint32_t>(up.v.begin() + (k - 1) * N, up.v.begin() + k * N), e);
                    if (eval_form(F, x).is_zero()) c += 1;
                } while (m > 0 && up.next());
            }
            return c;
        });
    }
    CountRecord rec{"Mm", params_of(F, e, m), raw, {}, static_cast<long>(m + 1) * (mu_genus0(F.n(), F.d(), e) + 1)};
    rec.normalized = normalize_by(raw, K.p(), rec.exponent);
    return rec;
}

CountRecord count_M1m(const SymmetricForm& F, std::size_t e, std::size_t m, const Budget& budget, CountMode mode, unsigned workers) {
    check_count_pre(F, e, m, budget, "count_M1m");
    (void)workers;
    const PrimeField& K = F.field();
    const std::size_t N = F.vars() * (e + 1);
    const std::size_t dim = N * (m + 1);
    if (mode == CountMode::exhaustive) budget.require(ipow(K.p(), dim), "count_M1m x1-enumeration");
    mpz_class raw = 0;
    for_each_Mm_point(F, e, m, [&](const JetTuple& x0) {
        if (mode == CountMode::fast) {
            const std::size_t r = rank(K, pairing_matrix(K, gradient(F, x0), e));
            raw += ipow(K.p(), dim - r);
            return;
        }
        Odometer od(dim, K.p());
        do {
            JetTuple x1 = tuple_from_flat(od.v.data(), F.vars(), e, m);
            if (gradient_pairing(F, x1, x0).is_zero()) raw += 1;
        } while (od.next());
    });
    CountRecord rec{"M1m", params_of(F, e, m), raw, {}, 2 * static_cast<long>(m + 1) * (mu_genus0(F.n(), F.d(), e) + 1)};
    rec.normalized = normalize_by(raw, K.p(), rec.exponent);
    return rec;
}

LwTrend lw_trend(const std::string& form_source, std::size_t n, std::size_t d, std::size_t e, std::size_t m,
                 const std::vector<std::uint32_t>& primes, const Budget& budget) {
    LwTrend out;
    for (auto p : primes) {
        if (p <= d) throw Error(ErrorKind::precondition, "all primes must exceed d");
        PrimeField K(p);
        const SymmetricForm F = load_form(K, form_source, n, d);
        out.records.push_back(count_Mm(F, e, m, budget));
        mpq_class dist = out.records.back().normalized - 1;
        out.distance_to_one.push_back(abs(dist));
        if (out.records.size() >= 2 && out.records[out.records.size() - 2].normalized >= out.records.back().normalized)
            out.increasing = false;
    }
    return out;
}

namespace {

// Counts (d-1)-tuples over P_{r,k}^{n+1} with every Psi_i zero as a section.
mpz_class psi_kernel_count(const SymmetricForm& F, std::size_t r, std::size_t k, const Budget& budget, CountMode mode,
                           const std::string& what) {
    const PrimeField& K = F.field();
    const std::size_t v = F.vars(), d = F.d();
    if (d < 2) throw Error(ErrorKind::precondition, "multilinear forms need d >= 2");
    const std::size_t T = v * (r + 1) * (k + 1);
    budget.require(ipow(K.p(), T * (d - 1)), what);
    mpz_class total = 0;
    if (mode == CountMode::exhaustive) {
        Odometer od(T * (d - 1), K.p());
        do {
            std::vector<JetTuple> args;
            for (std::size_t a = 0; a + 1 < d; ++a) args.push_back(tuple_from_flat(od.v.data() + a * T, v, r, k));
            bool zero = true;
            for (std::size_t i = 0; i < v && zero; ++i) zero = multilinear_psi(F, i, args).is_zero();
            if (zero) total += 1;
        } while (od.next());
        return total;
    }
    const std::size_t rc = (d - 2) * r;  // degree of the coefficient sections
    Odometer od(T * (d - 2), K.p());
    do {
        std::vector<JetTuple> fixed;
        for (std::size_t a = 0; a + 2 < d; ++a) fixed.push_back(tuple_from_flat(od.v.data() + a * T, v, r, k));
        FpMatrix A(v * (rc + r + 1) * (k + 1), T);
        const std::size_t rows_per = (rc + r + 1) * (k + 1);
        for (std::size_t i = 0; i < v; ++i) {
            std::vector<JetSection> coef(v, JetSection(rc, k));
            for (const auto& term : F.psi_terms(i)) {
                JetSection prod = JetSection::constant(0, k, term.coeff);
                for (std::size_t a = 0; a + 2 < d; ++a) prod = mul_sections(K, prod, fixed[a][term.idx[a]]);
                const std::size_t j = term.idx[d - 2];
                coef[j] = add_sections(K, coef[j], widen(prod, rc));
            }
            const FpMatrix B = pairing_matrix(K, coef, r);
            for (std::size_t row = 0; row < rows_per; ++row)
                for (std::size_t col = 0; col < T; ++col) A.at(i * rows_per + row, col) = B.at(row, col);
        }
        total += ipow(K.p(), T - rank(K, A));
    } while (d > 2 && od.next());
    return total;
}

}  // namespace

mpz_class count_jet_multilinear(const SymmetricForm& F, std::size_t k, const Budget& budget, CountMode mode) {
    return psi_kernel_count(F, 0, k, budget, mode, "count_jet_multilinear(k=" + std::to_string(k) + ")");
}

mpz_class count_psi_zero_sections(const SymmetricForm& F, std::size_t e, std::size_t s, std::size_t k, const Budget& budget,
                                  CountMode mode) {
    if (s > e) throw Error(ErrorKind::precondition, "need 0 <= s <= e");
    return psi_kernel_count(F, e - s, k, budget, mode,
                            "count_psi_zero_sections(e=" + std::to_string(e) + ", s=" + std::to_string(s) + ")");
}

}  // namespace jetcircle
