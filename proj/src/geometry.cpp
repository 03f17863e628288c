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

#include "jetcircle/geometry.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

namespace jetcircle {

namespace {

std::uint32_t factorial_mod(const PrimeField& F, std::size_t k) {
    std::uint32_t r = 1;
    for (std::size_t i = 2; i <= k; ++i) r = F.mul(r, F.reduce(static_cast<std::int64_t>(i)));
    return r;
}

// d! / prod e_j! mod p; valid since p > d.
std::uint32_t multinomial_mod(const PrimeField& F, const std::vector<unsigned>& exps) {
    std::size_t d = 0;
    std::uint32_t den = 1;
    for (auto e : exps) {
        d += e;
        den = F.mul(den, factorial_mod(F, e));
    }
    return F.mul(factorial_mod(F, d), F.inv(den));
}

std::vector<std::uint32_t> sorted_indices(const std::vector<unsigned>& exps) {
    std::vector<std::uint32_t> idx;
    for (std::size_t j = 0; j < exps.size(); ++j)
        for (unsigned c = 0; c < exps[j]; ++c) idx.push_back(static_cast<std::uint32_t>(j));
    return idx;
}

std::vector<unsigned> exps_of(const std::vector<std::uint32_t>& idx, std::size_t vars) {
    std::vector<unsigned> e(vars, 0);
    for (auto j : idx) ++e[j];
    return e;
}

void for_each_exponent(std::size_t vars, std::size_t d, const std::function<void(const std::vector<unsigned>&)>& fn) {
    std::vector<unsigned> e(vars, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t j, std::size_t left) {
        if (j + 1 == vars) {
            e[j] = static_cast<unsigned>(left);
            fn(e);
            return;
        }
        for (std::size_t c = left + 1; c-- > 0;) {
            e[j] = static_cast<unsigned>(c);
            rec(j + 1, left - c);
        }
    };
    rec(0, d);
}

}  // namespace

SymmetricForm::SymmetricForm(const PrimeField& F, std::size_t n, std::size_t d, const std::vector<Monomial>& monomials,
                             std::string id)
    : F_(F), n_(n), d_(d), id_(std::move(id)) {
    if (d == 0) throw Error(ErrorKind::precondition, "form degree must be positive");
    if (F.p() <= d) throw Error(ErrorKind::precondition, "characteristic must exceed the degree (p > d)");
    std::map<std::vector<unsigned>, std::uint32_t> combined;
    for (const auto& mono : monomials) {
        if (mono.exps.size() != n + 1) throw Error(ErrorKind::parse, "monomial has wrong number of exponents");
        if (std::accumulate(mono.exps.begin(), mono.exps.end(), 0u) != d)
            throw Error(ErrorKind::parse, "monomial degree differs from form degree");
        auto& slot = combined[mono.exps];
        slot = F.add(slot, F.reduce(mono.coeff));
    }
    for (const auto& [exps, c] : combined) {
        if (c == 0) continue;
        tensor_[sorted_indices(exps)] = F.mul(c, F.inv(multinomial_mod(F, exps)));
    }
    for (const auto& [idx, a] : tensor_) {
        Monomial mono{exps_of(idx, n + 1), F.mul(a, multinomial_mod(F, exps_of(idx, n + 1)))};
        monos_.push_back(mono);
    }
    partials_.assign(n + 1, {});
    for (const auto& mono : monos_)
        for (std::size_t j = 0; j <= n; ++j) {
            if (mono.exps[j] == 0) continue;
            Monomial dm = mono;
            dm.coeff = F.mul(mono.coeff, F.reduce(mono.exps[j]));
            --dm.exps[j];
            if (dm.coeff) partials_[j].push_back(dm);
        }
    psi_.assign(n + 1, {});
    const std::uint32_t dfact = factorial_mod(F, d);
    for (const auto& [idx, a] : tensor_) {
        for (std::size_t j = 0; j <= n; ++j) {
            auto pos = std::find(idx.begin(), idx.end(), static_cast<std::uint32_t>(j));
            if (pos == idx.end()) continue;
            std::vector<std::uint32_t> rest(idx.begin(), pos);
            rest.insert(rest.end(), pos + 1, idx.end());
            const std::uint32_t coeff = F.mul(dfact, a);
            do {
                psi_[j].push_back(PsiTerm{rest, coeff});
            } while (std::next_permutation(rest.begin(), rest.end()));
        }
    }
}

SymmetricForm SymmetricForm::fermat(const PrimeField& F, std::size_t n, std::size_t d) {
    std::vector<Monomial> monos;
    for (std::size_t j = 0; j <= n; ++j) {
        Monomial m{std::vector<unsigned>(n + 1, 0), 1};
        m.exps[j] = static_cast<unsigned>(d);
        monos.push_back(m);
    }
    return SymmetricForm(F, n, d, monos, "fermat");
}

SymmetricForm SymmetricForm::conic(const PrimeField& F) {
    return SymmetricForm(F, 2, 2, {{{1, 0, 1}, 1}, {{0, 2, 0}, F.neg(1)}}, "conic");
}

std::uint32_t SymmetricForm::coefficient(std::vector<std::uint32_t> idx) const {
    std::sort(idx.begin(), idx.end());
    auto it = tensor_.find(idx);
    return it == tensor_.end() ? 0 : it->second;
}

std::uint32_t eval_monomials(const PrimeField& F, const std::vector<Monomial>& monos, const std::vector<std::uint32_t>& x) {
    std::uint32_t s = 0;
    for (const auto& mono : monos) {
        std::uint32_t t = F.reduce(mono.coeff);
        for (std::size_t j = 0; j < mono.exps.size(); ++j) t = F.mul(t, F.pow(x[j], mono.exps[j]));
        s = F.add(s, t);
    }
    return s;
}

std::uint32_t SymmetricForm::eval_point(const std::vector<std::uint32_t>& x) const { return eval_monomials(F_, monos_, x); }

std::vector<std::uint32_t> SymmetricForm::gradient_point(const std::vector<std::uint32_t>& x) const {
    std::vector<std::uint32_t> g(n_ + 1);
    for (std::size_t j = 0; j <= n_; ++j) g[j] = eval_monomials(F_, partials_[j], x);
    return g;
}

SymmetricForm SymmetricForm::transformed(const std::vector<std::uint32_t>& A) const {
    const std::size_t v = n_ + 1;
    if (A.size() != v * v) throw Error(ErrorKind::mismatch, "transformation matrix has wrong size");
    using Poly = std::map<std::vector<unsigned>, std::uint32_t>;
    Poly total;
    for (const auto& mono : monos_) {
        Poly cur;
        cur[std::vector<unsigned>(v, 0)] = mono.coeff;
        for (std::size_t j = 0; j < v; ++j)
            for (unsigned c = 0; c < mono.exps[j]; ++c) {
                Poly next;
                for (const auto& [ex, co] : cur)
                    for (std::size_t k = 0; k < v; ++k) {
                        const std::uint32_t a = A[j * v + k];
                        if (a == 0) continue;
                        auto e2 = ex;
                        ++e2[k];
                        auto& slot = next[e2];
                        slot = F_.add(slot, F_.mul(co, a));
                    }
                cur = std::move(next);
            }
        for (const auto& [ex, co] : cur) total[ex] = F_.add(total[ex], co);
    }
    std::vector<Monomial> monos;
    for (const auto& [ex, co] : total)
        if (co) monos.push_back({ex, co});
    return SymmetricForm(F_, n_, d_, monos, id_ + "-transformed");
}

namespace {

JetSection eval_monomial_list(const PrimeField& F, const std::vector<Monomial>& monos, const std::vector<JetSection>& x,
                              std::size_t deg) {
    const std::size_t e = x[0].r, m = x[0].m;
    JetSection acc(deg * e, m);
    for (const auto& mono : monos) {
        JetSection term = JetSection::constant(0, m, mono.coeff);
        for (std::size_t j = 0; j < mono.exps.size(); ++j)
            for (unsigned c = 0; c < mono.exps[j]; ++c) term = mul_sections(F, term, x[j]);
        acc = add_sections(F, acc, widen(term, deg * e));
    }
    return acc;
}

void check_tuple(const SymmetricForm& F, const std::vector<JetSection>& x) {
    if (x.size() != F.vars()) throw Error(ErrorKind::precondition, "tuple length must be n+1");
    for (const auto& s : x)
        if (s.r != x[0].r || s.m != x[0].m) throw Error(ErrorKind::mismatch, "tuple entries differ in shape");
}

}  // namespace

JetSection eval_form(const SymmetricForm& F, const std::vector<JetSection>& x) {
    check_tuple(F, x);
    return eval_monomial_list(F.field(), F.monomials(), x, F.d());
}

std::vector<JetSection> gradient(const SymmetricForm& F, const std::vector<JetSection>& x) {
    check_tuple(F, x);
    std::vector<JetSection> g;
    for (std::size_t j = 0; j < F.vars(); ++j) g.push_back(eval_monomial_list(F.field(), F.partial(j), x, F.d() - 1));
    return g;
}

JetSection gradient_pairing(const SymmetricForm& F, const std::vector<JetSection>& z, const std::vector<JetSection>& x) {
    check_tuple(F, z);
    const auto g = gradient(F, x);
    JetSection acc(z[0].r + g[0].r, z[0].m);
    for (std::size_t j = 0; j < F.vars(); ++j) acc = add_sections(F.field(), acc, mul_sections(F.field(), z[j], g[j]));
    return acc;
}

namespace {

// out (degree da+db) = a * b over F_p.
void poly_mul(std::uint32_t p, const std::uint32_t* a, std::size_t da, const std::uint32_t* b, std::size_t db,
              std::uint32_t* out) {
    for (std::size_t k = 0; k <= da + db; ++k) {
        std::uint64_t s = 0;
        const std::size_t lo = k > db ? k - db : 0, hi = std::min(k, da);
        for (std::size_t i = lo; i <= hi; ++i) s += static_cast<std::uint64_t>(a[i]) * b[k - i];
        out[k] = static_cast<std::uint32_t>(s % p);
    }
}

void eval_list_poly(const PrimeField& F, const std::vector<Monomial>& monos, std::size_t deg, const std::uint32_t* x,
                    std::size_t e, std::uint32_t* out) {
    const std::size_t top = deg * e;
    std::fill(out, out + top + 1, 0u);
    std::vector<std::uint32_t> cur(top + 1), nxt(top + 1);
    const std::uint32_t p = F.p();
    for (const auto& mono : monos) {
        cur[0] = mono.coeff;
        std::size_t dc = 0;
        for (std::size_t j = 0; j < mono.exps.size(); ++j)
            for (unsigned c = 0; c < mono.exps[j]; ++c) {
                poly_mul(p, cur.data(), dc, x + j * (e + 1), e, nxt.data());
                dc += e;
                std::swap(cur, nxt);
            }
        for (std::size_t k = 0; k <= dc; ++k) out[k] = F.add(out[k], cur[k]);
    }
}

}  // namespace

void eval_form_poly(const SymmetricForm& F, const std::uint32_t* x, std::size_t e, std::uint32_t* out) {
    eval_list_poly(F.field(), F.monomials(), F.d(), x, e, out);
}

FpMatrix gradient_matrix_poly(const SymmetricForm& F, const std::uint32_t* x0, std::size_t e) {
    const std::size_t d = F.d(), v = F.vars();
    const std::size_t dg = (d - 1) * e;
    FpMatrix M(d * e + 1, v * (e + 1));
    std::vector<std::uint32_t> g(dg + 1);
    for (std::size_t j = 0; j < v; ++j) {
        eval_list_poly(F.field(), F.partial(j), d - 1, x0, e, g.data());
        for (std::size_t i = 0; i <= e; ++i)
            for (std::size_t k = 0; k <= dg; ++k) M.at(i + k, j * (e + 1) + i) = g[k];
    }
    return M;
}

namespace {

template <class T, class Mul, class Add, class Scale>
T psi_generic(const SymmetricForm& F, std::size_t j, const std::vector<std::vector<T>>& y, T zero, Mul mul, Add add,
              Scale scale) {
    if (y.size() + 1 != F.d()) throw Error(ErrorKind::precondition, "Psi_j takes d-1 arguments");
    for (const auto& a : y)
        if (a.size() != F.vars()) throw Error(ErrorKind::precondition, "argument length must be n+1");
    T acc = zero;
    for (const auto& term : F.psi_terms(j)) {
        if (term.idx.empty()) {
            acc = add(acc, scale(zero, term.coeff, true));
            continue;
        }
        T prod = y[0][term.idx[0]];
        for (std::size_t k = 1; k < term.idx.size(); ++k) prod = mul(prod, y[k][term.idx[k]]);
        acc = add(acc, scale(prod, term.coeff, false));
    }
    return acc;
}

}  // namespace

std::uint32_t multilinear_psi(const SymmetricForm& F, std::size_t j, const std::vector<std::vector<std::uint32_t>>& y) {
    const PrimeField& K = F.field();
    return psi_generic<std::uint32_t>(
        F, j, y, 0u, [&](std::uint32_t a, std::uint32_t b) { return K.mul(a, b); },
        [&](std::uint32_t a, std::uint32_t b) { return K.add(a, b); },
        [&](std::uint32_t a, std::uint32_t c, bool unit) { return unit ? c : K.mul(a, c); });
}

JetSection multilinear_psi(const SymmetricForm& F, std::size_t j, const std::vector<std::vector<JetSection>>& y) {
    const PrimeField& K = F.field();
    if (y.empty() || y[0].empty()) throw Error(ErrorKind::precondition, "Psi_j on sections needs d-1 >= 1 arguments");
    std::size_t r = 0;
    for (const auto& a : y) r += a[0].r;
    const std::size_t m = y[0][0].m;
    JetSection zero(r, m);
    return psi_generic<JetSection>(
        F, j, y, zero, [&](const JetSection& a, const JetSection& b) { return mul_sections(K, a, b); },
        [&](const JetSection& a, const JetSection& b) {
            const std::size_t rr = std::max(a.r, b.r);
            return add_sections(K, widen(a, rr), widen(b, rr));
        },
        [&](const JetSection& a, std::uint32_t c, bool unit) {
            return unit ? JetSection::constant(r, m, c) : scale_section(K, a, c);
        });
}

JetSection difference_apply(const PrimeField& F, const SectionMap& G, const std::vector<std::vector<JetSection>>& ys,
                            const std::vector<JetSection>& x) {
    const std::size_t k = ys.size();
    if (k > 20) throw Error(ErrorKind::precondition, "too many difference steps");
    std::optional<JetSection> acc;
    for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
        std::vector<JetSection> pt = x;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1)
                for (std::size_t j = 0; j < pt.size(); ++j) pt[j] = add_sections(F, pt[j], ys[i][j]);
        JetSection v = G(pt);
        if ((k - static_cast<std::size_t>(__builtin_popcountll(mask))) % 2) v = scale_section(F, v, F.neg(1));
        acc = acc ? add_sections(F, *acc, v) : v;
    }
    return *acc;
}

// ---- extension fields for the smoothness search ----

namespace {

bool poly_divides(const PrimeField& F, const std::vector<std::uint32_t>& d, std::vector<std::uint32_t> a) {
    // d monic
    while (a.size() >= d.size()) {
        const std::uint32_t f = a.back();
        const std::size_t sh = a.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i) a[sh + i] = F.sub(a[sh + i], F.mul(f, d[i]));
        a.pop_back();
    }
    return std::all_of(a.begin(), a.end(), [](std::uint32_t v) { return v == 0; });
}

bool is_irreducible(const PrimeField& F, const std::vector<std::uint32_t>& f) {
    const std::size_t k = f.size() - 1;
    for (std::size_t dd = 1; 2 * dd <= k; ++dd) {
        const std::uint64_t cnt = ipow(F.p(), dd).get_ui();
        for (std::uint64_t idx = 0; idx < cnt; ++idx) {
            auto g = part_from_index(F, dd, idx);
            g.push_back(1);
            if (poly_divides(F, g, f)) return false;
        }
    }
    return true;
}

class ExtField {
   public:
    ExtField(const PrimeField& F, std::vector<std::uint32_t> modulus)
        : F_(F), mod_(std::move(modulus)), k_(mod_.size() - 1), q_(ipow(F.p(), k_).get_ui()) {
        // log/exp tables from a primitive element
        exp_.assign(q_ - 1, 0);
        log_.assign(q_, 0);
        if (q_ == 2) {
            exp_[0] = 1;
            log_[1] = 0;
            return;
        }
        for (std::uint64_t g = 2; g < q_; ++g) {
            std::uint64_t x = 1, order = 0;
            do {
                x = slow_mul(x, g);
                ++order;
            } while (x != 1 && order < q_);
            if (order != q_ - 1) continue;
            x = 1;
            for (std::uint64_t i = 0; i < q_ - 1; ++i) {
                exp_[i] = x;
                log_[x] = i;
                x = slow_mul(x, g);
            }
            return;
        }
        throw Error(ErrorKind::precondition, "no primitive element found");
    }

    std::uint64_t q() const noexcept { return q_; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
        std::uint64_t r = 0, place = 1;
        const std::uint32_t p = F_.p();
        for (std::size_t i = 0; i < k_; ++i) {
            r += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        return r;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    }
    std::uint64_t from_prime(std::uint32_t c) const noexcept { return c; }
    std::vector<std::uint32_t> coeffs(std::uint64_t a) const { return part_from_index(F_, k_, a); }

   private:
    std::uint64_t slow_mul(std::uint64_t a, std::uint64_t b) const {
        auto x = part_from_index(F_, k_, a), y = part_from_index(F_, k_, b);
        std::vector<std::uint32_t> prod(2 * k_ - 1, 0);
        for (std::size_t i = 0; i < k_; ++i)
            for (std::size_t j = 0; j < k_; ++j) prod[i + j] = F_.add(prod[i + j], F_.mul(x[i], y[j]));
        for (std::size_t t = prod.size(); t-- > k_;) {
            const std::uint32_t f = prod[t];
            if (!f) continue;
            for (std::size_t i = 0; i <= k_; ++i) prod[t - k_ + i] = F_.sub(prod[t - k_ + i], F_.mul(f, mod_[i]));
        }
        prod.resize(k_);
        return part_index(F_, prod);
    }

    PrimeField F_;
    std::vector<std::uint32_t> mod_;
    std::size_t k_;
    std::uint64_t q_;
    std::vector<std::uint64_t> exp_, log_;
};

mpz_class projective_points(std::uint64_t p, std::size_t k, std::size_t n) {
    const mpz_class q = ipow(p, k);
    mpz_class s = 0, t = 1;
    for (std::size_t i = 0; i <= n; ++i) {
        s += t;
        t *= q;
    }
    return s;
}

}  // namespace

std::vector<std::uint32_t> first_irreducible(const PrimeField& F, std::size_t k) {
    if (k == 0) throw Error(ErrorKind::precondition, "extension degree must be positive");
    const std::uint64_t cnt = ipow(F.p(), k).get_ui();
    for (std::uint64_t idx = 0; idx < cnt; ++idx) {
        // c_{k-1} fastest: reverse the base-p digits
        auto digits = part_from_index(F, k, idx);
        std::vector<std::uint32_t> f(digits.rbegin(), digits.rend());
        f.push_back(1);
        if (k == 1 || is_irreducible(F, f)) return f;
    }
    throw Error(ErrorKind::precondition, "no irreducible polynomial found");
}

std::size_t bezout_cap(const SymmetricForm& F) {
    std::size_t c = 1;
    for (std::size_t i = 0; i < F.n(); ++i) c *= F.d() - 1;
    return std::max<std::size_t>(c, 1);
}

std::size_t default_smoothness_kmax(const SymmetricForm& F, const Budget& budget) {
    const std::size_t cap = bezout_cap(F);
    mpz_class total = 0;
    std::size_t k = 0;
    while (k < cap) {
        total += projective_points(F.field().p(), k + 1, F.n());
        if (total > budget.ceiling) break;
        ++k;
    }
    return std::max<std::size_t>(k, 1);
}

SmoothnessResult smoothness_check(const SymmetricForm& F, std::size_t k_max, const Budget& budget) {
    if (k_max == 0) throw Error(ErrorKind::precondition, "k_max must be at least 1");
    const PrimeField& K = F.field();
    mpz_class total = 0;
    for (std::size_t k = 1; k <= k_max; ++k) total += projective_points(K.p(), k, F.n());
    budget.require(total, "smoothness_check up to degree " + std::to_string(k_max));

    SmoothnessResult res;
    res.cap = bezout_cap(F);
    const std::size_t v = F.vars();
    for (std::size_t k = 1; k <= k_max; ++k) {
        const auto modulus = first_irreducible(K, k);
        ExtField E(K, modulus);
        const std::uint64_t q = E.q();
        // partials as (coeff, exps) over the extension
        std::vector<std::uint64_t> x(v, 0);
        bool found = false;
        for (std::size_t lead = 0; lead < v && !found; ++lead) {
            std::fill(x.begin(), x.end(), 0);
            x[lead] = 1;
            const std::size_t free = v - lead - 1;
            std::uint64_t cnt = 1;
            for (std::size_t i = 0; i < free; ++i) cnt *= q;
            for (std::uint64_t idx = 0; idx < cnt && !found; ++idx) {
                std::uint64_t t = idx;
                for (std::size_t i = lead + 1; i < v; ++i) {
                    x[i] = t % q;
                    t /= q;
                }
                bool singular = true;
                for (std::size_t j = 0; j < v && singular; ++j) {
                    std::uint64_t s = 0;
                    for (const auto& mono : F.partial(j)) {
                        std::uint64_t term = E.from_prime(mono.coeff);
                        for (std::size_t a = 0; a < v && term; ++a)
                            for (unsigned c = 0; c < mono.exps[a]; ++c) term = E.mul(term, x[a]);
                        s = E.add(s, term);
                    }
                    singular = s == 0;
                }
                if (singular) {
                    found = true;
                    res.witness_degree = k;
                    res.modulus = modulus;
                    for (auto c : x) res.witness.push_back(E.coeffs(c));
                }
            }
        }
        if (found) return res;
        res.verified_up_to = k;
    }
    res.certified = res.verified_up_to >= res.cap;
    return res;
}

SymmetricForm parse_form(const PrimeField& F, const std::string& text, const std::string& id) {
    std::istringstream in(text);
    std::string line;
    std::vector<Monomial> monos;
    std::size_t vars = 0, d = 0, lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::istringstream ls(line);
        std::vector<long long> tok;
        std::string w;
        while (ls >> w) {
            try {
                std::size_t used = 0;
                tok.push_back(std::stoll(w, &used));
                if (used != w.size()) throw std::invalid_argument(w);
            } catch (const std::exception&) {
                throw Error(ErrorKind::parse, "form line " + std::to_string(lineno) + ": not an integer: " + w);
            }
        }
        if (tok.empty()) continue;
        if (tok.size() < 2) throw Error(ErrorKind::parse, "form line " + std::to_string(lineno) + ": need exponents and a coefficient");
        Monomial mono;
        std::size_t deg = 0;
        for (std::size_t i = 0; i + 1 < tok.size(); ++i) {
            if (tok[i] < 0) throw Error(ErrorKind::parse, "form line " + std::to_string(lineno) + ": negative exponent");
            mono.exps.push_back(static_cast<unsigned>(tok[i]));
            deg += static_cast<std::size_t>(tok[i]);
        }
        mono.coeff = F.reduce(tok.back());
        if (vars == 0) {
            vars = mono.exps.size();
            d = deg;
        } else if (vars != mono.exps.size() || d != deg) {
            throw Error(ErrorKind::parse, "form line " + std::to_string(lineno) + ": inconsistent variable count or degree");
        }
        monos.push_back(mono);
    }
    if (monos.empty()) throw Error(ErrorKind::parse, "form has no monomials");
    return SymmetricForm(F, vars - 1, d, monos, id);
}

SymmetricForm load_form(const PrimeField& F, const std::string& source, std::size_t n, std::size_t d) {
    if (source == "conic") return SymmetricForm::conic(F);
    if (source == "fermat") return SymmetricForm::fermat(F, n, d);
    std::ifstream in(source);
    if (!in) throw Error(ErrorKind::parse, "cannot open form file: " + source);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_form(F, ss.str(), source);
}

SymmetricForm random_smooth_form(const PrimeField& F, std::size_t n, std::size_t d, std::uint64_t seed, std::size_t max_tries) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> coef(0, F.p() - 1);
    for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
        std::vector<Monomial> monos;
        for_each_exponent(n + 1, d, [&](const std::vector<unsigned>& e) { monos.push_back({e, coef(rng)}); });
        bool any = std::any_of(monos.begin(), monos.end(), [](const Monomial& m) { return m.coeff != 0; });
        if (!any) continue;
        SymmetricForm G(F, n, d, monos, "random-" + std::to_string(seed));
        const auto r = smoothness_check(G, default_smoothness_kmax(G));
        if (!r.witness_degree) return G;
    }
    throw Error(ErrorKind::precondition, "no smooth random form found within the retry limit");
}

}  // namespace jetcircle
