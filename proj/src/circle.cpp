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

#include "jetcircle/circle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace jetcircle {

namespace {

struct Odometer {
    std::vector<std::uint32_t> v;
    std::uint32_t p;
    Odometer(std::size_t len, std::uint32_t p_) : v(len, 0), p(p_) {}
    bool next() {
        for (auto& d : v) {
            if (++d < p) return true;
            d = 0;
        }
        return false;
    }
};

std::uint64_t upow(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

std::size_t vars_dim(const SymmetricForm& F, std::size_t e) { return F.vars() * (e + 1); }

void set_layer(JetTuple& x, std::size_t k, const std::uint32_t* flat, std::size_t e) {
    for (std::size_t j = 0; j < x.size(); ++j)
        for (std::size_t i = 0; i <= e; ++i) x[j].at(i, k) = flat[j * (e + 1) + i];
}

// Index of the first `layers` layers of u (layer-major).
std::uint64_t layers_index(std::uint32_t p, const JetSection& u, std::size_t layers) {
    std::uint64_t idx = 0;
    for (std::size_t k = layers; k-- > 0;)
        for (std::size_t i = u.r + 1; i-- > 0;) idx = idx * p + u.at(i, k);
    return idx;
}

std::uint64_t vec_index(std::uint32_t p, const std::vector<std::uint32_t>& v) {
    std::uint64_t idx = 0;
    for (std::size_t i = v.size(); i-- > 0;) idx = idx * p + v[i];
    return idx;
}

// Visits x0 in P_e^{n+1} (flat, x[j*(e+1)+i]) that globally generate.
template <class Fn>
void for_each_gg(const SymmetricForm& F, std::size_t e, Fn&& fn) {
    Odometer od(vars_dim(F, e), F.field().p());
    do {
        if (globally_generates_poly(F.field(), od.v.data(), F.vars(), e)) fn(od.v);
    } while (od.next());
}

FpMatrix transpose(const FpMatrix& A) {
    FpMatrix T(A.cols(), A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) T.at(j, i) = A.at(i, j);
    return T;
}

void require_space(const SymmetricForm& F, std::size_t e, std::size_t m, const Budget& budget, const std::string& what) {
    budget.require(ipow(F.field().p(), vars_dim(F, e) * (m + 1)), what);
}

Json base_params(const SymmetricForm& F, std::size_t e, std::size_t m) {
    return Json{{"p", F.field().p()}, {"n", F.n()}, {"d", F.d()}, {"e", e}, {"m", m}, {"form", F.id()}};
}

CheckReport make_report(const std::string& name, Json params, const CyclotomicSum& lhs, const CyclotomicSum& rhs) {
    CheckReport r;
    r.check = name;
    r.params = std::move(params);
    r.lhs = cyclo_json(lhs.normalized());
    r.rhs = cyclo_json(rhs.normalized());
    r.verdict = lhs == rhs ? "equal" : "violated";
    if (lhs.is_rational() && rhs.is_rational()) {
        r.details["lhs_value"] = integer_json(lhs.rational_value());
        r.details["rhs_value"] = integer_json(rhs.rational_value());
    }
    return r;
}

}  // namespace

std::uint64_t section_index(const PrimeField& K, const JetSection& u) { return layers_index(K.p(), u, u.m + 1); }

std::vector<std::vector<std::uint32_t>> effective_functional(const PrimeField& K, const DualFunctional& a) {
    std::vector<std::vector<std::uint32_t>> g(a.m + 1, std::vector<std::uint32_t>(a.r + 1, 0));
    for (std::size_t k = 0; k <= a.m; ++k)
        for (std::size_t b = 0; b + k <= a.m; ++b)
            for (std::size_t i = 0; i <= a.r; ++i) g[k][i] = K.add(g[k][i], a.parts[b][i]);
    return g;
}

std::uint64_t gamma_index(const PrimeField& K, const DualFunctional& a) {
    const auto g = effective_functional(K, a);
    std::uint64_t idx = 0;
    for (std::size_t k = a.m + 1; k-- > 0;)
        for (std::size_t i = a.r + 1; i-- > 0;) idx = idx * K.p() + g[k][i];
    return idx;
}

DualFunctional dual_from_gamma(const PrimeField& K, std::size_t r, std::size_t m, std::uint64_t gamma) {
    std::vector<std::vector<std::uint32_t>> g(m + 1, std::vector<std::uint32_t>(r + 1));
    for (std::size_t k = 0; k <= m; ++k)
        for (std::size_t i = 0; i <= r; ++i) {
            g[k][i] = static_cast<std::uint32_t>(gamma % K.p());
            gamma /= K.p();
        }
    DualFunctional a(r, m);
    for (std::size_t b = 0; b <= m; ++b)
        for (std::size_t i = 0; i <= r; ++i) a.parts[b][i] = b == 0 ? g[m][i] : K.sub(g[m - b][i], g[m - b + 1][i]);
    return a;
}

std::uint64_t alpha0_of_gamma(const PrimeField& K, std::size_t r, std::size_t m, std::uint64_t gamma) {
    return gamma / upow(K.p(), m * (r + 1));
}

DftTable::DftTable(std::uint32_t p, std::size_t digits, const std::vector<std::int64_t>& hist)
    : p_(p), size_(upow(p, digits)), t_(size_ * p, 0) {
    if (hist.size() != size_) throw Error(ErrorKind::precondition, "histogram size does not match digit count");
    for (std::uint64_t u = 0; u < size_; ++u) t_[u * p] = hist[u];
    std::vector<std::int64_t> tmp(static_cast<std::size_t>(p) * p);
    std::uint64_t stride = 1;
    for (std::size_t d = 0; d < digits; ++d, stride *= p) {
        for (std::uint64_t base = 0; base < size_; ++base) {
            if ((base / stride) % p != 0) continue;
            std::fill(tmp.begin(), tmp.end(), 0);
            for (std::uint32_t g = 0; g < p; ++g)
                for (std::uint32_t u = 0; u < p; ++u) {
                    const std::int64_t* src = &t_[(base + u * stride) * p];
                    const std::uint32_t shift = static_cast<std::uint32_t>((static_cast<std::uint64_t>(g) * u) % p);
                    std::int64_t* dst = &tmp[static_cast<std::size_t>(g) * p];
                    for (std::uint32_t c = 0; c < p; ++c) dst[(c + shift) % p] += src[c];
                }
            for (std::uint32_t g = 0; g < p; ++g)
                std::copy(&tmp[static_cast<std::size_t>(g) * p], &tmp[static_cast<std::size_t>(g) * p] + p,
                          &t_[(base + g * stride) * p]);
        }
    }
}

CyclotomicSum DftTable::at(std::uint64_t gamma) const {
    std::vector<std::int64_t> c(t_.begin() + static_cast<std::ptrdiff_t>(gamma * p_),
                                t_.begin() + static_cast<std::ptrdiff_t>((gamma + 1) * p_));
    return CyclotomicSum::from_counts(p_, c);
}

std::vector<std::int64_t> value_histogram(const SymmetricForm& F, std::size_t e, std::size_t m, const Budget& budget) {
    const PrimeField& K = F.field();
    const std::uint32_t p = K.p();
    const std::size_t N = vars_dim(F, e), de = F.d() * e;
    // x0 and the free middle layers are enumerated; the top layer sweeps at most p^(de+1) values.
    budget.require(ipow(p, N * std::max<std::size_t>(m, 1) + (m ? de + 1 : 0)), "value_histogram");
    std::vector<std::int64_t> H(upow(p, (de + 1) * (m + 1)), 0);
    const std::uint64_t top_scale = upow(p, m * (de + 1));
    for_each_gg(F, e, [&](const std::vector<std::uint32_t>& x0) {
        JetTuple x(F.vars(), JetSection(e, m));
        set_layer(x, 0, x0.data(), e);
        if (m == 0) {
            H[section_index(K, eval_form(F, x))] += 1;
            return;
        }
        const FpMatrix L = gradient_matrix_poly(F, x0.data(), e);
        const auto img = image_basis(K, L);
        const std::int64_t mult = static_cast<std::int64_t>(upow(p, N - img.size()));
        Odometer mid(N * (m - 1), p);
        do {
            for (std::size_t k = 1; k < m; ++k) set_layer(x, k, mid.v.data() + (k - 1) * N, e);
            const JetSection val = eval_form(F, x);
            const std::uint64_t low = layers_index(p, val, m);
            for_each_in_coset(K, val.layer(m), img,
                              [&](const std::vector<std::uint32_t>& w) { H[low + top_scale * vec_index(p, w)] += mult; });
        } while (mid.next());
    });
    return H;
}

std::vector<std::int64_t> top_histogram(const SymmetricForm& F, std::size_t e, std::size_t m, const Budget& budget) {
    if (m == 0) return value_histogram(F, e, 0, budget);
    const PrimeField& K = F.field();
    const std::uint32_t p = K.p();
    const std::size_t N = vars_dim(F, e), de = F.d() * e;
    // Intermediate coset sizes depend on x0, so the visit count is also checked as the walk proceeds.
    budget.require(ipow(p, N + de + 1), "top_histogram");
    mpz_class visited = 0;
    std::vector<std::int64_t> H(upow(p, de + 1), 0);
    std::vector<std::uint32_t> val0(de + 1);
    for_each_gg(F, e, [&](const std::vector<std::uint32_t>& x0) {
        eval_form_poly(F, x0.data(), e, val0.data());
        if (std::any_of(val0.begin(), val0.end(), [](std::uint32_t c) { return c != 0; })) return;
        const FpMatrix L = gradient_matrix_poly(F, x0.data(), e);
        const LinearSolver S(K, L);
        const auto img = image_basis(K, L);
        const std::int64_t mult = static_cast<std::int64_t>(upow(p, N - img.size()));
        JetTuple x(F.vars(), JetSection(e, m));
        set_layer(x, 0, x0.data(), e);
        // Layers 1..m-1 solve F(x) = 0 mod t^m; the top layer sweeps its coset.
        std::function<void(std::size_t)> walk = [&](std::size_t k) {
            const JetSection val = eval_form(F, x);
            if (k == m) {
                for_each_in_coset(K, val.layer(m), img, [&](const std::vector<std::uint32_t>& w) { H[vec_index(p, w)] += mult; });
                visited += upow(p, img.size());
                if (visited > budget.ceiling) budget.require(visited, "top_histogram walk");
                return;
            }
            std::vector<std::uint32_t> rhs(de + 1);
            for (std::size_t i = 0; i <= de; ++i) rhs[i] = K.neg(val.at(i, k));
            const auto part = S.particular(rhs);
            if (!part) return;
            for_each_in_coset(K, *part, S.kernel(), [&](const std::vector<std::uint32_t>& v) {
                set_layer(x, k, v.data(), e);
                walk(k + 1);
            });
            std::vector<std::uint32_t> zero(N, 0);
            set_layer(x, k, zero.data(), e);
        };
        walk(1);
    });
    return H;
}

PairHistograms pair_histograms(const SymmetricForm& F, std::size_t e, std::size_t m, bool top_only, const Budget& budget) {
    const PrimeField& K = F.field();
    const std::uint32_t p = K.p();
    const std::size_t N = vars_dim(F, e), de = F.d() * e, M = m + 1;
    PairHistograms out;
    out.by_beta[0] = top_only ? top_histogram(F, e, m, budget) : value_histogram(F, e, m, budget);
    const std::uint64_t hsize = out.by_beta[0].size();
    for_each_gg(F, e, [&](const std::vector<std::uint32_t>& x0) {
        if (LinearSolver(K, gradient_matrix_poly(F, x0.data(), e)).surjective()) return;
        ++out.nonsurjective_x0;
        JetTuple x(F.vars(), JetSection(e, m));
        set_layer(x, 0, x0.data(), e);
        Odometer up(N * m, p);
        do {
            for (std::size_t k = 1; k <= m; ++k) set_layer(x, k, up.v.data() + (k - 1) * N, e);
            const JetSection val = eval_form(F, x);
            std::uint64_t slot;
            if (top_only) {
                bool low_zero = true;
                for (std::size_t k = 0; k < m && low_zero; ++k)
                    for (std::size_t i = 0; i <= de && low_zero; ++i) low_zero = val.at(i, k) == 0;
                if (!low_zero) continue;
                slot = vec_index(p, val.layer(m));
            } else {
                slot = section_index(K, val);
            }
            const FpMatrix Lam = pairing_matrix(K, gradient(F, x), e);
            const auto ann = kernel_basis(K, transpose(Lam));
            // Annihilator vectors are in section layout (deg*(m+1)+l); convert to gamma indices.
            std::vector<std::vector<std::uint32_t>> basis;
            for (const auto& w : ann) {
                std::vector<std::uint32_t> g((de + 1) * M);
                for (std::size_t l = 0; l <= m; ++l)
                    for (std::size_t i = 0; i <= de; ++i) g[l * (de + 1) + i] = w[i * M + l];
                basis.push_back(std::move(g));
            }
            std::vector<std::uint32_t> zero((de + 1) * M, 0);
            for_each_in_coset(K, zero, basis, [&](const std::vector<std::uint32_t>& g) {
                const std::uint64_t key = vec_index(p, g);
                if (key == 0) return;
                auto& h = out.by_beta[key];
                if (h.empty()) h.assign(hsize, 0);
                h[slot] += 1;
            });
        } while (m > 0 && up.next());
    });
    return out;
}

SumTable::SumTable(const SymmetricForm& F, std::size_t e, std::size_t m, const Budget& budget, std::uint64_t cap)
    : K_(F.field()), de_(F.d() * e), m_(m) {
    const mpz_class entries = ipow(K_.p(), (de_ + 1) * (m + 1));
    if (entries > cap)
        throw BudgetExceeded("SumTable(e=" + std::to_string(e) + ", m=" + std::to_string(m) + ") table size", entries, cap);
    table_ = std::make_unique<DftTable>(K_.p(), (de_ + 1) * (m + 1), value_histogram(F, e, m, budget));
}

CyclotomicSum SumTable::S(const DualFunctional& a) const {
    if (a.r != de_ || a.m != m_) throw Error(ErrorKind::precondition, "functional shape does not match the table");
    return table_->at(gamma_index(K_, a));
}

PairSumTable::PairSumTable(const SymmetricForm& F, std::size_t e, std::size_t m, const Budget& budget, std::uint64_t cap)
    : K_(F.field()), de_(F.d() * e), m_(m), size_(upow(K_.p(), (de_ + 1) * (m + 1))),
      x1_factor_(ipow(K_.p(), vars_dim(F, e) * (m + 1))) {
    if (mpz_class(size_) > cap) throw BudgetExceeded("PairSumTable table size", ipow(K_.p(), (de_ + 1) * (m + 1)), cap);
    auto hist = pair_histograms(F, e, m, false, budget);
    for (auto& [key, h] : hist.by_beta) tables_.emplace(key, DftTable(K_.p(), (de_ + 1) * (m + 1), h));
}

CyclotomicSum PairSumTable::S(const DualFunctional& a, const DualFunctional& b) const {
    const auto it = tables_.find(gamma_index(K_, b));
    if (it == tables_.end()) return CyclotomicSum::zero(K_.p());
    return it->second.at(gamma_index(K_, a)).scaled(x1_factor_);
}

CyclotomicSum S_alpha(const SymmetricForm& F, std::size_t e, std::size_t m, const DualFunctional& a, const Budget& budget,
                      SumMode mode) {
    const PrimeField& K = F.field();
    if (a.r != F.d() * e || a.m != m) throw Error(ErrorKind::precondition, "alpha must lie in the dual of P_{de,m}");
    if (mode == SumMode::direct) require_space(F, e, m, budget, "S_alpha");
    std::vector<std::int64_t> counts(K.p(), 0);
    if (mode == SumMode::fast) {
        const auto H = value_histogram(F, e, m, budget);
        const auto g = effective_functional(K, a);
        const std::size_t de = a.r;
        Odometer u((de + 1) * (m + 1), K.p());
        std::uint64_t idx = 0;
        do {
            if (H[idx]) {
                std::uint64_t c = 0;
                for (std::size_t k = 0; k <= m; ++k)
                    for (std::size_t i = 0; i <= de; ++i) c += static_cast<std::uint64_t>(g[k][i]) * u.v[k * (de + 1) + i];
                counts[c % K.p()] += H[idx];
            }
            ++idx;
        } while (u.next());
        return CyclotomicSum::from_counts(K.p(), counts);
    }
    const std::size_t N = vars_dim(F, e);
    Odometer od(N * (m + 1), K.p());
    do {
        JetTuple x(F.vars(), JetSection(e, m));
        for (std::size_t k = 0; k <= m; ++k) set_layer(x, k, od.v.data() + k * N, e);
        if (!globally_generates(K, x)) continue;
        const JetScalar v = a.apply(K, eval_form(F, x));
        std::uint64_t s = 0;
        for (auto c : v.coeffs) s += c;
        counts[s % K.p()] += 1;
    } while (od.next());
    return CyclotomicSum::from_counts(K.p(), counts);
}

CyclotomicSum S_alpha_beta(const SymmetricForm& F, std::size_t e, std::size_t m, const DualFunctional& a,
                           const DualFunctional& b, const Budget& budget, SumMode mode) {
    const PrimeField& K = F.field();
    const std::size_t N = vars_dim(F, e);
    if (a.r != F.d() * e || a.m != m || b.r != a.r || b.m != m)
        throw Error(ErrorKind::precondition, "alpha and beta must lie in the dual of P_{de,m}");
    require_space(F, e, m, budget, "S_alpha_beta");
    const mpz_class x1_space = ipow(K.p(), N * (m + 1));
    if (mode == SumMode::direct) budget.require(x1_space * x1_space, "S_alpha_beta direct enumeration");
    std::vector<std::int64_t> counts(K.p(), 0);
    Odometer od(N * (m + 1), K.p());
    do {
        JetTuple x(F.vars(), JetSection(e, m));
        for (std::size_t k = 0; k <= m; ++k) set_layer(x, k, od.v.data() + k * N, e);
        if (!globally_generates(K, x)) continue;
        const JetScalar va = a.apply(K, eval_form(F, x));
        std::uint64_t sa = 0;
        for (auto c : va.coeffs) sa += c;
        if (mode == SumMode::fast) {
            const FpMatrix Lam = pairing_matrix(K, gradient(F, x), e);
            const auto g = effective_functional(K, b);
            bool orth = true;
            for (std::size_t col = 0; col < Lam.cols() && orth; ++col) {
                std::uint64_t s = 0;
                for (std::size_t i = 0; i <= a.r; ++i)
                    for (std::size_t l = 0; l <= m; ++l) s += static_cast<std::uint64_t>(g[l][i]) * Lam.at(i * (m + 1) + l, col);
                orth = s % K.p() == 0;
            }
            if (orth) counts[sa % K.p()] += 1;
            continue;
        }
        Odometer o1(N * (m + 1), K.p());
        do {
            JetTuple x1(F.vars(), JetSection(e, m));
            for (std::size_t k = 0; k <= m; ++k) set_layer(x1, k, o1.v.data() + k * N, e);
            const JetScalar vb = b.apply(K, gradient_pairing(F, x1, x));
            std::uint64_t sb = sa;
            for (auto c : vb.coeffs) sb += c;
            counts[sb % K.p()] += 1;
        } while (o1.next());
    } while (od.next());
    auto out = CyclotomicSum::from_counts(K.p(), counts);
    return mode == SumMode::fast ? out.scaled(x1_space) : out;
}

CyclotomicSum T_major(const SymmetricForm& F, std::size_t e, const DualFunctional& alpha0, const std::vector<JetSection>& y,
                      SumMode mode) {
    const PrimeField& K = F.field();
    const std::size_t N = vars_dim(F, e), de = F.d() * e;
    if (alpha0.r != de) throw Error(ErrorKind::precondition, "alpha0 must lie in the dual of P_de");
    if (y.size() != F.vars()) throw Error(ErrorKind::precondition, "y must have n+1 coordinates");
    std::vector<std::uint32_t> y0(N);
    for (std::size_t j = 0; j < F.vars(); ++j)
        for (std::size_t i = 0; i <= e; ++i) y0[j * (e + 1) + i] = i <= y[j].r ? y[j].at(i, 0) : 0;
    if (!globally_generates_poly(K, y0.data(), F.vars(), e))
        throw Error(ErrorKind::precondition, "T_major requires y globally generating mod t");
    const FpMatrix L = gradient_matrix_poly(F, y0.data(), e);
    const auto& a0 = alpha0.parts[0];
    if (mode == SumMode::fast) {
        for (std::size_t col = 0; col < N; ++col) {
            std::uint64_t s = 0;
            for (std::size_t i = 0; i <= de; ++i) s += static_cast<std::uint64_t>(a0[i]) * L.at(i, col);
            if (s % K.p()) return CyclotomicSum::zero(K.p());
        }
        return CyclotomicSum::integer(K.p(), ipow(K.p(), N));
    }
    std::vector<std::int64_t> counts(K.p(), 0);
    Odometer z(N, K.p());
    do {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i <= de; ++i) {
            std::uint64_t w = 0;
            for (std::size_t col = 0; col < N; ++col) w += static_cast<std::uint64_t>(L.at(i, col)) * z.v[col];
            s += static_cast<std::uint64_t>(a0[i]) * (w % K.p());
        }
        counts[s % K.p()] += 1;
    } while (z.next());
    return CyclotomicSum::from_counts(K.p(), counts);
}

ArcLabel classify_arc(const PrimeField& K, const DualFunctional& a, std::size_t e) {
    const auto md = minimal_divisor(K, a, e + 1);
    ArcLabel l;
    l.Z = md.Z;
    l.degree = md.degree;
    l.major = md.degree <= e + 1;
    l.unique = md.unique_below_bound;
    return l;
}

PairArcLabel classify_arc_pair(const PrimeField& K, const DualFunctional& a, const DualFunctional& b, std::size_t e) {
    PairArcLabel l{classify_arc(K, a, e), classify_arc(K, b, e), false};
    l.major = l.alpha.major && l.beta.major;
    return l;
}

CheckReport check_orthogonality(const SymmetricForm& F, std::size_t e, std::size_t m, bool pairs, const Budget& budget) {
    const PrimeField& K = F.field();
    const std::uint32_t p = K.p();
    const std::size_t de = F.d() * e, D = (de + 1) * (m + 1);
    budget.require(ipow(p, D * (pairs ? 2 : 1)), "check_orthogonality alpha enumeration");
    Json params = base_params(F, e, m);
    params["pairs"] = pairs;
    CyclotomicSum lhs = CyclotomicSum::zero(p);
    CyclotomicSum rhs;
    std::uint64_t nonzero_terms = 0;
    if (!pairs) {
        const SumTable T(F, e, m, budget, ~0ull);
        for (std::uint64_t g = 0; g < T.size(); ++g) {
            const auto s = T.at_gamma(g);
            if (!s.is_zero()) ++nonzero_terms;
            lhs += s;
        }
        rhs = CyclotomicSum::integer(p, ipow(p, D) * count_Mm(F, e, m, budget).raw_count);
    } else {
        const PairSumTable T(F, e, m, budget, ~0ull);
        for (const auto& [key, t] : T.tables()) {
            CyclotomicSum part = CyclotomicSum::zero(p);
            for (std::uint64_t g = 0; g < t.size(); ++g) part += t.at(g);
            if (!part.is_zero()) ++nonzero_terms;
            lhs += part.scaled(T.x1_factor());
        }
        rhs = CyclotomicSum::integer(p, ipow(p, 2 * D) * count_M1m(F, e, m, budget).raw_count);
    }
    auto r = make_report(pairs ? "orthogonality_pairs" : "orthogonality", params, lhs, rhs);
    r.details["nonzero_terms"] = nonzero_terms;
    r.details["factor_exponent"] = pairs ? 2 * D : D;
    return r;
}

namespace {

// Sum of S over all functionals at level m, or over those whose t^0 part passes `keep`.
struct ClassSums {
    CyclotomicSum total;
    std::map<std::size_t, CyclotomicSum> per_class;  // keyed by divisor id
    std::string method;
};

ClassSums major_class_sums(const SymmetricForm& F, std::size_t e, std::size_t m, const DegreeTable& deg, const Budget& budget,
                           std::uint64_t cap) {
    const PrimeField& K = F.field();
    const std::uint32_t p = K.p();
    const std::size_t de = F.d() * e;
    ClassSums out{CyclotomicSum::zero(p), {}, {}};
    auto add = [&](std::uint64_t a0, const CyclotomicSum& v) {
        if (deg.degree(a0) > e + 1) return;
        out.total += v;
        auto it = out.per_class.find(deg.divisor_id(a0));
        if (it == out.per_class.end())
            out.per_class.emplace(deg.divisor_id(a0), v);
        else
            it->second += v;
    };
    if (ipow(p, (de + 1) * (m + 1)) <= cap) {
        out.method = "full_table";
        const SumTable T(F, e, m, budget, cap);
        for (std::uint64_t g = 0; g < T.size(); ++g) add(alpha0_of_gamma(K, de, m, g), T.at_gamma(g));
        return out;
    }
    // Summing over the higher parts of alpha forces F(x) = 0 mod t^m.
    out.method = "marginal";
    const DftTable top(p, de + 1, top_histogram(F, e, m, budget));
    const mpz_class factor = ipow(p, m * (de + 1));
    for (std::uint64_t a0 = 0; a0 < top.size(); ++a0) add(a0, top.at(a0).scaled(factor));
    return out;
}

CyclotomicSum all_sum(const SymmetricForm& F, std::size_t e, std::size_t m, const Budget& budget, std::uint64_t cap) {
    const std::uint32_t p = F.field().p();
    const std::size_t de = F.d() * e;
    if (ipow(p, (de + 1) * (m + 1)) <= cap) {
        const SumTable T(F, e, m, budget, cap);
        CyclotomicSum s = CyclotomicSum::zero(p);
        for (std::uint64_t g = 0; g < T.size(); ++g) s += T.at_gamma(g);
        return s;
    }
    const auto H = value_histogram(F, e, m, budget);
    return CyclotomicSum::integer(p, ipow(p, (de + 1) * (m + 1)) * H[0]);
}

}  // namespace

CheckReport check_major_identity(const SymmetricForm& F, std::size_t e, std::size_t m, bool pairs, const Budget& budget,
                                 std::uint64_t cap) {
    if (m < 1) throw Error(ErrorKind::precondition, "check_major_identity needs m >= 1");
    const PrimeField& K = F.field();
    const std::uint32_t p = K.p();
    const std::size_t de = F.d() * e, N = vars_dim(F, e);
    const DegreeTable deg(K, de, e + 1);
    std::size_t nonunique = 0;
    for (std::uint64_t a0 = 0; a0 < deg.size(); ++a0)
        if (deg.degree(a0) <= e + 1 && !deg.unique(a0)) ++nonunique;
    Json params = base_params(F, e, m);
    params["pairs"] = pairs;
    CyclotomicSum lhs = CyclotomicSum::zero(p), rhs;
    Json details = Json::object();
    details["major_nonunique_minimal_divisor"] = nonunique;
    if (!pairs) {
        const auto cls = major_class_sums(F, e, m, deg, budget, cap);
        lhs = cls.total;
        rhs = all_sum(F, e, m - 1, budget, cap).scaled(ipow(p, N));
        std::size_t nonzero_nontrivial = 0;
        for (const auto& [id, v] : cls.per_class)
            if (!deg.divisor(id).is_zero() && !v.is_zero()) ++nonzero_nontrivial;
        details["method"] = cls.method;
        details["classes"] = cls.per_class.size();
        details["nonvanishing_nonzero_classes"] = nonzero_nontrivial;
        details["factor_exponent"] = N;
    } else {
        const mpz_class x1f = ipow(p, N * (m + 1));
        const std::uint64_t low = upow(p, m * (de + 1));
        std::uint64_t keys = 0;
        if (ipow(p, (de + 1) * (m + 1)) <= cap) {
            details["method"] = "full_table";
            const PairSumTable T(F, e, m, budget, cap);
            for (const auto& [key, t] : T.tables()) {
                if (deg.degree(key / low) > e + 1) continue;
                ++keys;
                CyclotomicSum part = CyclotomicSum::zero(p);
                for (std::uint64_t g = 0; g < t.size(); ++g)
                    if (deg.degree(g / low) <= e + 1) part += t.at(g);
                lhs += part.scaled(x1f);
            }
        } else {
            details["method"] = "marginal";
            const auto hist = pair_histograms(F, e, m, true, budget);
            const mpz_class factor = x1f * ipow(p, m * (de + 1));
            for (const auto& [key, h] : hist.by_beta) {
                if (deg.degree(key / low) > e + 1) continue;
                ++keys;
                const DftTable t(p, de + 1, h);
                for (std::uint64_t a0 = 0; a0 < t.size(); ++a0)
                    if (deg.degree(a0) <= e + 1) lhs += t.at(a0).scaled(factor);
            }
        }
        // Right side at level m-1, summing all (alpha, beta).
        const mpz_class x1f_prev = ipow(p, N * m);
        CyclotomicSum prev = CyclotomicSum::zero(p);
        if (ipow(p, (de + 1) * m) <= cap) {
            const PairSumTable T(F, e, m - 1, budget, cap);
            for (const auto& [key, t] : T.tables())
                for (std::uint64_t g = 0; g < t.size(); ++g) prev += t.at(g).scaled(x1f_prev);
        } else {
            const auto hist = pair_histograms(F, e, m - 1, false, budget);
            mpz_class zeros = 0;
            for (const auto& [key, h] : hist.by_beta) zeros += h[0];
            prev = CyclotomicSum::integer(p, x1f_prev * ipow(p, m * (de + 1)) * zeros);
        }
        rhs = prev.scaled(ipow(p, 2 * N));
        details["major_beta_keys"] = keys;
        details["factor_exponent"] = 2 * N;
    }
    auto r = make_report(pairs ? "major_identity_pairs" : "major_identity", params, lhs, rhs);
    for (auto& [k, v] : details.items()) r.details[k] = v;
    return r;
}

CheckReport check_t_vanishing(const SymmetricForm& F, std::size_t e, std::size_t slow_slices, std::uint64_t seed,
                              const Budget& budget) {
    const PrimeField& K = F.field();
    const std::uint32_t p = K.p();
    const std::size_t N = vars_dim(F, e), de = F.d() * e;
    budget.require(ipow(p, N), "check_t_vanishing y enumeration");
    const DegreeTable deg(K, de, e + 1);
    std::vector<std::uint64_t> major;
    for (std::uint64_t a0 = 0; a0 < deg.size(); ++a0)
        if (deg.degree(a0) <= e + 1) major.push_back(a0);
    std::vector<std::vector<std::uint32_t>> ys;
    std::uint64_t pairs_checked = 0, violations = 0;
    Json first = nullptr;
    for_each_gg(F, e, [&](const std::vector<std::uint32_t>& y0) {
        ys.push_back(y0);
        const auto left = kernel_basis(K, transpose(gradient_matrix_poly(F, y0.data(), e)));
        pairs_checked += major.size();
        std::vector<std::uint32_t> zero(de + 1, 0);
        for_each_in_coset(K, zero, left, [&](const std::vector<std::uint32_t>& a0) {
            const std::uint64_t idx = part_index(K, a0);
            if (idx == 0 || deg.degree(idx) > e + 1) return;
            ++violations;
            if (first.is_null()) first = Json{{"y", y0}, {"alpha0", a0}};
        });
    });
    // Slow slices: literal z-enumeration for every major alpha0, grouping z by the value of z . grad F(y).
    std::mt19937_64 rng(seed);
    std::uint64_t slow_checked = 0, slow_mismatch = 0;
    for (std::size_t s = 0; s < slow_slices && !ys.empty(); ++s) {
        const auto& y0 = ys[rng() % ys.size()];
        const FpMatrix L = gradient_matrix_poly(F, y0.data(), e);
        std::vector<std::int64_t> hist(upow(p, de + 1), 0);
        Odometer z(N, p);
        std::vector<std::uint32_t> w(de + 1);
        do {
            for (std::size_t i = 0; i <= de; ++i) {
                std::uint64_t acc = 0;
                for (std::size_t col = 0; col < N; ++col) acc += static_cast<std::uint64_t>(L.at(i, col)) * z.v[col];
                w[i] = static_cast<std::uint32_t>(acc % p);
            }
            hist[vec_index(p, w)] += 1;
        } while (z.next());
        std::vector<JetSection> y(F.vars(), JetSection(e, 0));
        for (std::size_t j = 0; j < F.vars(); ++j)
            for (std::size_t i = 0; i <= e; ++i) y[j].at(i, 0) = y0[j * (e + 1) + i];
        for (auto a0 : major) {
            const auto av = part_from_index(K, de + 1, a0);
            std::vector<std::int64_t> counts(p, 0);
            for (std::uint64_t wi = 0; wi < hist.size(); ++wi) {
                if (!hist[wi]) continue;
                const auto wv = part_from_index(K, de + 1, wi);
                counts[pair_layer(K, av, wv)] += hist[wi];
            }
            const auto slow = CyclotomicSum::from_counts(p, counts);
            DualFunctional a(de, 0);
            a.parts[0] = av;
            const auto fast = T_major(F, e, a, y, SumMode::fast);
            const bool expect_ok = a0 == 0 ? slow == CyclotomicSum::integer(p, ipow(p, N)) : slow.is_zero();
            ++slow_checked;
            if (slow != fast || !expect_ok) ++slow_mismatch;
        }
    }
    CheckReport r;
    r.check = "t_vanishing";
    r.params = base_params(F, e, 0);
    r.lhs = violations + slow_mismatch;
    r.rhs = 0;
    r.verdict = violations + slow_mismatch == 0 ? "holds" : "fails";
    r.details = Json{{"globally_generating_y", ys.size()},
                     {"major_alpha0", major.size()},
                     {"pairs_checked", pairs_checked},
                     {"slow_pairs_checked", slow_checked},
                     {"slow_mismatches", slow_mismatch}};
    if (!first.is_null()) r.details["first_violation"] = first;
    return r;
}

CheckReport check_character_orthogonality(const PrimeField& K, std::size_t r, std::size_t m) {
    const std::uint32_t p = K.p();
    const std::size_t D = (r + 1) * (m + 1);
    Budget::standard().require(ipow(p, 2 * D), "check_character_orthogonality");
    const std::uint64_t card = upow(p, D);
    std::uint64_t failures = 0;
    Odometer y(D, p);
    do {
        JetSection u(r, m);
        for (std::size_t k = 0; k <= m; ++k)
            for (std::size_t i = 0; i <= r; ++i) u.at(i, k) = y.v[k * (r + 1) + i];
        // alpha -> psi exponent is linear in alpha; read its coefficients off unit functionals.
        std::vector<std::uint32_t> w(D);
        for (std::size_t b = 0; b <= m; ++b)
            for (std::size_t i = 0; i <= r; ++i) {
                DualFunctional a(r, m);
                a.parts[b][i] = 1;
                std::uint64_t s = 0;
                for (auto c : a.apply(K, u).coeffs) s += c;
                w[b * (r + 1) + i] = static_cast<std::uint32_t>(s % p);
            }
        std::vector<std::int64_t> counts(p, 0);
        Odometer a(D, p);
        do {
            std::uint64_t val = 0;
            for (std::size_t j = 0; j < D; ++j) val += static_cast<std::uint64_t>(a.v[j]) * w[j];
            counts[val % p] += 1;
        } while (a.next());
        const auto s = CyclotomicSum::from_counts(p, counts);
        const bool zero = std::all_of(y.v.begin(), y.v.end(), [](std::uint32_t c) { return c == 0; });
        const auto expect = zero ? CyclotomicSum::integer(p, card) : CyclotomicSum::zero(p);
        if (s != expect) ++failures;
    } while (y.next());
    CheckReport rep;
    rep.check = "character_orthogonality";
    rep.params = Json{{"p", p}, {"r", r}, {"m", m}};
    rep.lhs = failures;
    rep.rhs = 0;
    rep.verdict = failures == 0 ? "holds" : "fails";
    rep.details["sections_checked"] = card;
    return rep;
}

namespace {

// Coefficient sections C_ij of Psi_i(fixed..., .) = sum_j C_ij y_j.
std::vector<std::vector<JetSection>> psi_coefficients(const SymmetricForm& F, const std::vector<JetTuple>& fixed, std::size_t r,
                                                      std::size_t k) {
    const PrimeField& K = F.field();
    const std::size_t v = F.vars(), d = F.d(), rc = (d - 2) * r;
    std::vector<std::vector<JetSection>> C(v, std::vector<JetSection>(v, JetSection(rc, k)));
    for (std::size_t i = 0; i < v; ++i)
        for (const auto& term : F.psi_terms(i)) {
            JetSection prod = JetSection::constant(0, k, term.coeff);
            for (std::size_t a = 0; a + 2 < d; ++a) prod = mul_sections(K, prod, fixed[a][term.idx[a]]);
            const std::size_t j = term.idx[d - 2];
            C[i][j] = add_sections(K, C[i][j], widen(prod, rc));
        }
    return C;
}

// Value of alpha(rho * x^c t^j) mod t^kk at t^l, straight from the definition.
std::uint32_t pairing_coeff(const PrimeField& K, const DualFunctional& a, const JetSection& rho, std::size_t c, std::size_t j,
                            std::size_t l) {
    std::uint64_t s = 0;
    for (std::size_t b = j; b <= l; ++b) {
        const std::size_t layer = b - j;
        if (layer > rho.m) continue;
        const auto& al = a.parts[l - b];
        for (std::size_t i = 0; i <= rho.r; ++i)
            if (i + c <= a.r) s += static_cast<std::uint64_t>(al[i + c]) * rho.at(i, layer);
    }
    return static_cast<std::uint32_t>(s % K.p());
}

}  // namespace

mpz_class N_count(const SymmetricForm& F, std::size_t e, const DualFunctional& a, long k1, long k2, std::size_t s,
                  const Budget& budget, NMode mode) {
    const PrimeField& K = F.field();
    const std::uint32_t p = K.p();
    const std::size_t v = F.vars(), d = F.d(), de = d * e;
    if (d < 2) throw Error(ErrorKind::precondition, "N_count needs d >= 2");
    if (s > e) throw Error(ErrorKind::precondition, "N_count needs 0 <= s <= e");
    if (k2 < 0 || k1 < k2 - 1) throw Error(ErrorKind::precondition, "N_count needs k1 >= k2 - 1 >= -1");
    if (a.r != de || static_cast<long>(a.m) < k2 - 1) throw Error(ErrorKind::precondition, "alpha has the wrong shape");
    const std::size_t r = e - s, yc = e + (d - 1) * s;
    const auto layer_dim = [&](long k) { return v * (r + 1) * static_cast<std::size_t>(k + 1); };
    if (k2 == 0) return ipow(p, layer_dim(k1) * (d - 1));
    if (mode == NMode::definition) {
        const std::size_t T = layer_dim(k1);
        budget.require(ipow(p, T * (d - 1)), "N_count definition enumeration");
        mpz_class total = 0;
        Odometer od(T * (d - 1), p);
        do {
            std::vector<JetTuple> args;
            for (std::size_t b = 0; b + 1 < d; ++b)
                args.push_back(tuple_from_flat(od.v.data() + b * T, v, r, static_cast<std::size_t>(k1)));
            bool ok = true;
            for (std::size_t i = 0; i < v && ok; ++i) {
                const JetSection rho = multilinear_psi(F, i, args);
                for (std::size_t c = 0; c <= yc && ok; ++c)
                    for (long j = 0; j < k2 && ok; ++j)
                        for (long l = j; l < k2 && ok; ++l)
                            ok = pairing_coeff(K, a, rho, c, static_cast<std::size_t>(j), static_cast<std::size_t>(l)) == 0;
            }
            if (ok) total += 1;
        } while (od.next());
        return total;
    }
    const std::size_t k = static_cast<std::size_t>(k2 - 1), T = layer_dim(k2 - 1);
    budget.require(ipow(p, T * (d - 2)), "N_count enumeration");
    const std::size_t rc = (d - 2) * r, deg_rows = (rc + r + 1);
    // M2: w in P_{(d-1)r,k} -> (alpha(w x^c) mod t^{k2}) over c <= yc, layer l.
    FpMatrix M2(static_cast<std::size_t>(k2) * (yc + 1), deg_rows * (k + 1));
    for (std::size_t l = 0; l <= k; ++l)
        for (std::size_t c = 0; c <= yc; ++c)
            for (std::size_t dg = 0; dg < deg_rows; ++dg)
                for (std::size_t b = 0; b <= l; ++b)
                    if (dg + c <= de) M2.at(l * (yc + 1) + c, dg * (k + 1) + b) = a.parts[l - b][dg + c];
    mpz_class total = 0;
    Odometer od(T * (d - 2), p);
    do {
        std::vector<JetTuple> fixed;
        for (std::size_t b = 0; b + 2 < d; ++b) fixed.push_back(tuple_from_flat(od.v.data() + b * T, v, r, k));
        const auto C = psi_coefficients(F, fixed, r, k);
        FpMatrix A(v * M2.rows(), T);
        for (std::size_t i = 0; i < v; ++i) {
            const FpMatrix M1 = pairing_matrix(K, C[i], r);
            for (std::size_t row = 0; row < M2.rows(); ++row)
                for (std::size_t col = 0; col < T; ++col) {
                    std::uint64_t acc = 0;
                    for (std::size_t t = 0; t < M1.rows(); ++t) acc += static_cast<std::uint64_t>(M2.at(row, t)) * M1.at(t, col);
                    A.at(i * M2.rows() + row, col) = static_cast<std::uint32_t>(acc % p);
                }
        }
        total += ipow(p, T - rank(K, A));
    } while (d > 2 && od.next());
    return total * ipow(p, static_cast<std::size_t>(k1 - k2 + 1) * v * (r + 1) * (d - 1));
}

WeylChecker::WeylChecker(const SymmetricForm& F, std::size_t e, std::size_t m, const Budget& budget, long precision_cap)
    : F_(F), e_(e), m_(m), mp_((m + 2) / 2), budget_(budget), prec_cap_(precision_cap) {
    if (m < 1) throw Error(ErrorKind::precondition, "Weyl differencing needs m >= 1");
    if (F.d() < 2) throw Error(ErrorKind::precondition, "Weyl differencing needs d >= 2");
}

const mpz_class& WeylChecker::N_cached(const DualFunctional& a, std::size_t k) {
    std::vector<std::uint32_t> key{static_cast<std::uint32_t>(k)};
    for (std::size_t b = 0; b <= k; ++b) key.insert(key.end(), a.parts[b].begin(), a.parts[b].end());
    auto it = n_cache_.find(key);
    if (it != n_cache_.end()) return it->second;
    return n_cache_
        .emplace(std::move(key), N_count(F_, e_, a, static_cast<long>(k), static_cast<long>(k) + 1, 0, budget_))
        .first->second;
}

CheckReport WeylChecker::compare(const std::string& name, const CyclotomicSum& S, const mpq_class& rhs, Json params,
                                 Json details) {
    CheckReport rep = weyl_compare(S, rhs, F_.d(), prec_cap_);
    rep.check = name;
    rep.params = std::move(params);
    for (auto& [k, v] : rep.details.items()) details[k] = v;
    rep.details = std::move(details);
    return rep;
}

CheckReport weyl_compare(const CyclotomicSum& S, const mpq_class& rhs, std::size_t d, long precision_cap) {
    CheckReport rep;
    rep.check = "weyl";
    const CyclotomicSum norm = S * S.conj();
    rep.details["S"] = cyclo_json(S);
    rep.rhs = rational_json(rhs);
    if (norm.is_rational()) {
        const mpz_class v = norm.rational_value();
        bool ok;
        double tight;
        if (d == 2) {
            ok = mpq_class(v) <= rhs * rhs;
            tight = std::sqrt(v.get_d()) / rhs.get_d();
        } else {
            mpz_class lhs;
            mpz_pow_ui(lhs.get_mpz_t(), v.get_mpz_t(), 1ul << (d - 3));
            ok = mpq_class(lhs) <= rhs;
            tight = lhs.get_d() / rhs.get_d();
        }
        rep.lhs = Json{{"abs_S_squared", integer_json(v)}};
        rep.verdict = ok ? "holds" : "fails";
        rep.tightness = rhs == 0 ? 0.0 : tight;
        rep.details["exact"] = true;
        return rep;
    }
    const mpq_class target = d == 2 ? mpq_class(rhs * rhs) : rhs;
    for (long prec = 64; prec <= precision_cap; prec *= 2) {
        const RealInterval sq = cyclo_real_value(norm, prec);
        const RealInterval lhs = d == 2 ? sq : sq.pow2k(static_cast<unsigned>(d - 3));
        const int c = lhs.compare_le(target);
        rep.details["precision_bits"] = prec;
        rep.lhs = Json{{"lo", lhs.lo_double()}, {"hi", lhs.hi_double()}};
        if (c != 0) {
            rep.verdict = c > 0 ? "holds" : "fails";
            const double mid = 0.5 * (lhs.lo_double() + lhs.hi_double());
            rep.tightness = d == 2 ? std::sqrt(mid) / rhs.get_d() : mid / rhs.get_d();
            rep.details["exact"] = false;
            return rep;
        }
    }
    rep.verdict = "undecided";
    rep.details["exact"] = false;
    return rep;
}

CheckReport WeylChecker::check(const DualFunctional& a) {
    if (!table_) table_ = std::make_unique<SumTable>(F_, e_, m_, budget_);
    const std::uint32_t p = F_.field().p();
    const std::size_t N = vars_dim(F_, e_), d = F_.d(), k = m_ - mp_;
    const mpz_class& Nk = N_cached(a, k);
    mpq_class rhs(ipow(p, N * (m_ + 1) * (1ul << (d - 2))) * Nk, ipow(p, N * (k + 1) * (d - 1)));
    rhs.canonicalize();
    Json params = base_params(F_, e_, m_);
    params["alpha"] = dual_json(a);
    Json details{{"m_prime", mp_}, {"N", integer_json(Nk)}, {"arc", classify_arc(F_.field(), a, e_).major ? "major" : "minor"}};
    return compare("weyl", table_->S(a), rhs, params, details);
}

CheckReport WeylChecker::check_pair(const DualFunctional& a, const DualFunctional& b) {
    if (!pair_table_) pair_table_ = std::make_unique<PairSumTable>(F_, e_, m_, budget_);
    const std::uint32_t p = F_.field().p();
    const std::size_t N = vars_dim(F_, e_), d = F_.d(), k = m_ - mp_;
    const mpq_class Na(N_cached(a, k));
    mpq_class Nb(N_cached(b, m_), ipow(p, N * mp_ * (d - 1)));
    Nb.canonicalize();
    const bool alpha_branch = Na <= Nb;
    mpq_class rhs(ipow(p, 2 * N * (m_ + 1) * (1ul << (d - 2))), ipow(p, N * (k + 1) * (d - 1)));
    rhs.canonicalize();
    rhs *= alpha_branch ? Na : Nb;
    Json params = base_params(F_, e_, m_);
    params["alpha"] = dual_json(a);
    params["beta"] = dual_json(b);
    Json details{{"m_prime", mp_}, {"N_alpha", integer_json(Na.get_num())}, {"N_beta_scaled", rational_json(Nb)},
                 {"branch", alpha_branch ? "alpha" : "beta"}};
    return compare("weyl_pair", pair_table_->S(a, b), rhs, params, details);
}

CheckReport check_weyl(const SymmetricForm& F, std::size_t e, std::size_t m, const DualFunctional& a,
                       const std::optional<DualFunctional>& b, const Budget& budget, long precision_cap) {
    WeylChecker W(F, e, m, budget, precision_cap);
    return b ? W.check_pair(a, *b) : W.check(a);
}

std::vector<DualFunctional> weyl_sample(const PrimeField& K, std::size_t de, std::size_t m, std::size_t max_degree,
                                        std::size_t extra, std::uint64_t seed, std::size_t limit) {
    const DegreeTable deg(K, de);
    const std::uint64_t higher = upow(K.p(), m * (de + 1));
    std::vector<DualFunctional> out;
    std::set<std::uint64_t> seen;
    for (std::uint64_t a0 = 0; a0 < deg.size(); ++a0) {
        if (deg.degree(a0) > max_degree) continue;
        for (std::uint64_t h = 0; h < higher; ++h) {
            if (limit && out.size() >= limit) break;
            const std::uint64_t idx = a0 + deg.size() * h;
            seen.insert(idx);
            out.push_back(dual_from_index(K, de, m, idx));
        }
    }
    const std::uint64_t total = deg.size() * higher;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < extra && seen.size() < total; ++i) {
        std::uint64_t idx;
        do idx = rng() % total;
        while (seen.count(idx));
        seen.insert(idx);
        out.push_back(dual_from_index(K, de, m, idx));
    }
    return out;
}

CheckReport check_shrink(const SymmetricForm& F, std::size_t e, const DualFunctional& a, std::size_t k, std::size_t s,
                         const Budget& budget) {
    const std::uint32_t p = F.field().p();
    const mpz_class N0 = N_count(F, e, a, static_cast<long>(k), static_cast<long>(k) + 1, 0, budget);
    const mpz_class Ns = N_count(F, e, a, static_cast<long>(k), static_cast<long>(k) + 1, s, budget);
    const mpz_class bound = ipow(p, (k + 1) * (F.d() - 1) * F.vars() * s);
    CheckReport r;
    r.check = "shrink";
    r.params = base_params(F, e, a.m);
    r.params["k"] = k;
    r.params["s"] = s;
    r.params["alpha"] = dual_json(a);
    mpq_class ratio(N0, Ns);
    ratio.canonicalize();
    r.lhs = rational_json(ratio);
    r.rhs = integer_json(bound);
    r.verdict = N0 <= Ns * bound ? "holds" : "fails";
    r.tightness = mpq_class(ratio / mpq_class(bound)).get_d();
    r.details = Json{{"N", integer_json(N0)}, {"N_s", integer_json(Ns)}};
    return r;
}

CheckReport dioph_audit(const SymmetricForm& F, std::size_t e, const DualFunctional& a, std::size_t k, const Budget& budget) {
    const PrimeField& K = F.field();
    const std::size_t d = F.d(), v = F.vars();
    const auto md = minimal_divisor(K, a);
    const long degZ = static_cast<long>(md.degree);
    // smallest integer s with (d-1)s > degZ - e - 2 and (d-1)s > (d-1)e - degZ
    const long dm1 = static_cast<long>(d - 1);
    const long bound = std::max(degZ - static_cast<long>(e) - 2, dm1 * static_cast<long>(e) - degZ);
    long s = (bound >= 0 ? bound / dm1 : -((-bound + dm1 - 1) / dm1)) + 1;
    s = std::max(s, 0l);
    CheckReport r;
    r.check = "dioph_audit";
    r.params = base_params(F, e, a.m);
    r.params["k"] = k;
    r.params["alpha"] = dual_json(a);
    r.details = Json{{"divisor", divisor_json(md.Z)}, {"s", s}, {"statement_form_weaker", true}};
    if (s > static_cast<long>(e)) {
        r.verdict = "holds";
        r.lhs = nullptr;
        r.rhs = nullptr;
        r.details["applicable"] = false;
        return r;
    }
    const std::size_t su = static_cast<std::size_t>(s);
    const mpz_class Ns = N_count(F, e, a, static_cast<long>(k), static_cast<long>(k) + 1, su, budget);
    const mpz_class strong = count_psi_zero_sections(F, e, su, k, budget);
    // Tuples with Psi = 0 mod t^k only: the t^k layer is free.
    const mpz_class layer = ipow(K.p(), v * (e - su + 1) * (d - 1));
    const mpz_class weak = k == 0 ? ipow(K.p(), v * (e - su + 1) * (d - 1)) : count_psi_zero_sections(F, e, su, k - 1, budget) * layer;
    r.lhs = integer_json(Ns);
    r.rhs = integer_json(strong);
    r.verdict = Ns == strong ? "holds" : "fails";
    r.details["applicable"] = true;
    r.details["weak_form_count"] = integer_json(weak);
    return r;
}

}  // namespace jetcircle
