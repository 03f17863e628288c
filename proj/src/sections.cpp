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

#include "jetcircle/sections.hpp"

#include <algorithm>
#include <sstream>

namespace jetcircle {

JetSection JetSection::constant(std::size_t r, std::size_t m, std::uint32_t v) {
    JetSection s(r, m);
    s.at(0, 0) = v;
    return s;
}

JetSection JetSection::from_layers(std::size_t r, const std::vector<std::vector<std::uint32_t>>& layers) {
    if (layers.empty()) throw Error(ErrorKind::precondition, "at least one t-layer is required");
    JetSection s(r, layers.size() - 1);
    for (std::size_t k = 0; k < layers.size(); ++k) {
        if (layers[k].size() > r + 1) throw Error(ErrorKind::precondition, "layer exceeds degree bound");
        for (std::size_t i = 0; i < layers[k].size(); ++i) s.at(i, k) = layers[k][i];
    }
    return s;
}

JetScalar JetSection::coefficient(std::size_t i) const {
    JetScalar out(m);
    for (std::size_t k = 0; k <= m; ++k) out.coeffs[k] = at(i, k);
    return out;
}

std::vector<std::uint32_t> JetSection::layer(std::size_t k) const {
    std::vector<std::uint32_t> out(r + 1);
    for (std::size_t i = 0; i <= r; ++i) out[i] = at(i, k);
    return out;
}

bool JetSection::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](std::uint32_t v) { return v == 0; });
}

namespace {
void check_compatible(const JetSection& a, const JetSection& b) {
    if (a.r != b.r || a.m != b.m) throw Error(ErrorKind::mismatch, "section shapes differ");
}
}  // namespace

JetSection add_sections(const PrimeField& F, const JetSection& a, const JetSection& b) {
    check_compatible(a, b);
    JetSection out(a.r, a.m);
    for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] = F.add(a.c[i], b.c[i]);
    return out;
}

JetSection sub_sections(const PrimeField& F, const JetSection& a, const JetSection& b) {
    check_compatible(a, b);
    JetSection out(a.r, a.m);
    for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] = F.sub(a.c[i], b.c[i]);
    return out;
}

JetSection scale_section(const PrimeField& F, const JetSection& a, std::uint32_t s) {
    JetSection out(a.r, a.m);
    for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] = F.mul(a.c[i], s);
    return out;
}

JetSection mul_sections(const PrimeField& F, const JetSection& f, const JetSection& g) {
    if (f.m != g.m) throw Error(ErrorKind::mismatch, "jet orders differ");
    const std::size_t m = f.m, M = m + 1;
    JetSection out(f.r + g.r, m);
    const std::uint64_t p = F.p();
    std::vector<std::uint64_t> acc(out.c.size(), 0);
    for (std::size_t i = 0; i <= f.r; ++i)
        for (std::size_t k = 0; k <= m; ++k) {
            const std::uint64_t a = f.c[i * M + k];
            if (a == 0) continue;
            for (std::size_t j = 0; j <= g.r; ++j)
                for (std::size_t l = 0; k + l <= m; ++l) {
                    std::uint64_t& slot = acc[(i + j) * M + k + l];
                    slot = (slot + a * g.c[j * M + l]) % p;
                }
        }
    for (std::size_t i = 0; i < acc.size(); ++i) out.c[i] = static_cast<std::uint32_t>(acc[i]);
    return out;
}

JetSection widen(const JetSection& a, std::size_t r) {
    if (r < a.r) throw Error(ErrorKind::precondition, "widen cannot lower the degree bound");
    JetSection out(r, a.m);
    std::copy(a.c.begin(), a.c.end(), out.c.begin());
    return out;
}

std::uint32_t pair_layer(const PrimeField& F, const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& y) {
    std::uint64_t s = 0;
    const std::size_t n = std::min(a.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) s += static_cast<std::uint64_t>(a[i]) * y[i];
    return static_cast<std::uint32_t>(s % F.p());
}

JetScalar DualFunctional::apply(const PrimeField& F, const JetSection& y) const {
    if (y.r != r) throw Error(ErrorKind::mismatch, "functional and section degree bounds differ");
    JetScalar out(m);
    const std::size_t top = std::min(m, y.m);
    for (std::size_t k = 0; k <= m; ++k) {
        std::uint32_t s = 0;
        for (std::size_t i = 0; i <= k; ++i) {
            const std::size_t j = k - i;
            if (j > top) continue;
            s = F.add(s, pair_layer(F, parts[i], y.layer(j)));
        }
        out.coeffs[k] = s;
    }
    return out;
}

bool DualFunctional::is_zero() const {
    for (const auto& p : parts)
        for (auto v : p)
            if (v) return false;
    return true;
}

std::string DivisorP1::to_string() const {
    std::ostringstream os;
    bool any = false;
    if (h.size() > 1) {
        os << '(';
        for (std::size_t i = h.size(); i-- > 0;) {
            if (h[i] == 0) continue;
            if (any) os << '+';
            any = true;
            if (i == 0 || h[i] != 1) os << h[i];
            if (i >= 1) os << 'x';
            if (i >= 2) os << '^' << i;
        }
        os << ')';
    }
    if (k_inf > 0) {
        if (any) os << '*';
        any = true;
        if (k_inf > 1) os << k_inf;
        os << "inf";
    }
    if (!any) os << '0';
    return os.str();
}

std::vector<std::vector<std::uint32_t>> vanishing_subspace(const PrimeField& F, std::size_t r, const DivisorP1& Z) {
    (void)F;
    std::vector<std::vector<std::uint32_t>> out;
    const std::size_t dh = Z.h.size() - 1;
    if (Z.degree() > r) return out;
    for (std::size_t i = 0; i + dh + Z.k_inf <= r; ++i) {
        std::vector<std::uint32_t> v(r + 1, 0);
        for (std::size_t c = 0; c <= dh; ++c) v[i + c] = Z.h[c];
        out.push_back(std::move(v));
    }
    return out;
}

bool part_factors_through(const PrimeField& F, const std::vector<std::uint32_t>& alpha0, const DivisorP1& Z) {
    const std::size_t r = alpha0.size() - 1;
    const std::size_t dh = Z.h.size() - 1;
    if (Z.degree() > r) return true;
    for (std::size_t i = 0; i + dh + Z.k_inf <= r; ++i) {
        std::uint64_t s = 0;
        for (std::size_t c = 0; c <= dh; ++c) s += static_cast<std::uint64_t>(alpha0[i + c]) * Z.h[c];
        if (s % F.p()) return false;
    }
    return true;
}

bool factors_through(const PrimeField& F, const DualFunctional& alpha, const DivisorP1& Z) {
    return part_factors_through(F, alpha.parts[0], Z);
}

std::vector<DivisorP1> enumerate_divisors(const PrimeField& F, std::size_t degree, const Budget& budget) {
    mpz_class card = 0;
    for (std::size_t j = 0; j <= degree; ++j) card += ipow(F.p(), j);
    budget.require(card, "enumerate_divisors(" + std::to_string(degree) + ")");
    std::vector<DivisorP1> out;
    const std::uint32_t p = F.p();
    for (std::size_t kinf = 0; kinf <= degree; ++kinf) {
        const std::size_t b = degree - kinf;
        std::vector<std::uint32_t> low(b, 0);  // c_0 .. c_{b-1}, c_{b-1} fastest
        while (true) {
            DivisorP1 Z;
            Z.h = low;
            Z.h.push_back(1);
            Z.k_inf = kinf;
            out.push_back(std::move(Z));
            std::size_t i = b;
            bool carried_out = true;
            while (i > 0) {
                --i;
                if (++low[i] < p) {
                    carried_out = false;
                    break;
                }
                low[i] = 0;
            }
            if (carried_out) break;
        }
    }
    return out;
}

MinimalDivisor minimal_divisor_part(const PrimeField& F, const std::vector<std::uint32_t>& alpha0, std::size_t r,
                                    std::optional<std::size_t> uniqueness_bound) {
    if (alpha0.size() != r + 1) throw Error(ErrorKind::mismatch, "part length differs from degree bound");
    MinimalDivisor res;
    for (std::size_t b = 0; b <= r + 1; ++b) {
        std::size_t hits = 0;
        for (const auto& Z : enumerate_divisors(F, b, Budget::forced())) {
            if (!part_factors_through(F, alpha0, Z)) continue;
            if (hits == 0) res.Z = Z;
            ++hits;
        }
        if (hits > 0) {
            res.degree = b;
            res.minimizers = hits;
            if (uniqueness_bound && b > *uniqueness_bound)
                res.unique_below_bound = false;
            else
                res.unique_below_bound = hits == 1;
            return res;
        }
    }
    throw Error(ErrorKind::precondition, "no divisor found up to degree r+1");
}

MinimalDivisor minimal_divisor(const PrimeField& F, const DualFunctional& alpha, std::optional<std::size_t> uniqueness_bound) {
    return minimal_divisor_part(F, alpha.parts[0], alpha.r, uniqueness_bound);
}

std::vector<std::uint32_t> poly_gcd(const PrimeField& F, std::vector<std::uint32_t> a, std::vector<std::uint32_t> b) {
    auto trim = [](std::vector<std::uint32_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a <- a mod b
        const std::uint32_t inv = F.inv(b.back());
        while (a.size() >= b.size()) {
            const std::uint32_t f = F.mul(a.back(), inv);
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(f, b[i]));
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        const std::uint32_t inv = F.inv(a.back());
        for (auto& v : a) v = F.mul(v, inv);
    }
    return a;
}

bool globally_generates_poly(const PrimeField& F, const std::uint32_t* coeffs, std::size_t count, std::size_t e) {
    bool top = false;
    std::vector<std::uint32_t> g;
    for (std::size_t j = 0; j < count; ++j) {
        const std::uint32_t* c = coeffs + j * (e + 1);
        if (c[e] != 0) top = true;
        std::vector<std::uint32_t> v(c, c + e + 1);
        g = g.empty() ? poly_gcd(F, v, {}) : poly_gcd(F, g, v);
        if (g.size() == 1 && top) return true;
    }
    return top && g.size() == 1;
}

bool globally_generates(const PrimeField& F, const std::vector<JetSection>& x) {
    if (x.empty()) return false;
    const std::size_t e = x[0].r;
    std::vector<std::uint32_t> flat;
    flat.reserve(x.size() * (e + 1));
    for (const auto& s : x) {
        if (s.r != e) throw Error(ErrorKind::mismatch, "tuple entries have different degree bounds");
        auto l = s.mod_t();
        flat.insert(flat.end(), l.begin(), l.end());
    }
    return globally_generates_poly(F, flat.data(), x.size(), e);
}

std::uint64_t part_index(const PrimeField& F, const std::vector<std::uint32_t>& v) {
    std::uint64_t idx = 0;
    for (std::size_t i = v.size(); i-- > 0;) idx = idx * F.p() + v[i];
    return idx;
}

std::vector<std::uint32_t> part_from_index(const PrimeField& F, std::size_t len, std::uint64_t index) {
    std::vector<std::uint32_t> v(len);
    for (std::size_t i = 0; i < len; ++i) {
        v[i] = static_cast<std::uint32_t>(index % F.p());
        index /= F.p();
    }
    return v;
}

DualFunctional dual_from_index(const PrimeField& F, std::size_t r, std::size_t m, std::uint64_t index) {
    DualFunctional a(r, m);
    for (std::size_t k = 0; k <= m; ++k)
        for (std::size_t i = 0; i <= r; ++i) {
            a.parts[k][i] = static_cast<std::uint32_t>(index % F.p());
            index /= F.p();
        }
    return a;
}

std::uint64_t dual_index(const PrimeField& F, const DualFunctional& a) {
    std::uint64_t idx = 0;
    for (std::size_t k = a.m + 1; k-- > 0;)
        for (std::size_t i = a.r + 1; i-- > 0;) idx = idx * F.p() + a.parts[k][i];
    return idx;
}

void for_each_dual(const PrimeField& F, std::size_t r, std::size_t m, const Budget& budget,
                   const std::function<void(const DualFunctional&)>& fn) {
    const mpz_class card = ipow(F.p(), (r + 1) * (m + 1));
    budget.require(card, "enumerate_duals(r=" + std::to_string(r) + ", m=" + std::to_string(m) + ")");
    const std::uint64_t total = card.get_ui();
    for (std::uint64_t idx = 0; idx < total; ++idx) fn(dual_from_index(F, r, m, idx));
}

std::vector<DualFunctional> enumerate_duals(const PrimeField& F, std::size_t r, std::size_t m, const Budget& budget) {
    std::vector<DualFunctional> out;
    for_each_dual(F, r, m, budget, [&](const DualFunctional& a) { out.push_back(a); });
    return out;
}

DegreeTable::DegreeTable(const PrimeField& F, std::size_t r, std::optional<std::size_t> uniqueness_bound) : r_(r) {
    const std::uint64_t total = ipow(F.p(), r + 1).get_ui();
    Budget::standard().require(ipow(F.p(), r + 1), "degree table");
    deg_.assign(total, 0);
    unique_.assign(total, 0);
    div_.assign(total, 0);
    std::vector<std::vector<DivisorP1>> by_degree;
    std::vector<std::size_t> first_id;
    for (std::size_t b = 0; b <= r + 1; ++b) {
        first_id.push_back(divisors_.size());
        auto ds = enumerate_divisors(F, b, Budget::forced());
        divisors_.insert(divisors_.end(), ds.begin(), ds.end());
        by_degree.push_back(std::move(ds));
    }
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        const auto a0 = part_from_index(F, r + 1, idx);
        for (std::size_t b = 0; b <= r + 1; ++b) {
            std::size_t hits = 0, first = 0;
            for (std::size_t z = 0; z < by_degree[b].size(); ++z) {
                if (!part_factors_through(F, a0, by_degree[b][z])) continue;
                if (hits == 0) first = z;
                ++hits;
            }
            if (hits == 0) continue;
            deg_[idx] = static_cast<std::uint8_t>(b);
            div_[idx] = static_cast<std::uint32_t>(first_id[b] + first);
            unique_[idx] = (uniqueness_bound && b > *uniqueness_bound) ? 0 : (hits == 1 ? 1 : 0);
            break;
        }
    }
}

}  // namespace jetcircle
