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

#include "jetcircle/certifier.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <functional>

#include "jetcircle/parallel.hpp"

namespace jetcircle {

namespace {

using i128 = __int128;

long floordiv(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
long ceildiv(long a, long b) { return -floordiv(-a, b); }

mpz_class to_mpz(i128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

mpq_class to_mpq(i128 n, i128 d) {
    mpq_class q(to_mpz(n), to_mpz(d));
    q.canonicalize();
    return q;
}

// Exact fraction with positive denominator, for the inner sweep loops.
struct Frac {
    i128 n = 0;
    i128 d = 1;
};
Frac frac(i128 n, i128 d) {
    if (d < 0) return {-n, -d};
    return {n, d};
}
bool lt(const Frac& a, const Frac& b) { return a.n * b.d < b.n * a.d; }
bool le(const Frac& a, const Frac& b) { return a.n * b.d <= b.n * a.d; }
bool eq(const Frac& a, const Frac& b) { return a.n * b.d == b.n * a.d; }

mpq_class ratio(long a, long b) {
    mpq_class q(a, b);
    q.canonicalize();
    return q;
}

mpq_class pow2q(long k) { return k >= 0 ? mpq_class(mpz_class(1) << k) : mpq_class(mpz_class(1), mpz_class(1) << -k); }
long pow2l(long k) { return 1L << k; }

std::string decimal(const mpq_class& q) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", q.get_d());
    return buf;
}

Json qjson(const mpq_class& q) { return Json{{"exact", rational_json(q)}, {"decimal", decimal(q)}}; }

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::precondition, what);
}

// Displayed bound expressions, as functions of e (and m where they depend on it).
struct Exprs {
    long d, g;
    mpq_class f, P;  // P = 2^(d-1)(d-1)

    Exprs(long d_, long g_) : d(d_), g(g_), f(f_g(g_)), P(pow2q(d_ - 1) * (d_ - 1)) {}

    mpq_class K(const mpq_class& e) const { return d * e - g + 1; }
    mpq_class tgt_term() const { return pow2q(d - 2) * (d - 1) * (4 * d * d - 4 * d + 3); }
    mpq_class tgt_can() const { return pow2q(d - 1) * (d - 1) * (d * d - d + 1); }

    // Canonical.
    mpq_class rain(const mpq_class& e) const {
        return P * (e - 2 * g + 2 + (d - 1) * K(e)) / (e - 2 * g + 2 - g * (d - 1) - (d - 1) * (d - 1) * f);
    }
    mpq_class h(const mpq_class& e) const {
        return pow2q(d - 2) * (d - 1) * (d * e + 2 + 2 * (d - 1) * K(e)) /
               (d * e / 2 - 2 * g + 1 - g * (d - 1) - f * (d - 1) * (d - 1));
    }
    mpq_class h2(const mpq_class& e) const { return 2 * (3 * e + 2 - g) / (e - 3 * g + 1 - f); }
    mpq_class large_m_bound(const mpq_class& e, long m) const {
        return pow2q(d - 1) * (d - 1) * (d - 1) * (d * e + 2 + m * K(e)) /
               (m * (d * e / 2 - 2 * g + 1 - g * (d - 1) - f * (d - 1) * (d - 1)));
    }

    // Terminal, d >= 3.
    mpq_class L1(const mpq_class& e) const { return e - 2 * g + 2 - (d - 1) * g - (d - 1) * (d - 1) * f; }
    mpq_class L2(const mpq_class& e) const { return d * e / 2 - g + 1 - g * d - (d - 1) * (d - 1) * f; }
    mpq_class L3(const mpq_class& e) const { return d * e / 2 + 1 - (d + 1) * g - (d - 1) * (d - 1) * f; }
    mpq_class L4(const mpq_class& e) const { return e / 2 - g + 1 - (d - 1) * g - (d - 1) * (d - 1) * f; }
    mpq_class L5(const mpq_class& e) const { return e - 2 * g + 2 - 2 * (d - 1) * g - 2 * (d - 1) * (d - 1) * f; }

    mpq_class S(const mpq_class& e) const { return P * (3 * (e - 2 * g + 2) + (d - 2) * K(e)) / L1(e); }
    mpq_class T_S() const {
        return -((d - 2) * d + 3) * (d - 1) * (d - 1) * f + d * (d * (-d * g + g + 2) - 5) + g + 2;
    }
    mpq_class S_tform(const mpq_class& e) const { return P * ((3 + d * (d - 2)) - T_S() / L1(e)); }
    mpq_class Seq(const mpq_class& e) const {
        const mpq_class t = 3 * (d - 1) * g + 3 * (d - 1) * (d - 1) * f;
        return 3 * P * (d - 1) * (1 + t / (K(e) - t));
    }
    mpq_class Seq_direct(const mpq_class& e) const {
        return 3 * P * (d - 1) * K(e) / (K(e) - 3 * (d - 1) * g - 3 * (d - 1) * (d - 1) * f);
    }
    mpq_class Sless(const mpq_class& e) const { return P * (d - 1) * K(e) / L1(e); }
    mpq_class T_Sless() const {
        return mpq_class(g - 1 - 2 * d * g + 2 * d - d * (d - 1) * g) - d * (d - 1) * (d - 1) * f;
    }
    mpq_class Sless_tform(const mpq_class& e) const { return P * (d - 1) * (d - T_Sless() / L1(e)); }
    mpq_class C(const mpq_class& e) const {
        return pow2q(d - 2) * (d - 1) * (3 * (d * e / 2 + 1) + 4 * (d - 1) * K(e)) / L2(e);
    }
    mpq_class T_C() const {
        return -4 + 5 * f - 8 * d * d * d * f + d * d * (21 * f - 8 * g) + g + d * (4 - 18 * f + g);
    }
    mpq_class C_tform(const mpq_class& e) const { return pow2q(d - 2) * (d - 1) * (3 + 8 * (d - 1) - T_C() / L2(e)); }
    mpq_class Cp(const mpq_class& e) const {
        return P * (d * e / 2 + 1 + e - 2 * g + 1 + 2 * (d - 1) * K(e)) / L3(e);
    }
    mpq_class T_Cp() const {
        return -3 + 7 * f - 4 * d * d * d * f + d * d * (11 * f - 4 * g) + g + d * (2 - 12 * f - g) -
               2 * (-1 + f + g) / mpq_class(d);
    }
    mpq_class Cp_tform(const mpq_class& e) const {
        return P * (4 * d - 3 + ratio(2, d) - T_Cp() / L3(e));
    }
    mpq_class E(const mpq_class& e) const {
        return P * (ratio(3, 2) * (e - 2 * g + 2) + 2 * (d - 1) * K(e)) / L1(e);
    }
    mpq_class T_E() const {
        return -(d - 1) *
               (4 * d * d * g + (4 * d * d * d - 8 * d * d + 7 * d - 3) * f + 4 * d * (g - 2) - g + 4) / 2;
    }
    mpq_class E_tform(const mpq_class& e) const {
        return P * (ratio(3, 2) + 2 * d * (d - 1) - T_E() / L1(e));
    }
    mpq_class E2(const mpq_class& e) const { return P * (3 * (e / 2 - g + 1) + (d - 2) * K(e)) / L4(e); }
    mpq_class E2_doubled(const mpq_class& e) const {
        return P * (3 * (e - 2 * g + 2) + 2 * (d - 2) * K(e)) / L5(e);
    }
    mpq_class T_E2() const {
        return -2 * ((2 * d * d - 4 * d + 3) * (d - 1) * (d - 1) * f + 2 * d * d * d * g - 4 * d * d * g -
                     2 * d * d + 2 * d * g + 5 * d - g - 2);
    }
    mpq_class E2_tform(const mpq_class& e) const { return P * (3 + 2 * d * (d - 2) - T_E2() / L5(e)); }
    mpq_class F3(const mpq_class& e) const { return P * K(e) / L4(e); }
    mpq_class T_F3() const {
        return -1 - 2 * d * (-1 + f) - 2 * d * d * d * f + d * d * (4 * f - 2 * g) + g;
    }
    mpq_class F3_tform(const mpq_class& e) const { return P * (2 * d - T_F3() / L4(e)); }

    // Terminal, d = 2.
    mpq_class d2_I(const mpq_class& e) const { return (4 * e + 3 - g) / (e - 3 * g + 1 - f); }
    mpq_class d2_II(const mpq_class& e) const { return (11 * e + 7 + 12 * f - 7 * g) / (e - 3 * g + 1 - f); }
    mpq_class d2_III(const mpq_class& e) const { return 2 * (5 * e + 2) / (e - 3 * g + 1 - f); }

    // Terminal, g = 0 and e <= d-1.
    mpq_class e1_hi() const { return pow2q(d - 1) * (d + 2 + (d - 2) * (d + 1)); }
    mpq_class e1_lo() const { return pow2q(d - 1) * (d - 1) * (d + 1); }
    mpq_class B0(long e) const { return P * (d * e + 1); }
    mpq_class B1(long e) const { return P * (2 + ratio((d - 2) * (d * e + 1), d)); }
    mpq_class B2(long e) const {
        return P * (1 + ratio(d - 1, 2 * d - 1) + ratio(2 * (d - 1) * (d * e + 1), d));
    }
    mpq_class Bm(long e) const {
        return pow2q(d) * (d - 1) * (d - 1) *
               (d * (1 + ratio(2 * d - 1, 4 * d)) + (2 * d - 1) * (d * e + 1)) / (d * (2 * d - 1));
    }
};

// Sweep branches.
enum Branch : int {
    kCanSmallE,
    kCanI,
    kCanII,
    kCanD2,
    kTermE1Hi,
    kTermE1Lo,
    kTermB0,
    kTermB1,
    kTermB2,
    kTermBm,
    kTermI1S,
    kTermI1Seq,
    kTermI1Sless,
    kTermI21,
    kTermI22,
    kTermII,
    kTermIII1,
    kTermIII21,
    kTermIII22E2,
    kTermIII22F3,
    kTermD2I,
    kTermD2II,
    kTermD2III,
    kBranchCount
};

const char* branch_name(int b) {
    static const std::array<const char*, kBranchCount> names = {
        "canonical.small_e",      "canonical.case_I",      "canonical.case_II",     "canonical.d2",
        "terminal.e1.sum_ge_d+1", "terminal.e1.sum_le_d",  "terminal.small_e.B0",   "terminal.small_e.B1",
        "terminal.small_e.B2",    "terminal.small_e.m_ge_2d-1", "terminal.I.1.S",   "terminal.I.1.S'_eq",
        "terminal.I.1.S'_less",   "terminal.I.2.1.E",      "terminal.I.2.2.C",      "terminal.II.C",
        "terminal.III.1.C'",      "terminal.III.2.1.E",    "terminal.III.2.2.E",    "terminal.III.2.2.de-g+1",
        "terminal.d2.I",          "terminal.d2.II",        "terminal.d2.III"};
    return names[static_cast<std::size_t>(b)];
}

// Final displayed bound of a branch at (e, m).
mpq_class branch_bound(const Exprs& X, int b, long e, long m) {
    const mpq_class E(e);
    const long d = X.d;
    switch (b) {
        case kCanSmallE:
            return e == 1 ? pow2q(d - 2) * d * (2 * d + 1) : pow2q(d - 1) * (d - 1) * (d * e + 2);
        case kCanI: return X.rain(E);
        case kCanII: return X.h(E);
        case kCanD2: return X.h2(E);
        case kTermE1Hi: return X.e1_hi();
        case kTermE1Lo: return X.e1_lo();
        case kTermB0: return X.B0(e);
        case kTermB1: return X.B1(e);
        case kTermB2: return X.B2(e);
        case kTermBm: return X.Bm(e);
        case kTermI1S: return X.S(E);
        case kTermI1Seq: return X.Seq(E);
        case kTermI1Sless: return X.Sless(E);
        case kTermI21:
        case kTermIII21: return X.E(E);
        case kTermI22:
        case kTermII: return X.C(E);
        case kTermIII1: return X.Cp(E);
        case kTermIII22E2: return X.E2(E);
        case kTermIII22F3: return X.F3(E);
        case kTermD2I: return X.d2_I(E);
        case kTermD2II: return X.d2_II(E);
        case kTermD2III: return X.d2_III(E);
        default: break;
    }
    (void)m;
    return 0;
}

// Identity entries. `at_e0` marks e0-evaluated values of bounds decreasing in e.
struct Claim {
    IdentityEntry entry;
    bool at_e0 = false;
};

bool relation_holds(const mpq_class& a, const mpq_class& b, const std::string& rel) {
    if (rel == "=") return a == b;
    if (rel == "<") return a < b;
    if (rel == "<=") return a <= b;
    if (rel == ">") return a > b;
    return false;
}

Claim claim(const std::string& group, const std::string& name, long d, long g, const mpq_class& lhs,
            const std::string& rel, const mpq_class& rhs, bool at_e0 = false) {
    Claim c;
    c.entry = IdentityEntry{group, name, d, g, lhs, rhs, rel, relation_holds(lhs, rhs, rel)};
    c.at_e0 = at_e0;
    return c;
}

std::vector<Claim> canonical_claims(long d, long g) {
    std::vector<Claim> out;
    const Exprs X(d, g);
    const mpq_class f = X.f;
    if (d == 2) {
        if (g < 1) return out;
        out.push_back(claim("i", "2(56g+21f-7)/(16g+6f-2)", d, g, 2 * (56 * g + 21 * f - 7) / (16 * g + 6 * f - 2), "=",
                            7));
        const mpq_class e0 = e0_value(2, g, BoundMode::canonical);
        out.push_back(claim("i", "h(e0), d=2", d, g, X.h2(e0), "=", 2 * (56 * g + 21 * f - 7) / (16 * g + 6 * f - 2)));
        return out;
    }
    if (g == 0) {
        // Rain = (d^2-d+1) - (2d-1)(d-1)/(e+2) for g = 0.
        out.push_back(claim("ii", "Rain increasing to its limit, g=0", d, g, mpq_class((2 * d - 1) * (d - 1)), ">", 0));
        return out;
    }
    const mpq_class e0 = e0_value(d, g, BoundMode::canonical);
    out.push_back(claim("ii", "Rain(e0)", d, g, X.rain(e0), "=", X.tgt_can() + 1, true));
    out.push_back(claim("iii", "h(e0)", d, g, X.h(e0), "<=", X.tgt_can(), true));
    return out;
}

std::vector<Claim> terminal_claims(long d, long g) {
    std::vector<Claim> out;
    const Exprs X(d, g);
    if (d == 2) {
        if (g < 1) return out;
        const mpq_class e0 = e0_value(2, g, BoundMode::terminal);
        out.push_back(claim("iv.d2", "case I at e0", d, g, X.d2_I(e0), "<", 12, true));
        out.push_back(claim("iv.d2", "case II at e0", d, g, X.d2_II(e0), "<", 12, true));
        out.push_back(claim("iv.d2", "case III at e0", d, g, X.d2_III(e0), "<", 12, true));
        return out;
    }
    const mpq_class tgt1 = X.tgt_term() + 1;
    if (g == 0) {
        const mpq_class ed(d);
        out.push_back(claim("iv.form", "S T-form, g=0", d, g, X.S_tform(ed), "=", X.S(ed)));
        out.push_back(claim("iv.form", "S'_less T-form, g=0", d, g, X.Sless_tform(ed), "=", X.Sless(ed)));
        out.push_back(claim("iv.form", "E T-form, g=0", d, g, X.E_tform(ed), "=", X.E(ed)));
        out.push_back(claim("iv.form", "E (III.2.2) T-form, g=0", d, g, X.E2_tform(ed), "=", X.E2(ed)));
        out.push_back(claim("iv.form", "de-g+1 bound T-form, g=0", d, g, X.F3_tform(ed), "=", X.F3(ed)));
        out.push_back(claim("iv", "T(S) sign, g=0", d, g, X.T_S(), ">", 0));
        out.push_back(claim("iv", "S'_eq, g=0", d, g, X.Seq(mpq_class(1)), "<", X.tgt_term()));
        out.push_back(claim("iv", "T(S'_less) sign, g=0", d, g, X.T_Sless(), ">", 0));
        out.push_back(claim("iv", "T(E) sign, g=0", d, g, X.T_E(), ">", 0));
        out.push_back(claim("iv", "T(E, III.2.2) sign, g=0", d, g, X.T_E2(), ">", 0));
        if (d >= 4) out.push_back(claim("iv", "T(de-g+1 bound) sign, g=0", d, g, X.T_F3(), ">", 0));
        if (d >= 4) {
            out.push_back(claim("iv.small_e", "e=1: sum >= d+1 bound <= 2^(d-1)d^2", d, g, X.e1_hi(), "<=",
                                pow2q(d - 1) * d * d));
            out.push_back(claim("iv.small_e", "e=1: sum <= d bound <= 2^(d-1)d^2", d, g, X.e1_lo(), "<=",
                                pow2q(d - 1) * d * d));
            out.push_back(claim("iv.small_e", "e=1: 2^(d-1)d^2 <= 2^(d-2)d(2d+1)", d, g, pow2q(d - 1) * d * d, "<=",
                                pow2q(d - 2) * d * (2 * d + 1)));
        }
        for (long e = 2; e <= d - 1; ++e) {
            const std::string s = " (e=" + std::to_string(e) + ")";
            out.push_back(claim("iv.small_e", "B0 < B2" + s, d, g, X.B0(e), "<", X.B2(e)));
            out.push_back(claim("iv.small_e", "B1 < B2" + s, d, g, X.B1(e), "<", X.B2(e)));
            out.push_back(claim("iv.small_e", "m >= 2d-1 bound < B2" + s, d, g, X.Bm(e), "<", X.B2(e)));
        }
        return out;
    }
    const mpq_class e0 = e0_value(d, g, BoundMode::terminal);
    out.push_back(claim("iv.form", "S T-form", d, g, X.S_tform(e0), "=", X.S(e0)));
    out.push_back(claim("iv", "T(S) sign", d, g, X.T_S(), "<", 0));
    out.push_back(claim("iv", "S(e0)", d, g, X.S(e0), "<", pow2q(d - 1) * (d - 1) * (d * d - 2 * d + 3) + 1, true));
    out.push_back(claim("iv.form", "S'_eq form", d, g, X.Seq(e0), "=", X.Seq_direct(e0)));
    out.push_back(claim("iv", "S'_eq(e0)", d, g, X.Seq(e0), "<", tgt1, true));
    out.push_back(claim("iv.form", "S'_less T-form", d, g, X.Sless_tform(e0), "=", X.Sless(e0)));
    out.push_back(claim("iv", "T(S'_less) sign", d, g, X.T_Sless(), "<", 0));
    out.push_back(claim("iv", "S'_less(e0)", d, g, X.Sless(e0), "<", tgt1, true));
    out.push_back(claim("iv.form", "C T-form", d, g, X.C_tform(e0), "=", X.C(e0)));
    out.push_back(claim("iv", "T(C) sign", d, g, X.T_C(), "<", 0));
    out.push_back(claim("iv", "C(e0)", d, g, X.C(e0), "<", tgt1, true));
    out.push_back(claim("iv.form", "C' T-form", d, g, X.Cp_tform(e0), "=", X.Cp(e0)));
    out.push_back(claim("iv", "T(C') sign", d, g, X.T_Cp(), "<", 0));
    out.push_back(claim("iv", "C'(e0)", d, g, X.Cp(e0), "<", tgt1, true));
    out.push_back(claim("iv.form", "E T-form", d, g, X.E_tform(e0), "=", X.E(e0)));
    out.push_back(claim("iv", "T(E) sign", d, g, X.T_E(), "<", 0));
    out.push_back(claim("iv", "E(e0)", d, g, X.E(e0), "<", tgt1, true));
    out.push_back(claim("iv.form", "E (III.2.2) doubled form", d, g, X.E2_doubled(e0), "=", X.E2(e0)));
    out.push_back(claim("iv.form", "E (III.2.2) T-form", d, g, X.E2_tform(e0), "=", X.E2(e0)));
    out.push_back(claim("iv", "T(E, III.2.2) sign", d, g, X.T_E2(), "<", 0));
    out.push_back(claim("iv", "E (III.2.2)(e0)", d, g, X.E2(e0), "<", tgt1, true));
    out.push_back(claim("iv.form", "de-g+1 bound T-form", d, g, X.F3_tform(e0), "=", X.F3(e0)));
    if (g == 1) {
        out.push_back(claim("iv", "T(de-g+1 bound) sign", d, g, X.T_F3(), "<", 0));
        out.push_back(claim("iv", "de-g+1 bound(e0)", d, g, X.F3(e0), "<=", tgt1, true));
    }
    return out;
}

// Final bound functions of e with the monotone direction the tail argument uses.
struct EFunction {
    std::string name;
    std::function<mpq_class(const mpq_class&)> fn;
};

std::vector<EFunction> e_functions(const Exprs& X, BoundMode mode) {
    std::vector<EFunction> v;
    const long d = X.d, g = X.g;
    auto add = [&](const std::string& n, auto fn) { v.push_back({n, [&X, fn](const mpq_class& e) { return (X.*fn)(e); }}); };
    if (mode == BoundMode::canonical) {
        if (d == 2) {
            add("h (d=2)", &Exprs::h2);
        } else {
            add("Rain", &Exprs::rain);
            if (g >= 1) add("h", &Exprs::h);
        }
        return v;
    }
    if (d == 2) {
        add("d2 case I", &Exprs::d2_I);
        add("d2 case II", &Exprs::d2_II);
        add("d2 case III", &Exprs::d2_III);
        return v;
    }
    add("S", &Exprs::S);
    add("S'_less", &Exprs::Sless);
    add("E", &Exprs::E);
    add("E (III.2.2)", &Exprs::E2);
    if (g >= 1) {
        add("S'_eq", &Exprs::Seq);
        add("C", &Exprs::C);
        add("C'", &Exprs::Cp);
        add("de-g+1 bound", &Exprs::F3);
    } else if (d >= 4) {
        add("de-g+1 bound", &Exprs::F3);
    }
    return v;
}

struct BranchStats {
    std::uint64_t points = 0;
    bool has_max = false;
    Frac max;
    std::array<long, 4> witness{};  // e, m, D or Da, Db
    std::uint64_t dominance_violations = 0;
    Json first_violation;
    std::uint64_t argument_open = 0;  // (e, m) where the final bound does not beat n+1
    Json first_open;

    void merge(const BranchStats& o) {
        points += o.points;
        if (o.has_max && (!has_max || lt(max, o.max))) {
            has_max = true;
            max = o.max;
            witness = o.witness;
        }
        if (o.dominance_violations && !dominance_violations) first_violation = o.first_violation;
        dominance_violations += o.dominance_violations;
        if (o.argument_open && !argument_open) first_open = o.first_open;
        argument_open += o.argument_open;
    }
};

struct ShardResult {
    std::uint64_t points = 0;
    std::uint64_t counterexamples = 0;
    Json first_counterexample;
    std::uint64_t pipeline_mismatches = 0;
    Json first_mismatch;
    bool has_max = false;
    Frac max;
    std::array<long, 4> witness{};
    int witness_branch = -1;
    std::array<BranchStats, kBranchCount> branches{};
    std::array<std::uint64_t, 4> m_cases{};
    std::uint64_t monotone_m_violations = 0;
    Json first_monotone_m;
    std::uint64_t d_beta_flagged = 0;
    std::uint64_t d_beta_enforce_violations = 0;

    void counterexample(Json j) {
        if (!counterexamples) first_counterexample = std::move(j);
        ++counterexamples;
    }
    void mismatch(Json j) {
        if (!pipeline_mismatches) first_mismatch = std::move(j);
        ++pipeline_mismatches;
    }
    void monotone_m(Json j) {
        if (!monotone_m_violations) first_monotone_m = std::move(j);
        ++monotone_m_violations;
    }
    void observe(const Frac& a, int branch, const std::array<long, 4>& w) {
        ++points;
        auto& B = branches[static_cast<std::size_t>(branch)];
        ++B.points;
        if (!B.has_max || lt(B.max, a)) {
            B.has_max = true;
            B.max = a;
            B.witness = w;
        }
        if (!has_max || lt(max, a)) {
            has_max = true;
            max = a;
            witness = w;
            witness_branch = branch;
        }
    }
    void merge(const ShardResult& o) {
        points += o.points;
        if (o.counterexamples && !counterexamples) first_counterexample = o.first_counterexample;
        counterexamples += o.counterexamples;
        if (o.pipeline_mismatches && !pipeline_mismatches) first_mismatch = o.first_mismatch;
        pipeline_mismatches += o.pipeline_mismatches;
        if (o.has_max && (!has_max || lt(max, o.max))) {
            has_max = true;
            max = o.max;
            witness = o.witness;
            witness_branch = o.witness_branch;
        }
        for (std::size_t b = 0; b < branches.size(); ++b) branches[b].merge(o.branches[b]);
        for (std::size_t c = 0; c < m_cases.size(); ++c) m_cases[c] += o.m_cases[c];
        if (o.monotone_m_violations && !monotone_m_violations) first_monotone_m = o.first_monotone_m;
        monotone_m_violations += o.monotone_m_violations;
        d_beta_flagged += o.d_beta_flagged;
        d_beta_enforce_violations += o.d_beta_enforce_violations;
    }
};

Json point_json(long e, long m, long D) { return Json{{"e", e}, {"m", m}, {"D", D}}; }
Json pair_json(long e, long m, long Da, long Db) { return Json{{"e", e}, {"m", m}, {"D_alpha", Da}, {"D_beta", Db}}; }

// Per-(e, m) bookkeeping shared by both modes: compare each branch's maximum with its
// displayed bound and that bound with n+1.
void close_branches(const Exprs& X, long e, long m, const mpz_class& n1, const std::array<BranchStats, kBranchCount>& local,
                    ShardResult& R, bool terminal) {
    for (int b = 0; b < kBranchCount; ++b) {
        const auto& L = local[static_cast<std::size_t>(b)];
        if (!L.has_max) continue;
        auto& B = R.branches[static_cast<std::size_t>(b)];
        const mpq_class bound = branch_bound(X, b, e, m);
        const mpq_class mx = to_mpq(L.max.n, L.max.d);
        if (mx > bound) {
            Json w = terminal ? pair_json(L.witness[0], L.witness[1], L.witness[2], L.witness[3])
                              : point_json(L.witness[0], L.witness[1], L.witness[2]);
            w["value"] = qjson(mx);
            w["bound"] = qjson(bound);
            if (!B.dominance_violations) B.first_violation = w;
            ++B.dominance_violations;
        }
        if (!(bound < mpq_class(n1))) {
            if (!B.argument_open) B.first_open = Json{{"e", e}, {"m", m}, {"bound", qjson(bound)}};
            ++B.argument_open;
        }
    }
}

struct Row {
    mpz_class n1;
    std::string row;
};

void canonical_e(const Exprs& X, long e, long m_lo, long m_hi, const Row& row, ShardResult& R) {
    const long d = X.d, g = X.g;
    const long f2 = g >= 2 ? g + 1 : 0;
    const long K = d * e - g + 1;
    const i128 n1 = static_cast<i128>(row.n1.get_si());
    const i128 P2 = static_cast<i128>(pow2l(d - 1));  // 2^(d-2) * 2
    const long lo = std::max(0L, e - 2 * g + 2), hi = floordiv(d * e, 2) + 1;
    const long cut = d * e - 2 * g + 2;  // D <= de/2-g+1 iff 2D <= cut
    const bool small = g == 0 && d >= 3 && e <= d - 2;
    for (long m = m_lo; m <= m_hi; ++m) {
        const long mp = m_prime(m);
        const long layersA = floordiv(m - mp, d - 1) + 1;
        const long layersB = ceildiv(m - mp + 1, d - 1);
        std::array<BranchStats, kBranchCount> local{};
        for (long D = lo; D <= hi; ++D) {
            const std::array<long, 4> w{e, m, D, 0};
            const long s = s_value(d, g, e, D);
            // Literal case forms.
            long sB;
            int branch;
            if (d == 2) {
                branch = kCanD2;
                sB = D == e + 1 ? 2 * g : (g == 1 ? 2 : 2 * g - 1);
            } else if (small || 2 * D <= cut) {
                branch = small ? kCanSmallE : kCanI;
                sB = e + 1 - ceildiv(D, d - 1);
            } else {
                branch = kCanII;
                sB = floordiv(D - e + 2 * g - 2, d - 1) + 1;
            }
            const bool okA = e - s >= 2 * g - 1, okB = e - sB >= 2 * g - 1;
            const i128 denA = 2 * static_cast<i128>(e - s - g + 1) * layersA - static_cast<i128>(m - mp + 1) * f2;
            const i128 denB = 2 * static_cast<i128>(e - sB - g + 1) * layersB - static_cast<i128>(m - mp + 1) * f2;
            const i128 num = P2 * (2 * static_cast<i128>(D) + static_cast<i128>(m) * K);
            if (okA != okB || (okA && !eq(frac(num, denA), frac(num, denB))) || s != sB) {
                R.mismatch(Json{{"e", e}, {"m", m}, {"D", D}, {"s_closed", s}, {"s_cases", sB}});
            }
            if (!okA) {
                Json j = point_json(e, m, D);
                j["reason"] = "precondition e-s >= 2g-1 fails";
                R.counterexample(j);
                continue;
            }
            if (denA <= 0) {
                Json j = point_json(e, m, D);
                j["reason"] = "nonpositive denominator";
                R.counterexample(j);
                continue;
            }
            const Frac A = frac(num, denA);
            if (!(A.n < n1 * A.d)) {
                Json j = point_json(e, m, D);
                j["A"] = qjson(to_mpq(A.n, A.d));
                j["n_plus_1"] = row.n1.get_str();
                R.counterexample(j);
            }
            R.observe(A, branch, w);
            auto& L = local[static_cast<std::size_t>(branch)];
            if (!L.has_max || lt(L.max, A)) {
                L.has_max = true;
                L.max = A;
                L.witness = w;
            }
            // Per-point intermediate bounds of the displayed chains.
            const long dm1 = d - 1;
            auto violation = [&](const char* what) {
                auto& B = R.branches[static_cast<std::size_t>(branch)];
                if (!B.dominance_violations) {
                    Json j = point_json(e, m, D);
                    j["step"] = what;
                    B.first_violation = j;
                }
                ++B.dominance_violations;
            };
            auto dom = [&](const Frac& lo_, const Frac& hi_, const char* what) {
                if (hi_.d <= 0 || !le(lo_, hi_)) violation(what);
            };
            if (branch == kCanSmallE) {
                const i128 top = static_cast<i128>(pow2l(d - 1)) * (D + dm1 * (d * e + 1));
                const Frac b = D <= dm1 ? frac(top, 1) : frac(top * dm1, D);
                dom(A, b, "A <= 2^(d-1)(D+(d-1)(de+1))/max(1,D/(d-1))");
            } else if (branch == kCanI) {
                const Frac caseI =
                    frac(static_cast<i128>(pow2l(d - 1)) * dm1 * 2 * (D + static_cast<i128>(dm1) * K),
                         2 * static_cast<i128>(D) - 2 * static_cast<i128>(g) * dm1 - static_cast<i128>(dm1) * dm1 * f2);
                if (m <= 2 * dm1) {
                    dom(A, caseI, "A <= Case I bound in D");
                } else {
                    auto fafa = [&](long mm) {
                        return frac(static_cast<i128>(pow2l(d - 1)) * dm1 * dm1 * 2 * (2 * static_cast<i128>(D) + static_cast<i128>(mm) * K),
                                    static_cast<i128>(mm) * (2 * static_cast<i128>(D) - 2 * static_cast<i128>(g) * dm1 -
                                                             static_cast<i128>(f2) * dm1 * dm1));
                    };
                    const Frac fm = fafa(m);
                    dom(A, fm, "A <= large-m Case I bound");
                    dom(fm, caseI, "large-m Case I bound <= Case I bound in D");
                    if (!le(fafa(m + 1), fm)) R.monotone_m(Json{{"expression", "large-m Case I bound"}, {"e", e}, {"m", m}, {"D", D}});
                }
            } else if (branch == kCanD2) {
                const Frac b = frac(2 * (2 * static_cast<i128>(e + 1) + static_cast<i128>(m) * K),
                                    static_cast<i128>(m + 1 - mp) * (2 * static_cast<i128>(e) - 6 * g + 2 - f2));
                dom(A, b, "A <= D=e+1 bound in m");
            } else if (branch == kCanII && m > 2 * dm1) {
                const mpq_class fm = X.large_m_bound(mpq_class(e), m);
                const mpq_class a = to_mpq(A.n, A.d);
                if (a > fm) violation("A <= large-m Case II bound");
            }
        }
        if (d == 2) {
            // Per-m bound against h(e).
            const mpq_class per_m = mpq_class(2 * (e + 1) + m * K) / ((m + 1 - mp) * (mpq_class(e) - 3 * g + 1 - X.f));
            if (per_m > X.h2(mpq_class(e)) && local[kCanD2].has_max) {
                auto& B = R.branches[kCanD2];
                if (!B.dominance_violations) B.first_violation = Json{{"e", e}, {"m", m}, {"step", "bound in m <= h(e)"}};
                ++B.dominance_violations;
            }
        }
        if (d >= 3 && m > 2 * (d - 1) && local[kCanII].has_max) {
            const mpq_class fm = X.large_m_bound(mpq_class(e), m);
            if (X.large_m_bound(mpq_class(e), m + 1) > fm) R.monotone_m(Json{{"expression", "large-m Case II bound"}, {"e", e}, {"m", m}});
            if (fm > X.h(mpq_class(e))) {
                auto& B = R.branches[kCanII];
                if (!B.dominance_violations) B.first_violation = Json{{"e", e}, {"m", m}, {"step", "large-m Case II bound <= h(e)"}};
                ++B.dominance_violations;
            }
        }
        close_branches(X, e, m, row.n1, local, R, false);
    }
}

void terminal_e(const Exprs& X, long e, long m_lo, long m_hi, const Row& row, ShardResult& R) {
    const long d = X.d, g = X.g;
    const long f2 = g >= 2 ? g + 1 : 0;
    const long K = d * e - g + 1;
    const i128 n1 = static_cast<i128>(row.n1.get_si());
    const i128 P2 = static_cast<i128>(pow2l(d));  // 2^(d-1) * 2
    const long top = floordiv(d * e, 2) + 1;
    const long minor = e - 2 * g + 2;
    const long cut = d * e - 2 * g + 2;
    const bool small = g == 0 && d >= 3 && e <= d - 1;
    const std::size_t nD = static_cast<std::size_t>(top + 1);
    std::vector<long> sA(nD), sB(nD);
    for (long D = 0; D <= top; ++D) {
        sA[static_cast<std::size_t>(D)] = s_value(d, g, e, D);
        long s;
        if (d == 2) {
            if (D >= e + 2 - 2 * g) s = D == e + 1 ? 2 * g : (g == 1 ? 2 : 2 * g - 1);
            else s = e + 1 - D;
        } else if (small || 2 * D <= cut) {
            s = e + 1 - ceildiv(D, d - 1);
        } else {
            s = floordiv(D - e + 2 * g - 2, d - 1) + 1;
        }
        sB[static_cast<std::size_t>(D)] = s;
    }
    std::vector<std::uint8_t> ok(nD);
    std::vector<i128> ca(nD), cb(nD);
    for (long m = m_lo; m <= m_hi; ++m) {
        const long mp = m_prime(m);
        const long la = floordiv(m - mp, d - 1) + 1, lb = floordiv(m, d - 1) + 1;
        const long la_c = ceildiv(m - mp + 1, d - 1), lb_c = ceildiv(m + 1, d - 1);
        for (long D = 0; D <= top; ++D) {
            const std::size_t i = static_cast<std::size_t>(D);
            const long s = sA[i], t = sB[i];
            ok[i] = e - s >= 2 * g - 1;
            ca[i] = static_cast<i128>(mp) * f2 + 2 * static_cast<i128>(e - s - g + 1) * la;
            cb[i] = 2 * static_cast<i128>(e - s - g + 1) * lb;
            const bool okB = e - t >= 2 * g - 1;
            const i128 caB = static_cast<i128>(mp) * f2 + 2 * static_cast<i128>(e - t - g + 1) * la_c;
            const i128 cbB = 2 * static_cast<i128>(e - t - g + 1) * lb_c;
            if (s != t || okB != static_cast<bool>(ok[i]) || caB != ca[i] || cbB != cb[i])
                R.mismatch(Json{{"e", e}, {"m", m}, {"D", D}, {"s_closed", s}, {"s_cases", t}});
        }
        std::array<BranchStats, kBranchCount> local{};
        const i128 fm = static_cast<i128>(m + 1) * f2;
        for (long Da = 0; Da <= top; ++Da) {
            const std::size_t ia = static_cast<std::size_t>(Da);
            for (long Db = 0; Db <= top; ++Db) {
                if (Da < minor && Db < minor) continue;
                const std::size_t ib = static_cast<std::size_t>(Db);
                const bool oa = ok[ia], ob = ok[ib];
                if (!oa && !ob) {
                    Json j = pair_json(e, m, Da, Db);
                    j["reason"] = "precondition max(e-s_alpha, e-s_beta) >= 2g-1 fails";
                    R.counterexample(j);
                    continue;
                }
                i128 M;
                if (oa && ob) {
                    M = std::max(ca[ia], cb[ib]);
                    ++R.m_cases[3];
                } else if (oa) {
                    M = ca[ia];
                    ++R.m_cases[1];
                } else {
                    M = cb[ib];
                    ++R.m_cases[2];
                }
                const i128 den = M - fm;
                const std::array<long, 4> w{e, m, Da, Db};
                if (den <= 0) {
                    Json j = pair_json(e, m, Da, Db);
                    j["reason"] = "nonpositive denominator";
                    R.counterexample(j);
                    continue;
                }
                const i128 num = P2 * (static_cast<i128>(Da) + Db + static_cast<i128>(m) * K);
                if (!(num < n1 * den)) {
                    Json j = pair_json(e, m, Da, Db);
                    j["A_prime"] = qjson(to_mpq(num, den));
                    j["n_plus_1"] = row.n1.get_str();
                    R.counterexample(j);
                }
                int b;
                if (d == 2) {
                    b = Db >= e + 2 - 2 * g ? kTermD2I : (Db >= 2 * g ? kTermD2II : kTermD2III);
                } else if (small) {
                    if (e == 1) b = Da + Db >= d + 1 ? kTermE1Hi : kTermE1Lo;
                    else if (std::max(Da, Db) <= d - 1) b = kTermB0;
                    else if (m <= d - 2) b = kTermB1;
                    else if (m <= 2 * d - 2) b = kTermB2;
                    else b = kTermBm;
                } else if (Db >= minor && 2 * Db <= cut) {
                    if (2 * Db >= Da) {
                        if (m + 1 <= d - 1) b = kTermI1S;
                        else {
                            const long t = 3 * Db - K;
                            b = t > 0 ? kTermI1S : (t == 0 ? kTermI1Seq : kTermI1Sless);
                        }
                    } else {
                        b = 2 * Da <= cut ? kTermI21 : kTermI22;
                    }
                } else if (2 * Db > cut) {
                    b = kTermII;
                } else if (2 * Da > cut) {
                    b = kTermIII1;
                } else if (2 * Db < Da) {
                    b = kTermIII21;
                } else {
                    if (2 * Db < minor) ++R.d_beta_enforce_violations;
                    if (Da != minor) ++R.d_beta_flagged;
                    b = (m <= d - 2 || (g == 0 && d == 3)) ? kTermIII22E2 : kTermIII22F3;
                }
                const Frac a = frac(num, den);
                R.observe(a, b, w);
                auto& L = local[static_cast<std::size_t>(b)];
                if (!L.has_max || lt(L.max, a)) {
                    L.has_max = true;
                    L.max = a;
                    L.witness = w;
                }
            }
        }
        if (d == 2 && local[kTermD2I].has_max) {
            const mpq_class den = mpq_class(e) - 3 * g + 1 - X.f;
            const mpq_class cur = 2 * mpq_class(2 * (e + 1) + m * K) / ((m + 1) * den);
            const mpq_class nxt = 2 * mpq_class(2 * (e + 1) + (m + 1) * K) / ((m + 2) * den);
            if (nxt > cur) R.monotone_m(Json{{"expression", "d2 case I bound in m"}, {"e", e}, {"m", m}});
        }
        close_branches(X, e, m, row.n1, local, R, true);
    }
}

Json branch_json(const Exprs& X, int b, const BranchStats& B, bool terminal) {
    (void)X;
    Json j{{"branch", branch_name(b)}, {"points", B.points}};
    if (B.has_max) {
        j["max"] = qjson(to_mpq(B.max.n, B.max.d));
        j["witness"] = terminal ? pair_json(B.witness[0], B.witness[1], B.witness[2], B.witness[3])
                                : point_json(B.witness[0], B.witness[1], B.witness[2]);
    }
    j["dominance_violations"] = B.dominance_violations;
    if (B.dominance_violations) j["first_dominance_violation"] = B.first_violation;
    j["bound_not_below_threshold"] = B.argument_open;
    if (B.argument_open) j["first_bound_not_below_threshold"] = B.first_open;
    return j;
}

}  // namespace

std::string to_string(BoundMode m) { return m == BoundMode::canonical ? "canonical" : "terminal"; }

BoundMode parse_bound_mode(const std::string& s) {
    if (s == "canonical") return BoundMode::canonical;
    if (s == "terminal") return BoundMode::terminal;
    throw Error(ErrorKind::parse, "unknown mode '" + s + "' (expected canonical or terminal)");
}

mpz_class floor_q(const mpq_class& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

mpz_class ceil_q(const mpq_class& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

mpq_class f_g(long g) {
    require(g >= 0, "f(g) requires g >= 0");
    return g < 2 ? mpq_class(0) : ratio(g + 1, 2);
}

MuDims mu_dims(long n, long d, long e, long g) {
    MuDims r;
    r.mu = mpz_class(n + 1) * (e - g + 1) - (d * e - g + 1) - 1;
    r.mu_bar = mpz_class(n + 1) * (e - g + 1) - (d * e - g + 1) + g - 1 + (3 * g - 3);
    return r;
}

mpq_class e0_value(long d, long g, BoundMode mode) {
    require(d >= 2 && g >= 0, "e0 requires d >= 2 and g >= 0");
    if (g == 0) {
        if (d == 2) throw Error(ErrorKind::uncovered, "d=2, g=0 is not covered by the main theorems");
        return 0;
    }
    const mpq_class f = f_g(g);
    if (mode == BoundMode::canonical) {
        if (d == 2) return 19 * g + 7 * f - 3;
        return mpq_class(g - 1) * (pow2q(d - 1) * (d - 1) * (d - 1) * (2 * d - 1) + 2) +
               (d - 1) * (g + (d - 1) * f) * (pow2q(d - 1) * (d - 1) * (d * d - d + 1) + 1);
    }
    if (d == 2) return 29 * g + 14 * f - 5;
    return pow2q(d - 2) * (d - 1) * (d - 1) *
               (4 * d * d * g + (4 * d * d * d - 8 * d * d + 7 * d - 3) * f + 4 * d * (g - 2) - g + 4) -
           1 + (d + 1) * g + (d - 1) * (d - 1) * f;
}

Thresholds thresholds(long d, long g, long e, BoundMode mode) {
    require(d >= 2 && g >= 0 && e >= 1, "thresholds require d >= 2, g >= 0, e >= 1");
    Thresholds t;
    t.e0 = e0_value(d, g, mode);
    if (mode == BoundMode::canonical) {
        if (g >= 1) {
            t.threshold = pow2q(d - 1) * (d - 1) * (d * d - d + 1);
            t.row = "g>=1, d>=2";
        } else if (e == 1 && d >= 4) {
            t.threshold = pow2q(d - 2) * d * (2 * d + 1);
            t.row = "g=0, e=1, d>=4";
        } else if (e >= 2 && e <= d - 2) {
            t.threshold = pow2q(d - 1) * (d - 1) * (d * e + 2);
            t.row = "g=0, 2<=e<=d-2, d>=3";
        } else if (e >= d - 1) {
            t.threshold = pow2q(d - 1) * (d - 1) * (d * d - d + 1) - 1;
            t.row = "g=0, d-1<=e, d>=3";
        } else {
            throw Error(ErrorKind::uncovered, "canonical d=" + std::to_string(d) + ", g=0, e=" + std::to_string(e) +
                                                  " is not covered by the main theorem");
        }
    } else {
        if (g >= 1) {
            t.threshold = pow2q(d - 2) * (d - 1) * (4 * d * d - 4 * d + 3);
            t.row = "g>=1, d>=2";
        } else if (e == 1 && d >= 4) {
            t.threshold = pow2q(d - 2) * d * (2 * d + 1);
            t.row = "g=0, e=1, d>=4";
        } else if (e >= 2 && e <= d - 1) {
            t.threshold = pow2q(d - 1) * (d - 1) * (1 + ratio(d - 1, 2 * d - 1) + ratio(2 * (d - 1) * (d * e + 1), d));
            t.row = "g=0, 2<=e<=d-1, d>=3";
        } else if (e >= d) {
            t.threshold = pow2q(d - 2) * (d - 1) * (4 * d * d - 4 * d + 3) - 1;
            t.row = "g=0, d<=e, d>=3";
        } else {
            throw Error(ErrorKind::uncovered, "terminal d=" + std::to_string(d) + ", g=0, e=" + std::to_string(e) +
                                                  " is not covered by the main theorem");
        }
    }
    t.n_plus_1 = floor_q(t.threshold) + 1;
    return t;
}

long m_prime(long m) { return floordiv(m + 2, 2); }

long s_value(long d, long g, long e, long D) {
    require(d >= 2 && D >= 0, "s requires d >= 2 and D >= 0");
    const long a = floordiv(D - e + 2 * g - 2, d - 1);
    const long b = e - ceildiv(D, d - 1);  // floor(e - D/(d-1))
    long mx = std::max(a, b);
    if (g >= 1) mx = std::max({mx, 2 * g - 2, 1L});
    return mx + 1;
}

BoundValue A_quantity(long d, long g, long e, long m, long D) {
    require(m >= 1, "A requires m >= 1");
    BoundValue r;
    r.s_alpha = s_value(d, g, e, D);
    const long mp = m_prime(m);
    if (e - r.s_alpha < 2 * g - 1) {
        r.status = "precondition";
        return r;
    }
    const mpq_class den = mpq_class(e - r.s_alpha - g + 1) * (floordiv(m - mp, d - 1) + 1) - (m - mp + 1) * f_g(g);
    if (den <= 0) {
        r.status = "nonpositive_denominator";
        return r;
    }
    r.value = pow2q(d - 2) * (2 * D + m * (d * e + 1 - g)) / den;
    r.status = "ok";
    return r;
}

BoundValue M_quantity(long d, long g, long e, long m, long Da, long Db) {
    require(m >= 1, "M requires m >= 1");
    BoundValue r;
    r.s_alpha = s_value(d, g, e, Da);
    r.s_beta = s_value(d, g, e, Db);
    const long mp = m_prime(m);
    const mpq_class f = f_g(g);
    const mpq_class ca = mp * f + (e - r.s_alpha - g + 1) * ceildiv(m - mp + 1, d - 1);
    const mpq_class cb = mpq_class(e - r.s_beta - g + 1) * ceildiv(m + 1, d - 1);
    const bool oa = e - r.s_alpha >= 2 * g - 1, ob = e - r.s_beta >= 2 * g - 1;
    if (oa && !ob) {
        r.m_case = 1;
        r.M = ca;
    } else if (ob && !oa) {
        r.m_case = 2;
        r.M = cb;
    } else if (oa && ob) {
        r.m_case = 3;
        r.M = std::max(ca, cb);
    } else {
        r.status = "precondition";
        return r;
    }
    r.status = "ok";
    return r;
}

BoundValue A_prime(long d, long g, long e, long m, long Da, long Db) {
    BoundValue r = M_quantity(d, g, e, m, Da, Db);
    if (r.status != "ok") return r;
    const mpq_class den = *r.M - (m + 1) * f_g(g);
    if (den <= 0) {
        r.status = "nonpositive_denominator";
        return r;
    }
    r.value = pow2q(d - 1) * (Da + Db + m * (d * e - g + 1)) / den;
    return r;
}

Certificate certify(const CertifyOptions& opt) {
    const long d = opt.d, g = opt.g;
    require(d >= 2 && d <= 12 && g >= 0 && g <= 100000, "certify requires 2 <= d <= 12 and 0 <= g <= 100000");
    if (d == 2 && g == 0) throw Error(ErrorKind::uncovered, "d=2, g=0 is not covered by the main theorems");
    const mpq_class e0 = e0_value(d, g, opt.mode);
    long e_lo, e_hi;
    if (opt.e_span) {
        e_lo = opt.e_span->first;
        e_hi = opt.e_span->second;
    } else {
        e_lo = floor_q(e0).get_si() + 1;
        e_hi = floor_q(e0 + 100).get_si();
    }
    const long m_lo = opt.m_span.first, m_hi = opt.m_span.second;
    if (e_lo > e_hi || m_lo > m_hi) throw Error(ErrorKind::precondition, "empty sweep span");
    require(mpq_class(e_lo) > e0, "e span must lie above e0 = " + e0.get_str());
    require(m_lo >= 1, "m span must start at m >= 1");
    require(e_hi <= 1000000 && m_hi <= 10000, "sweep spans too large for the exact fixed-width sweep");

    const Exprs X(d, g);
    std::vector<long> es;
    std::vector<Row> rows;
    Json skipped = Json::array();
    Json row_json = Json::array();
    std::string last_row;
    for (long e = e_lo; e <= e_hi; ++e) {
        Thresholds t;
        try {
            t = thresholds(d, g, e, opt.mode);
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::uncovered) throw;
            skipped.push_back(Json{{"e", e}, {"reason", err.what()}});
            continue;
        }
        Row r{opt.n_plus_1 ? *opt.n_plus_1 : t.n_plus_1, t.row};
        require(r.n1 > 0 && r.n1.fits_slong_p(), "n+1 must be a positive machine integer");
        if (t.row != last_row) {
            row_json.push_back(Json{{"from_e", e}, {"row", t.row}, {"threshold", qjson(t.threshold)}, {"n_plus_1", r.n1.get_str()}});
            last_row = t.row;
        }
        es.push_back(e);
        rows.push_back(r);
    }
    if (es.empty()) throw Error(ErrorKind::precondition, "empty sweep span after removing uncovered degrees");

    const bool terminal = opt.mode == BoundMode::terminal;
    std::vector<ShardResult> shards(es.size());
    run_shards(es.size(), std::max(1u, opt.workers), [&](std::size_t i) {
        if (terminal) terminal_e(X, es[i], m_lo, m_hi, rows[i], shards[i]);
        else canonical_e(X, es[i], m_lo, m_hi, rows[i], shards[i]);
    });
    ShardResult R;
    for (const auto& s : shards) R.merge(s);

    // Monotone signs in e of the final bounds, from e0 (g >= 1) through the sweep.
    Json mono = Json::array();
    bool mono_ok = R.monotone_m_violations == 0;
    for (const auto& F : e_functions(X, opt.mode)) {
        const bool decreasing = g >= 1;
        std::vector<mpq_class> pts;
        if (g >= 1) pts.push_back(e0);
        for (long e : es) pts.push_back(mpq_class(e));
        bool ok = true;
        Json first;
        mpq_class prev = F.fn(pts[0]);
        for (std::size_t i = 1; i < pts.size(); ++i) {
            const mpq_class cur = F.fn(pts[i]);
            const bool good = decreasing ? cur <= prev : cur >= prev;
            if (!good && ok) {
                ok = false;
                first = Json{{"e", rational_json(pts[i])}, {"previous", qjson(prev)}, {"value", qjson(cur)}};
            }
            prev = cur;
        }
        Json j{{"expression", F.name}, {"variable", "e"}, {"direction", decreasing ? "non-increasing" : "non-decreasing"},
               {"holds", ok}};
        if (!ok) j["first_violation"] = first;
        mono.push_back(j);
        mono_ok = mono_ok && ok;
    }
    Json mono_m{{"variable", "m"}, {"violations", R.monotone_m_violations}};
    if (R.monotone_m_violations) mono_m["first_violation"] = R.first_monotone_m;
    mono.push_back(mono_m);

    // Spot identities: e0-evaluated bounds need only reach n+1, since e > e0 and they decrease.
    Json spots = Json::array();
    bool spots_ok = true;
    const auto claims = terminal ? terminal_claims(d, g) : canonical_claims(d, g);
    for (const auto& c : claims) {
        if (c.entry.group == "iv.form") continue;
        if (c.entry.group == "iv.small_e" && c.entry.name.find("(e=") != std::string::npos) {
            const long e = std::stol(c.entry.name.substr(c.entry.name.find("(e=") + 3));
            if (std::find(es.begin(), es.end(), e) == es.end()) continue;
        }
        if (c.entry.group == "iv.small_e" && c.entry.name.rfind("e=1", 0) == 0 &&
            std::find(es.begin(), es.end(), 1L) == es.end())
            continue;
        std::string rel = c.entry.relation;
        if (c.at_e0 && rel == "<") rel = "<=";
        const bool ok = relation_holds(c.entry.lhs, c.entry.rhs, rel);
        spots.push_back(Json{{"group", c.entry.group}, {"name", c.entry.name}, {"lhs", qjson(c.entry.lhs)},
                             {"relation", rel}, {"rhs", qjson(c.entry.rhs)}, {"holds", ok}});
        spots_ok = spots_ok && ok;
    }

    Json branches = Json::array();
    bool dominance_ok = true, closes = true;
    for (int b = 0; b < kBranchCount; ++b) {
        const auto& B = R.branches[static_cast<std::size_t>(b)];
        if (!B.points && !B.dominance_violations) continue;
        branches.push_back(branch_json(X, b, B, terminal));
        dominance_ok = dominance_ok && B.dominance_violations == 0;
        closes = closes && B.argument_open == 0;
    }

    const bool strict_ok = R.counterexamples == 0;
    const bool pipelines_ok = R.pipeline_mismatches == 0;
    const bool pass = strict_ok && pipelines_ok && spots_ok;

    Json body;
    body["tool"] = "jetcircle";
    body["version"] = kToolVersion;
    body["kind"] = "certificate";
    body["mode"] = to_string(opt.mode);
    body["params"] = Json{{"d", d},
                          {"g", g},
                          {"f_g", rational_json(X.f)},
                          {"e0", qjson(e0)},
                          {"e_span", Json::array({e_lo, e_hi})},
                          {"m_span", Json::array({m_lo, m_hi})},
                          {"n_plus_1_override", opt.n_plus_1 ? Json(opt.n_plus_1->get_str()) : Json(nullptr)}};
    body["threshold_rows"] = row_json;
    body["skipped"] = skipped;
    body["grid_points"] = R.points;
    if (R.has_max) {
        Json mx{{"value", qjson(to_mpq(R.max.n, R.max.d))}, {"branch", branch_name(R.witness_branch)}};
        mx["witness"] = terminal ? pair_json(R.witness[0], R.witness[1], R.witness[2], R.witness[3])
                                 : point_json(R.witness[0], R.witness[1], R.witness[2]);
        body[terminal ? "max_A_prime" : "max_A"] = mx;
    }
    body["counterexamples"] = R.counterexamples;
    if (R.counterexamples) body["first_counterexample"] = R.first_counterexample;
    body["pipeline_mismatches"] = R.pipeline_mismatches;
    if (R.pipeline_mismatches) body["first_pipeline_mismatch"] = R.first_mismatch;
    if (terminal) {
        body["m_cases"] = Json{{"alpha_only", R.m_cases[1]}, {"beta_only", R.m_cases[2]}, {"both", R.m_cases[3]}};
        body["case_III_2_2_d_beta"] = Json{{"derived_bound", "2 D_beta >= e-2g+2"},
                                           {"enforced_violations", R.d_beta_enforce_violations},
                                           {"points_where_bounds_differ", R.d_beta_flagged}};
    }
    body["branches"] = branches;
    body["monotonicity"] = mono;
    body["spot_identities"] = spots;
    body["checks"] = Json{{"strict_inequality", strict_ok}, {"pipelines_agree", pipelines_ok}, {"spot_identities", spots_ok}};
    // The displayed case bounds are audited but do not enter the verdict.
    body["argument_audit"] = Json{{"dominance", dominance_ok}, {"monotonicity", mono_ok}, {"closes_below_threshold", closes},
                                  {"consistent", dominance_ok && mono_ok && closes}};
    body["verdict"] = pass ? "pass" : "fail";
    return Certificate{body, pass};
}

bool IdentityReport::all_pass() const {
    return std::all_of(entries.begin(), entries.end(), [](const IdentityEntry& e) { return e.holds; });
}

Json IdentityReport::to_json() const {
    Json list = Json::array();
    std::size_t failed = 0;
    for (const auto& e : entries) {
        list.push_back(Json{{"group", e.group}, {"name", e.name}, {"d", e.d}, {"g", e.g}, {"lhs", qjson(e.lhs)},
                            {"relation", e.relation}, {"rhs", qjson(e.rhs)}, {"holds", e.holds}});
        failed += !e.holds;
    }
    return Json{{"tool", "jetcircle"}, {"version", kToolVersion}, {"kind", "paper_identities"},
                {"entries", list}, {"total", entries.size()}, {"failed", failed},
                {"verdict", failed ? "fail" : "pass"}};
}

IdentityReport reproduce_paper_identities(long g_max, long d_max) {
    require(g_max >= 1 && d_max >= 3, "identity ranges require g_max >= 1 and d_max >= 3");
    IdentityReport rep;
    auto take = [&](const std::vector<Claim>& cs) {
        for (const auto& c : cs) rep.entries.push_back(c.entry);
    };
    for (long g = 1; g <= g_max; ++g) take(canonical_claims(2, g));
    for (long d = 3; d <= d_max; ++d)
        for (long g = 1; g <= g_max; ++g) take(canonical_claims(d, g));
    for (long d = 3; d <= d_max; ++d) {
        take(terminal_claims(d, 0));
        for (long g = 1; g <= g_max; ++g) take(terminal_claims(d, g));
    }
    for (long g = 1; g <= g_max; ++g) take(terminal_claims(2, g));
    return rep;
}

}  // namespace jetcircle
