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

#include "jetcircle/arith.hpp"

#include <algorithm>
#include <sstream>

namespace jetcircle {

BudgetExceeded::BudgetExceeded(const std::string& what, mpz_class required, mpz_class ceiling)
    : Error(ErrorKind::budget, "budget exceeded: " + what + " requires " + required.get_str() +
                                   " operations, ceiling is " + ceiling.get_str()),
      required_(std::move(required)),
      ceiling_(std::move(ceiling)) {}

Budget Budget::forced() {
    Budget b;
    b.ceiling = mpz_class("100000000000");
    return b;
}

void Budget::require(const mpz_class& cardinality, const std::string& what) const {
    if (cardinality > ceiling) throw BudgetExceeded(what, cardinality, ceiling);
}

mpz_class ipow(std::uint64_t base, std::uint64_t exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p) || p >= 65536) throw Error(ErrorKind::precondition, "modulus must be a prime below 65536, got " + std::to_string(p));
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept {
    std::uint32_t r = 1 % p_;
    std::uint32_t b = a % p_;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a % p_ == 0) throw Error(ErrorKind::precondition, "inverse of zero");
    return pow(a, p_ - 2);
}

bool JetScalar::is_zero() const noexcept {
    return std::all_of(coeffs.begin(), coeffs.end(), [](std::uint32_t c) { return c == 0; });
}

JetScalar jet_add(const PrimeField& F, const JetScalar& a, const JetScalar& b) {
    if (a.coeffs.size() != b.coeffs.size()) throw Error(ErrorKind::mismatch, "jet orders differ");
    JetScalar r(a.order());
    for (std::size_t k = 0; k < a.coeffs.size(); ++k) r.coeffs[k] = F.add(a.coeffs[k], b.coeffs[k]);
    return r;
}

JetScalar jet_mul(const PrimeField& F, const JetScalar& a, const JetScalar& b) {
    if (a.coeffs.size() != b.coeffs.size()) throw Error(ErrorKind::mismatch, "jet orders differ");
    const std::size_t n = a.coeffs.size();
    JetScalar r(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) r.coeffs[i + j] = F.add(r.coeffs[i + j], F.mul(a.coeffs[i], b.coeffs[j]));
    }
    return r;
}

CyclotomicSum::CyclotomicSum(std::uint32_t p) : p_(p), c_(p, 0) {
    if (p < 2) throw Error(ErrorKind::precondition, "cyclotomic order must be at least 2");
}

CyclotomicSum CyclotomicSum::unit(std::uint32_t p, std::uint32_t k) {
    CyclotomicSum r(p);
    r.c_[k % p] = 1;
    return r;
}

CyclotomicSum CyclotomicSum::integer(std::uint32_t p, const mpz_class& v) {
    CyclotomicSum r(p);
    r.c_[0] = v;
    return r;
}

CyclotomicSum CyclotomicSum::from_counts(std::uint32_t p, const std::vector<std::int64_t>& c) {
    CyclotomicSum r(p);
    for (std::uint32_t i = 0; i < p && i < c.size(); ++i) r.c_[i] = static_cast<long>(c[i]);
    return r;
}

void CyclotomicSum::normalize() {
    if (c_.empty()) return;
    const mpz_class top = c_[p_ - 1];
    if (top == 0) return;
    for (auto& x : c_) x -= top;
}

CyclotomicSum CyclotomicSum::normalized() const {
    CyclotomicSum r = *this;
    r.normalize();
    return r;
}

bool CyclotomicSum::is_zero() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != c_[0]) return false;
    return true;
}

bool CyclotomicSum::is_rational() const {
    for (std::size_t i = 2; i < c_.size(); ++i)
        if (c_[i] != c_[1]) return false;
    return true;
}

mpz_class CyclotomicSum::rational_value() const {
    if (!is_rational()) throw Error(ErrorKind::precondition, "cyclotomic value is not rational");
    return c_.size() > 1 ? mpz_class(c_[0] - c_[1]) : c_[0];
}

void CyclotomicSum::check_same(const CyclotomicSum& o) const {
    if (p_ != o.p_) throw Error(ErrorKind::mismatch, "cyclotomic orders differ: " + std::to_string(p_) + " vs " + std::to_string(o.p_));
}

CyclotomicSum CyclotomicSum::conj() const {
    CyclotomicSum r(p_);
    for (std::uint32_t k = 0; k < p_; ++k) r.c_[(p_ - k) % p_] = c_[k];
    return r;
}

CyclotomicSum& CyclotomicSum::operator+=(const CyclotomicSum& o) {
    check_same(o);
    for (std::uint32_t k = 0; k < p_; ++k) c_[k] += o.c_[k];
    return *this;
}

CyclotomicSum& CyclotomicSum::operator-=(const CyclotomicSum& o) {
    check_same(o);
    for (std::uint32_t k = 0; k < p_; ++k) c_[k] -= o.c_[k];
    return *this;
}

CyclotomicSum CyclotomicSum::operator+(const CyclotomicSum& o) const {
    CyclotomicSum r = *this;
    r += o;
    return r;
}

CyclotomicSum CyclotomicSum::operator-(const CyclotomicSum& o) const {
    CyclotomicSum r = *this;
    r -= o;
    return r;
}

CyclotomicSum CyclotomicSum::operator*(const CyclotomicSum& o) const {
    check_same(o);
    CyclotomicSum r(p_);
    for (std::uint32_t i = 0; i < p_; ++i) {
        if (c_[i] == 0) continue;
        for (std::uint32_t j = 0; j < p_; ++j) r.c_[(i + j) % p_] += c_[i] * o.c_[j];
    }
    return r;
}

CyclotomicSum CyclotomicSum::scaled(const mpz_class& k) const {
    CyclotomicSum r = *this;
    for (auto& x : r.c_) x *= k;
    return r;
}

bool CyclotomicSum::operator==(const CyclotomicSum& o) const {
    check_same(o);
    const mpz_class shift = o.c_[p_ - 1] - c_[p_ - 1];
    for (std::uint32_t k = 0; k < p_; ++k)
        if (c_[k] + shift != o.c_[k]) return false;
    return true;
}

std::string CyclotomicSum::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < c_.size(); ++k) os << (k ? "," : "") << c_[k].get_str();
    os << ']';
    return os.str();
}

CyclotomicSum psi_m(const PrimeField& F, const JetScalar& u) {
    std::uint32_t s = 0;
    for (auto a : u.coeffs) s = F.add(s, a % F.p());
    return CyclotomicSum::unit(F.p(), s);
}

CyclotomicSum cyclo_accumulate(const CyclotomicSum& acc, const CyclotomicSum& term, const mpz_class& multiplicity) {
    CyclotomicSum r = acc;
    r += term.scaled(multiplicity);
    return r;
}

RealInterval::RealInterval(long precision_bits) : prec_(precision_bits) {
    if (precision_bits < 53) throw Error(ErrorKind::precondition, "precision must be at least 53 bits");
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

RealInterval::RealInterval(const RealInterval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RealInterval& RealInterval::operator=(const RealInterval& o) {
    if (this == &o) return *this;
    prec_ = o.prec_;
    mpfr_set_prec(lo_, prec_);
    mpfr_set_prec(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
}

RealInterval::~RealInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

double RealInterval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double RealInterval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

bool RealInterval::contains(double x) const { return mpfr_cmp_d(lo_, x) <= 0 && mpfr_cmp_d(hi_, x) >= 0; }

bool RealInterval::contains(const mpq_class& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

int RealInterval::compare(const mpq_class& q) const {
    if (mpfr_cmp_q(hi_, q.get_mpq_t()) < 0) return -1;
    if (mpfr_cmp_q(lo_, q.get_mpq_t()) > 0) return 1;
    return 0;
}

int RealInterval::compare_le(const mpq_class& q) const {
    if (mpfr_cmp_q(hi_, q.get_mpq_t()) <= 0) return 1;
    if (mpfr_cmp_q(lo_, q.get_mpq_t()) > 0) return -1;
    return 0;
}

RealInterval RealInterval::pow2k(unsigned k) const {
    RealInterval r = *this;
    for (unsigned i = 0; i < k; ++i) {
        // Squaring of a non-negative interval.
        if (mpfr_sgn(r.lo_) < 0) mpfr_set_zero(r.lo_, 1);
        mpfr_sqr(r.lo_, r.lo_, MPFR_RNDD);
        mpfr_sqr(r.hi_, r.hi_, MPFR_RNDU);
    }
    return r;
}

mpfr_exp_t RealInterval::width_log2() const {
    mpfr_t w;
    mpfr_init2(w, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    mpfr_exp_t e = mpfr_zero_p(w) ? mpfr_get_emin() : mpfr_get_exp(w);
    mpfr_clear(w);
    return e;
}

namespace {

// Value of a real element sum_k c_k zeta^k (with c_k == c_{p-k}) as c_0 + sum_{k=1}^{(p-1)/2} 2 c_k cos(2 pi k / p).
// Each cosine carries an explicit absolute error bound of 2^(8 - prec).
RealInterval real_value_of_symmetric(const std::vector<mpz_class>& c, std::uint32_t p, long prec) {
    RealInterval out(prec);
    const long wp = prec + 32;
    mpfr_t lo, hi, term, cosv, arg, eps, absc;
    mpfr_inits2(wp, lo, hi, term, cosv, arg, eps, absc, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_z(lo, c[0].get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(hi, c[0].get_mpz_t(), MPFR_RNDU);
    mpfr_set_ui_2exp(eps, 1, 8 - wp, MPFR_RNDU);
    for (std::uint32_t k = 1; 2 * k < p; ++k) {
        mpz_class ck = c[k] + c[p - k];
        if (ck == 0) continue;
        mpfr_const_pi(arg, MPFR_RNDN);
        mpfr_mul_ui(arg, arg, 2 * k, MPFR_RNDN);
        mpfr_div_ui(arg, arg, p, MPFR_RNDN);
        mpfr_cos(cosv, arg, MPFR_RNDN);
        mpz_class ack = abs(ck);
        mpfr_set_z(absc, ack.get_mpz_t(), MPFR_RNDU);
        mpfr_mul(absc, absc, eps, MPFR_RNDU);
        mpfr_mul_z(term, cosv, ck.get_mpz_t(), MPFR_RNDD);
        mpfr_add(lo, lo, term, MPFR_RNDD);
        mpfr_sub(lo, lo, absc, MPFR_RNDD);
        mpfr_mul_z(term, cosv, ck.get_mpz_t(), MPFR_RNDU);
        mpfr_add(hi, hi, term, MPFR_RNDU);
        mpfr_add(hi, hi, absc, MPFR_RNDU);
    }
    mpfr_set(out.lo(), lo, MPFR_RNDD);
    mpfr_set(out.hi(), hi, MPFR_RNDU);
    mpfr_clears(lo, hi, term, cosv, arg, eps, absc, static_cast<mpfr_ptr>(nullptr));
    return out;
}

}  // namespace

RealInterval cyclo_real_value(const CyclotomicSum& v, long precision_bits) {
    CyclotomicSum w = v.normalized();
    if (w.is_rational()) {
        RealInterval out(precision_bits);
        mpz_class r = w.rational_value();
        mpfr_set_z(out.lo(), r.get_mpz_t(), MPFR_RNDD);
        mpfr_set_z(out.hi(), r.get_mpz_t(), MPFR_RNDU);
        return out;
    }
    // Symmetrize: the real part of v equals (v + conj v) / 2.
    CyclotomicSum s = v + v.conj();
    RealInterval twice = real_value_of_symmetric(s.counts(), v.p(), precision_bits);
    mpfr_div_2ui(twice.lo(), twice.lo(), 1, MPFR_RNDD);
    mpfr_div_2ui(twice.hi(), twice.hi(), 1, MPFR_RNDU);
    return twice;
}

RealInterval cyclo_magnitude(const CyclotomicSum& v, long precision_bits) {
    if (precision_bits < 53) throw Error(ErrorKind::precondition, "precision must be at least 53 bits");
    CyclotomicSum n = (v * v.conj()).normalized();
    RealInterval sq = cyclo_real_value(n, precision_bits);
    RealInterval out(precision_bits);
    if (mpfr_sgn(sq.lo()) < 0) mpfr_set_zero(sq.lo(), 1);
    mpfr_sqrt(out.lo(), sq.lo(), MPFR_RNDD);
    mpfr_sqrt(out.hi(), sq.hi(), MPFR_RNDU);
    return out;
}

}  // namespace jetcircle
