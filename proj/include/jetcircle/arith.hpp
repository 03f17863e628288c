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

#ifndef JETCIRCLE_ARITH_HPP
#define JETCIRCLE_ARITH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

namespace jetcircle {

enum class ErrorKind { budget, precondition, mismatch, parse, uncovered, counterexample, identity };

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

class BudgetExceeded : public Error {
   public:
    BudgetExceeded(const std::string& what, mpz_class required, mpz_class ceiling);
    const mpz_class& required() const noexcept { return required_; }
    const mpz_class& ceiling() const noexcept { return ceiling_; }

   private:
    mpz_class required_;
    mpz_class ceiling_;
};

// Ceiling on the cardinality of any enumerated search space.
struct Budget {
    static constexpr double default_ceiling = 1e9;
    static constexpr double forced_ceiling = 1e11;

    mpz_class ceiling{1000000000};

    static Budget standard() { return Budget{}; }
    static Budget forced();
    static Budget with_ceiling(const mpz_class& c) { return Budget{c}; }

    void require(const mpz_class& cardinality, const std::string& what) const;
};

mpz_class ipow(std::uint64_t base, std::uint64_t exp);
bool is_prime(std::uint64_t n);

class PrimeField {
   public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t reduce(std::int64_t a) const noexcept {
        std::int64_t r = a % static_cast<std::int64_t>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
    std::uint32_t inv(std::uint32_t a) const;

    bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

   private:
    std::uint32_t p_;
};

// Element of F_p[t]/t^(m+1); coeffs[k] is the coefficient of t^k.
struct JetScalar {
    std::vector<std::uint32_t> coeffs;

    JetScalar() = default;
    explicit JetScalar(std::size_t m) : coeffs(m + 1, 0) {}
    JetScalar(std::initializer_list<std::uint32_t> c) : coeffs(c) {}

    std::size_t order() const noexcept { return coeffs.size() - 1; }
    bool is_zero() const noexcept;
    bool operator==(const JetScalar& o) const = default;
};

JetScalar jet_add(const PrimeField& F, const JetScalar& a, const JetScalar& b);
JetScalar jet_mul(const PrimeField& F, const JetScalar& a, const JetScalar& b);

// Element of Z[zeta_p] stored as p integer coefficients of 1, zeta, ..., zeta^(p-1).
class CyclotomicSum {
   public:
    CyclotomicSum() = default;
    explicit CyclotomicSum(std::uint32_t p);

    static CyclotomicSum zero(std::uint32_t p) { return CyclotomicSum(p); }
    static CyclotomicSum unit(std::uint32_t p, std::uint32_t k);
    static CyclotomicSum integer(std::uint32_t p, const mpz_class& v);
    static CyclotomicSum from_counts(std::uint32_t p, const std::vector<std::int64_t>& c);

    std::uint32_t p() const noexcept { return p_; }
    const std::vector<mpz_class>& counts() const noexcept { return c_; }
    const mpz_class& operator[](std::size_t i) const { return c_[i]; }

    // Subtracts the top coefficient from every entry so that counts()[p-1] == 0.
    void normalize();
    CyclotomicSum normalized() const;

    bool is_zero() const;
    bool is_rational() const;
    // Integer value; requires is_rational().
    mpz_class rational_value() const;

    CyclotomicSum conj() const;
    CyclotomicSum& operator+=(const CyclotomicSum& o);
    CyclotomicSum& operator-=(const CyclotomicSum& o);
    CyclotomicSum operator+(const CyclotomicSum& o) const;
    CyclotomicSum operator-(const CyclotomicSum& o) const;
    CyclotomicSum operator*(const CyclotomicSum& o) const;
    CyclotomicSum scaled(const mpz_class& k) const;
    bool operator==(const CyclotomicSum& o) const;
    bool operator!=(const CyclotomicSum& o) const { return !(*this == o); }

    std::string to_string() const;

   private:
    void check_same(const CyclotomicSum& o) const;

    std::uint32_t p_ = 0;
    std::vector<mpz_class> c_;
};

CyclotomicSum psi_m(const PrimeField& F, const JetScalar& u);
CyclotomicSum cyclo_accumulate(const CyclotomicSum& acc, const CyclotomicSum& term, const mpz_class& multiplicity);

// Closed real interval with MPFR endpoints; lo rounded down, hi rounded up.
class RealInterval {
   public:
    explicit RealInterval(long precision_bits);
    RealInterval(const RealInterval& o);
    RealInterval& operator=(const RealInterval& o);
    ~RealInterval();

    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }
    mpfr_ptr lo() { return lo_; }
    mpfr_ptr hi() { return hi_; }
    long precision() const { return prec_; }

    double lo_double() const;
    double hi_double() const;
    bool contains(double x) const;
    bool contains(const mpq_class& q) const;
    // Sign of comparison against an exact rational: -1 if hi < q, +1 if lo > q, 0 otherwise.
    int compare(const mpq_class& q) const;
    // +1 if hi <= q, -1 if lo > q, 0 if undecided.
    int compare_le(const mpq_class& q) const;
    RealInterval pow2k(unsigned k) const;
    mpfr_exp_t width_log2() const;

   private:
    long prec_;
    mpfr_t lo_, hi_;
};

RealInterval cyclo_magnitude(const CyclotomicSum& v, long precision_bits);
RealInterval cyclo_real_value(const CyclotomicSum& v, long precision_bits);

}  // namespace jetcircle

#endif
