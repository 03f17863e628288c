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

#ifndef JETCIRCLE_CERTIFIER_HPP
#define JETCIRCLE_CERTIFIER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jetcircle/arith.hpp"
#include "jetcircle/report.hpp"

namespace jetcircle {

enum class BoundMode { canonical, terminal };
std::string to_string(BoundMode m);
BoundMode parse_bound_mode(const std::string& s);

mpz_class floor_q(const mpq_class& q);
mpz_class ceil_q(const mpq_class& q);

// 0 for g in {0,1}, (g+1)/2 for g >= 2.
mpq_class f_g(long g);

struct MuDims {
    mpz_class mu;
    mpz_class mu_bar;
};
MuDims mu_dims(long n, long d, long e, long g);

struct Thresholds {
    mpq_class threshold;   // n+1 must exceed this
    mpz_class n_plus_1;    // least admissible n+1
    mpq_class e0;
    std::string row;
};
// Throws Error(uncovered) outside the rows of the main theorems.
Thresholds thresholds(long d, long g, long e, BoundMode mode);
mpq_class e0_value(long d, long g, BoundMode mode);

// m' = ceil((m+1)/2).
long m_prime(long m);
long s_value(long d, long g, long e, long D);

struct BoundValue {
    std::optional<mpq_class> value;
    std::string status;  // ok | precondition | nonpositive_denominator
    long s_alpha = 0;
    long s_beta = 0;
    int m_case = 0;      // 1: alpha estimate only, 2: beta estimate only, 3: both
    std::optional<mpq_class> M;
};
BoundValue A_quantity(long d, long g, long e, long m, long D);
BoundValue M_quantity(long d, long g, long e, long m, long Da, long Db);
BoundValue A_prime(long d, long g, long e, long m, long Da, long Db);

struct CertifyOptions {
    BoundMode mode = BoundMode::canonical;
    long d = 3;
    long g = 0;
    std::optional<std::pair<long, long>> e_span;  // inclusive; default (e0, e0+100]
    std::pair<long, long> m_span{1, 50};
    std::optional<mpz_class> n_plus_1;            // default: least admissible value per row
    unsigned workers = 1;
};

struct Certificate {
    Json body;
    bool pass = false;
};
// Throws Error(uncovered) for uncovered (d,g), Error(precondition) for spans outside (e0, inf) or empty.
Certificate certify(const CertifyOptions& opt);

struct IdentityEntry {
    std::string group;
    std::string name;
    long d = 0;
    long g = 0;
    mpq_class lhs;
    mpq_class rhs;
    std::string relation;  // = | < | <= | >
    bool holds = false;
};
struct IdentityReport {
    std::vector<IdentityEntry> entries;
    bool all_pass() const;
    Json to_json() const;
};
IdentityReport reproduce_paper_identities(long g_max = 50, long d_max = 10);

}  // namespace jetcircle

#endif
