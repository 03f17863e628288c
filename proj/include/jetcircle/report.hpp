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

#ifndef JETCIRCLE_REPORT_HPP
#define JETCIRCLE_REPORT_HPP

#include <optional>
#include <string>

#include "json.hpp"
#include "jetcircle/arith.hpp"
#include "jetcircle/counting.hpp"
#include "jetcircle/sections.hpp"

namespace jetcircle {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

// Integers that fit in 64 bits are emitted as numbers, larger ones as decimal strings.
Json integer_json(const mpz_class& v);
Json rational_json(const mpq_class& q);  // "num/den"
Json cyclo_json(const CyclotomicSum& v);  // coefficient array
Json divisor_json(const DivisorP1& Z);
Json dual_json(const DualFunctional& a);
Json count_record_json(const CountRecord& r);

struct CheckReport {
    std::string check;
    Json params = Json::object();
    Json lhs;
    Json rhs;
    std::string verdict;  // holds | fails | undecided | equal | violated
    std::optional<double> tightness;
    Json details = Json::object();

    bool passed() const { return verdict == "holds" || verdict == "equal"; }
};

Json report_json(const CheckReport& r);

}  // namespace jetcircle

#endif
