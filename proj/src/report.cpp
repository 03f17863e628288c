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

#include "jetcircle/report.hpp"

namespace jetcircle {

Json integer_json(const mpz_class& v) {
    if (v.fits_slong_p()) return Json(static_cast<long long>(v.get_si()));
    return Json(v.get_str());
}

Json rational_json(const mpq_class& q) { return Json(q.get_num().get_str() + "/" + q.get_den().get_str()); }

Json cyclo_json(const CyclotomicSum& v) {
    Json a = Json::array();
    for (const auto& c : v.counts()) a.push_back(integer_json(c));
    return a;
}

Json divisor_json(const DivisorP1& Z) {
    Json h = Json::array();
    for (auto c : Z.h) h.push_back(c);
    return Json{{"finite_part", h}, {"mult_at_infinity", Z.k_inf}, {"degree", Z.degree()}, {"text", Z.to_string()}};
}

Json dual_json(const DualFunctional& a) {
    Json parts = Json::array();
    for (const auto& p : a.parts) parts.push_back(p);
    return parts;
}

Json count_record_json(const CountRecord& r) {
    Json params{{"p", r.params.p}, {"n", r.params.n}, {"d", r.params.d}, {"e", r.params.e}, {"m", r.params.m},
                {"form", r.params.form_id}};
    return Json{{"kind", r.kind},
                {"params", params},
                {"raw_count", integer_json(r.raw_count)},
                {"normalized", rational_json(r.normalized)},
                {"exponent", r.exponent}};
}

Json report_json(const CheckReport& r) {
    Json j{{"check", r.check}, {"params", r.params}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"verdict", r.verdict}};
    j["tightness"] = r.tightness ? Json(*r.tightness) : Json(nullptr);
    if (!r.details.empty()) j["details"] = r.details;
    return j;
}

}  // namespace jetcircle
