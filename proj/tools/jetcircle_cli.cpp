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

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jetcircle/certifier.hpp"
#include "jetcircle/circle.hpp"
#include "jetcircle/counting.hpp"
#include "jetcircle/geometry.hpp"
#include "jetcircle/parallel.hpp"
#include "jetcircle/report.hpp"

using namespace jetcircle;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct Globals {
    std::string config;
    std::string budget;
    bool force = false;
    unsigned workers = default_workers();
    std::string output;
    bool no_timestamp = false;
    long precision = 256;
};

struct FormArgs {
    unsigned q = 3;
    std::string form = "conic";
    std::size_t n = 2;
    std::size_t d = 2;
    std::uint64_t seed = 1;
};

struct CountArgs {
    FormArgs f;
    std::string kind = "Mm";
    std::size_t e = 1, m = 0;
    std::string primes;
    std::string mode = "fast";
};

struct CircleArgs {
    FormArgs f;
    std::string check;
    std::size_t e = 1, m = 0;
    bool pairs = false;
    std::string alpha, beta;
    std::size_t k = 0, s = 0;
    long k1 = 1, k2 = 0;
    std::size_t max_degree = 2, extra = 100;
    std::size_t slow_slices = 20;
    bool verify = false;
};

struct BoundsArgs {
    std::string action = "certify";
    std::string mode = "canonical";
    long d = 3, g = 0;
    std::optional<long> e_min, e_max;
    long m_min = 1, m_max = 50;
    std::string n_plus_1;
    long g_max = 50, d_max = 10;
    std::string quantity = "A";
    long n = 0, e = 1, m = 1, D = 0, Da = 0, Db = 0;
};

struct SmoothArgs {
    FormArgs f;
    std::optional<std::size_t> k_max;
};

Budget make_budget(const Globals& g) {
    Budget b = g.force ? Budget::forced() : Budget::standard();
    if (!g.budget.empty()) {
        mpz_class c;
        if (c.set_str(g.budget, 10) != 0 || c <= 0) throw Error(ErrorKind::parse, "--budget must be a positive integer");
        b.ceiling = c;
    }
    if (g.force)
        std::cerr << "warning: --force raises the ceiling to " << b.ceiling.get_str()
                  << " operations; runs may take hours of wall-clock time\n";
    return b;
}

std::string timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

class Sink {
   public:
    explicit Sink(const Globals& g) : g_(g) {
        if (!g.output.empty()) {
            file_.open(g.output);
            if (!file_) throw Error(ErrorKind::precondition, "cannot open output file " + g.output);
        }
    }
    std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
    void json(Json j) {
        if (!g_.no_timestamp) j["timestamp"] = timestamp();
        os() << j.dump() << '\n';
    }

   private:
    const Globals& g_;
    std::ofstream file_;
};

std::vector<std::uint32_t> parse_primes(const std::string& s) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            const long v = std::stol(tok);
            if (v < 2 || !is_prime(static_cast<std::uint64_t>(v)))
                throw Error(ErrorKind::precondition, "not a prime: " + tok);
            out.push_back(static_cast<std::uint32_t>(v));
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::parse, "bad prime list entry: " + tok);
        }
    }
    if (out.empty()) throw Error(ErrorKind::parse, "empty prime list");
    return out;
}

SymmetricForm make_form(const PrimeField& K, const FormArgs& a) {
    if (a.form == "conic") return SymmetricForm::conic(K);
    if (a.form == "random") return random_smooth_form(K, a.n, a.d, a.seed);
    return load_form(K, a.form, a.n, a.d);
}

PrimeField field_for(unsigned q, std::size_t d) {
    if (!is_prime(q)) throw Error(ErrorKind::precondition, "--q must be prime");
    if (q <= d) throw Error(ErrorKind::precondition, "--q must exceed d");
    return PrimeField(q);
}

void add_form_options(CLI::App* sub, FormArgs& f) {
    sub->add_option("--q,--p", f.q, "prime field size");
    sub->add_option("--form", f.form, "conic | fermat | random | path to a form file");
    sub->add_option("--n", f.n, "projective dimension");
    sub->add_option("--d", f.d, "degree");
    sub->add_option("--seed", f.seed, "seed for random forms and samples");
}

// Conic fixes (n, d) = (2, 2).
void normalize_form_args(FormArgs& f) {
    if (f.form == "conic") {
        f.n = 2;
        f.d = 2;
    }
}

int run_count(CountArgs& a, const Globals& g) {
    normalize_form_args(a.f);
    const Budget budget = make_budget(g);
    const CountMode mode = a.mode == "exhaustive" ? CountMode::exhaustive : CountMode::fast;
    if (a.mode != "fast" && a.mode != "exhaustive") throw Error(ErrorKind::parse, "--mode must be fast or exhaustive");
    auto one = [&](unsigned q) {
        const PrimeField K = field_for(q, a.f.d);
        const SymmetricForm F = make_form(K, a.f);
        if (a.kind == "M1m") return count_M1m(F, a.e, a.m, budget, mode, g.workers);
        return count_Mm(F, a.e, a.m, budget, mode, g.workers);
    };
    if (a.kind != "Mm" && a.kind != "M1m" && a.kind != "lw-trend")
        throw Error(ErrorKind::parse, "--kind must be Mm, M1m or lw-trend");
    Sink out(g);
    if (a.primes.empty()) {
        if (a.kind == "lw-trend") throw Error(ErrorKind::parse, "lw-trend needs --primes");
        Json j{{"tool", "jetcircle"}, {"version", kToolVersion}};
        j.update(count_record_json(one(a.f.q)));
        out.json(j);
        return kExitPass;
    }
    out.os() << "prime,raw_count,normalized_num,normalized_den,exponent\n";
    for (auto q : parse_primes(a.primes)) {
        const CountRecord r = one(q);
        out.os() << q << ',' << r.raw_count.get_str() << ',' << r.normalized.get_num().get_str() << ','
                 << r.normalized.get_den().get_str() << ',' << r.exponent << '\n';
    }
    return kExitPass;
}

DualFunctional parse_dual(const std::string& text, std::size_t r, std::size_t m, const std::string& flag) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::parse, flag + ": " + e.what());
    }
    if (!j.is_array() || j.size() != m + 1)
        throw Error(ErrorKind::parse, flag + " must be an array of m+1 coefficient arrays");
    DualFunctional a(r, m);
    for (std::size_t k = 0; k <= m; ++k) {
        if (!j[k].is_array() || j[k].size() != r + 1)
            throw Error(ErrorKind::parse, flag + " parts must have de+1 coefficients");
        for (std::size_t i = 0; i <= r; ++i) {
            if (!j[k][i].is_number_integer()) throw Error(ErrorKind::parse, flag + " coefficients must be integers");
            a.parts[k][i] = static_cast<std::uint32_t>(j[k][i].get<long long>());
        }
    }
    return a;
}

Json with_header(const Json& body) {
    Json j{{"tool", "jetcircle"}, {"version", kToolVersion}};
    j.update(body);
    return j;
}

int run_circle(CircleArgs& a, const Globals& g) {
    normalize_form_args(a.f);
    const Budget budget = make_budget(g);
    const PrimeField K = field_for(a.f.q, a.f.d);
    const SymmetricForm F = make_form(K, a.f);
    const std::size_t de = F.d() * a.e;
    Sink out(g);
    auto emit = [&](const CheckReport& r) {
        out.json(with_header(report_json(r)));
        if (r.verdict == "undecided") std::cerr << "undecided at precision cap " << g.precision << " bits\n";
        return r.passed() ? kExitPass : kExitFail;
    };
    auto need_alpha = [&](std::size_t m) {
        if (a.alpha.empty()) throw Error(ErrorKind::parse, "--check " + a.check + " needs --alpha");
        return parse_dual(a.alpha, de, m, "--alpha");
    };
    if (a.check == "orthogonality") return emit(check_orthogonality(F, a.e, a.m, a.pairs, budget));
    if (a.check == "major-identity") return emit(check_major_identity(F, a.e, a.m, a.pairs, budget));
    if (a.check == "t-vanishing") return emit(check_t_vanishing(F, a.e, a.slow_slices, a.f.seed, budget));
    if (a.check == "shrink") return emit(check_shrink(F, a.e, need_alpha(0), a.k, a.s, budget));
    if (a.check == "n-counts") {
        const DualFunctional al = need_alpha(0);
        const mpz_class fast = N_count(F, a.e, al, a.k1, a.k2, a.s, budget, NMode::fast);
        CheckReport r;
        r.check = "n_counts";
        r.params = Json{{"p", K.p()}, {"n", F.n()}, {"d", F.d()}, {"e", a.e}, {"form", F.id()},
                        {"alpha", dual_json(al)}, {"k1", a.k1}, {"k2", a.k2}, {"s", a.s}};
        r.lhs = integer_json(fast);
        if (a.verify) {
            const mpz_class def = N_count(F, a.e, al, a.k1, a.k2, a.s, budget, NMode::definition);
            r.rhs = integer_json(def);
            r.verdict = fast == def ? "equal" : "violated";
        } else {
            r.rhs = nullptr;
            r.verdict = "holds";
        }
        return emit(r);
    }
    if (a.check == "weyl") {
        if (!a.alpha.empty()) {
            std::optional<DualFunctional> b;
            if (!a.beta.empty()) b = parse_dual(a.beta, de, a.m, "--beta");
            return emit(check_weyl(F, a.e, a.m, parse_dual(a.alpha, de, a.m, "--alpha"), b, budget, g.precision));
        }
        WeylChecker W(F, a.e, a.m, budget, g.precision);
        const auto sample = weyl_sample(K, de, a.m, a.max_degree, a.extra, a.f.seed);
        std::size_t holds = 0, fails = 0, undecided = 0;
        Json bad = Json::array();
        for (const auto& al : sample) {
            const CheckReport r = W.check(al);
            if (r.verdict == "holds") {
                ++holds;
            } else {
                (r.verdict == "fails" ? fails : undecided)++;
                if (bad.size() < 20) bad.push_back(report_json(r));
            }
        }
        CheckReport r;
        r.check = "weyl_sample";
        r.params = Json{{"p", K.p()}, {"n", F.n()}, {"d", F.d()}, {"e", a.e}, {"m", a.m}, {"form", F.id()},
                        {"max_degree", a.max_degree}, {"extra", a.extra}, {"seed", a.f.seed},
                        {"precision_cap", g.precision}};
        r.lhs = sample.size();
        r.rhs = holds;
        r.verdict = fails ? "fails" : undecided ? "undecided" : "holds";
        r.details = Json{{"holds", holds}, {"fails", fails}, {"undecided", undecided}, {"non_holding", bad}};
        return emit(r);
    }
    throw Error(ErrorKind::parse,
                "--check must be orthogonality, major-identity, weyl, shrink, t-vanishing or n-counts");
}

int run_bounds(BoundsArgs& a, const Globals& g) {
    Sink out(g);
    if (a.action == "paper-identities") {
        const IdentityReport rep = reproduce_paper_identities(a.g_max, a.d_max);
        Json j = with_header(rep.to_json());
        out.json(j);
        return rep.all_pass() ? kExitPass : kExitFail;
    }
    const BoundMode mode = parse_bound_mode(a.mode);
    if (a.action == "certify") {
        CertifyOptions opt;
        opt.mode = mode;
        opt.d = a.d;
        opt.g = a.g;
        if (a.e_min || a.e_max) {
            const long e0 = floor_q(e0_value(a.d, a.g, mode)).get_si();
            opt.e_span = std::make_pair(a.e_min.value_or(e0 + 1), a.e_max.value_or(e0 + 100));
        }
        opt.m_span = {a.m_min, a.m_max};
        if (!a.n_plus_1.empty()) {
            mpz_class v;
            if (v.set_str(a.n_plus_1, 10) != 0) throw Error(ErrorKind::parse, "--n-plus-1 must be an integer");
            opt.n_plus_1 = v;
        }
        opt.workers = g.workers;
        const Certificate c = certify(opt);
        out.json(c.body);
        return c.pass ? kExitPass : kExitFail;
    }
    if (a.action == "eval") {
        Json j{{"tool", "jetcircle"}, {"version", kToolVersion}, {"kind", "bound_eval"}, {"quantity", a.quantity},
               {"params", {{"mode", to_string(mode)}, {"d", a.d}, {"g", a.g}, {"e", a.e}, {"m", a.m}}}};
        auto put_bound = [&](const BoundValue& v) {
            j["status"] = v.status;
            j["value"] = v.value ? rational_json(*v.value) : Json(nullptr);
            j["s_alpha"] = v.s_alpha;
            j["s_beta"] = v.s_beta;
            if (v.m_case) j["m_case"] = v.m_case;
            if (v.M) j["M"] = rational_json(*v.M);
        };
        if (a.quantity == "s") {
            j["params"]["D"] = a.D;
            j["value"] = s_value(a.d, a.g, a.e, a.D);
        } else if (a.quantity == "A") {
            j["params"]["D"] = a.D;
            put_bound(A_quantity(a.d, a.g, a.e, a.m, a.D));
        } else if (a.quantity == "M" || a.quantity == "A-prime") {
            j["params"]["D_alpha"] = a.Da;
            j["params"]["D_beta"] = a.Db;
            put_bound(a.quantity == "M" ? M_quantity(a.d, a.g, a.e, a.m, a.Da, a.Db)
                                        : A_prime(a.d, a.g, a.e, a.m, a.Da, a.Db));
        } else if (a.quantity == "thresholds") {
            const Thresholds t = thresholds(a.d, a.g, a.e, mode);
            j["threshold"] = rational_json(t.threshold);
            j["n_plus_1"] = integer_json(t.n_plus_1);
            j["e0"] = rational_json(t.e0);
            j["row"] = t.row;
        } else if (a.quantity == "mu") {
            j["params"]["n"] = a.n;
            const MuDims md = mu_dims(a.n, a.d, a.e, a.g);
            j["mu"] = integer_json(md.mu);
            j["mu_bar"] = integer_json(md.mu_bar);
        } else {
            throw Error(ErrorKind::parse, "--quantity must be s, A, M, A-prime, thresholds or mu");
        }
        out.json(j);
        return kExitPass;
    }
    throw Error(ErrorKind::parse, "--action must be certify, paper-identities or eval");
}

int run_smooth(SmoothArgs& a, const Globals& g) {
    normalize_form_args(a.f);
    const Budget budget = make_budget(g);
    const PrimeField K = field_for(a.f.q, a.f.d);
    const SymmetricForm F = make_form(K, a.f);
    const std::size_t kmax = a.k_max.value_or(default_smoothness_kmax(F, budget));
    const SmoothnessResult r = smoothness_check(F, kmax, budget);
    Json j{{"tool", "jetcircle"},
           {"version", kToolVersion},
           {"kind", "smoothness"},
           {"params", {{"p", K.p()}, {"n", F.n()}, {"d", F.d()}, {"form", F.id()}, {"k_max", kmax}}},
           {"verified_up_to", r.verified_up_to},
           {"cap", r.cap},
           {"certified", r.certified}};
    if (r.witness_degree) {
        j["verdict"] = "singular";
        j["witness_degree"] = *r.witness_degree;
        j["witness"] = r.witness;
        j["modulus"] = r.modulus;
    } else {
        j["verdict"] = r.certified ? "smooth" : "no_singular_point_up_to_k_max";
    }
    Sink(g).json(j);
    return r.witness_degree ? kExitFail : kExitPass;
}

// Turns config JSON defaults into argument tokens placed ahead of the user's own, so that
// explicit flags, parsed later, win under the take-last policy.
std::vector<std::string> config_tokens(const std::string& path, CLI::App& app, const CLI::App* sub) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::parse, "cannot read config file " + path);
    Json cfg;
    try {
        cfg = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::parse, std::string("config: ") + e.what());
    }
    if (!cfg.is_object()) throw Error(ErrorKind::parse, "config must be a JSON object");
    std::vector<std::string> toks;
    auto add = [&](const std::string& key, const Json& v) {
        if (key == "config") return;
        const std::string flag = "--" + key;
        const bool known = app.get_option_no_throw(flag) || (sub && sub->get_option_no_throw(flag));
        if (!known) return;
        if (v.is_boolean()) {
            if (v.get<bool>()) toks.push_back(flag);
        } else if (v.is_array()) {
            std::string joined;
            for (const auto& x : v) joined += (joined.empty() ? "" : ",") + (x.is_string() ? x.get<std::string>() : x.dump());
            toks.insert(toks.end(), {flag, joined});
        } else if (!v.is_null()) {
            toks.insert(toks.end(), {flag, v.is_string() ? v.get<std::string>() : v.dump()});
        }
    };
    for (const auto& [k, v] : cfg.items())
        if (!v.is_object()) add(k, v);
    if (sub && cfg.contains(sub->get_name()) && cfg[sub->get_name()].is_object())
        for (const auto& [k, v] : cfg[sub->get_name()].items()) add(k, v);
    return toks;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jet-scheme point counts, exponential-sum checks and bound certificates over F_p[t]", "jetcircle"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kToolVersion);

    Globals g;
    app.add_option("--config", g.config, "JSON file with default option values");
    app.add_option("--budget", g.budget, "ceiling on enumerated cardinalities (default 1000000000)");
    app.add_flag("--force", g.force, "raise the ceiling to 100000000000");
    app.add_option("--workers", g.workers, "worker threads (default JETCIRCLE_WORKERS or 1)");
    app.add_option("--output", g.output, "write the report here instead of stdout");
    app.add_flag("--no-timestamp", g.no_timestamp, "omit the timestamp field");
    app.add_option("--precision", g.precision, "interval precision cap in bits");

    CountArgs ca;
    auto* count = app.add_subcommand("count", "count points of M_m or M_{1,m}, or a prime sweep");
    add_form_options(count, ca.f);
    count->add_option("--kind", ca.kind, "Mm | M1m | lw-trend");
    count->add_option("--e", ca.e, "section degree");
    count->add_option("--m", ca.m, "jet order");
    count->add_option("--primes", ca.primes, "comma-separated primes; emits CSV");
    count->add_option("--mode", ca.mode, "fast | exhaustive");

    CircleArgs cc;
    auto* circle = app.add_subcommand("circle", "exponential-sum identities and inequalities");
    add_form_options(circle, cc.f);
    circle->add_option("--check", cc.check, "orthogonality | major-identity | weyl | shrink | t-vanishing | n-counts")
        ->required();
    circle->add_option("--e", cc.e, "section degree");
    circle->add_option("--m", cc.m, "jet order");
    circle->add_flag("--pairs", cc.pairs, "use the pair sums S(alpha, beta)");
    circle->add_option("--alpha", cc.alpha, "functional as a JSON array of parts");
    circle->add_option("--beta", cc.beta, "second functional for pair checks");
    circle->add_option("--k", cc.k, "multilinear jet order");
    circle->add_option("--s", cc.s, "shrink amount");
    circle->add_option("--k1", cc.k1, "first N-count order");
    circle->add_option("--k2", cc.k2, "second N-count order");
    circle->add_option("--max-degree", cc.max_degree, "weyl sample: exhaustive up to this degree of alpha_0");
    circle->add_option("--extra", cc.extra, "weyl sample: number of random functionals");
    circle->add_option("--slow-slices", cc.slow_slices, "t-vanishing: y's checked by direct enumeration");
    circle->add_flag("--verify", cc.verify, "n-counts: also evaluate from the definition");

    BoundsArgs ba;
    auto* bounds = app.add_subcommand("bounds", "exact bound certificates");
    bounds->add_option("--action", ba.action, "certify | paper-identities | eval");
    bounds->add_option("--mode", ba.mode, "canonical | terminal");
    bounds->add_option("--d", ba.d, "degree");
    bounds->add_option("--g", ba.g, "genus");
    bounds->add_option("--e-min", ba.e_min, "first e of the sweep");
    bounds->add_option("--e-max", ba.e_max, "last e of the sweep");
    bounds->add_option("--m-min", ba.m_min, "first m of the sweep");
    bounds->add_option("--m-max", ba.m_max, "last m of the sweep");
    bounds->add_option("--n-plus-1", ba.n_plus_1, "n+1 to certify against");
    bounds->add_option("--g-max", ba.g_max, "identities: largest genus");
    bounds->add_option("--d-max", ba.d_max, "identities: largest degree");
    bounds->add_option("--quantity", ba.quantity, "eval: s | A | M | A-prime | thresholds | mu");
    bounds->add_option("--n", ba.n, "eval: n for mu");
    bounds->add_option("--e", ba.e, "eval: e");
    bounds->add_option("--m", ba.m, "eval: m");
    bounds->add_option("--D", ba.D, "eval: divisor degree");
    bounds->add_option("--D-alpha", ba.Da, "eval: divisor degree of alpha");
    bounds->add_option("--D-beta", ba.Db, "eval: divisor degree of beta");

    SmoothArgs sa;
    auto* smooth = app.add_subcommand("smooth", "search for singular points over extensions");
    add_form_options(smooth, sa.f);
    smooth->add_option("--k-max", sa.k_max, "largest extension degree searched");

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        std::string cfg;
        std::size_t sub_pos = args.size();
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (args[i] == "--config" && i + 1 < args.size()) cfg = args[i + 1];
            if (args[i].rfind("--config=", 0) == 0) cfg = args[i].substr(9);
            if (sub_pos == args.size() && app.get_subcommand_no_throw(args[i])) sub_pos = i;
        }
        if (!cfg.empty()) {
            const CLI::App* sub = sub_pos < args.size() ? app.get_subcommand_no_throw(args[sub_pos]) : nullptr;
            auto toks = config_tokens(cfg, app, sub);
            const std::size_t at = sub_pos < args.size() ? sub_pos + 1 : 0;
            args.insert(args.begin() + static_cast<long>(at), toks.begin(), toks.end());
        }
    } catch (const Error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitConfig;
    }

    try {
        if (*count) return run_count(ca, g);
        if (*circle) return run_circle(cc, g);
        if (*bounds) return run_bounds(ba, g);
        if (*smooth) return run_smooth(sa, g);
    } catch (const BudgetExceeded& e) {
        std::cerr << e.what() << "; pass --force or --budget to raise the ceiling\n";
        return kExitConfig;
    } catch (const Error& e) {
        switch (e.kind()) {
            case ErrorKind::counterexample:
            case ErrorKind::identity:
            case ErrorKind::mismatch:
                std::cerr << "check failed: " << e.what() << '\n';
                return kExitFail;
            case ErrorKind::uncovered:
                std::cerr << "uncovered parameters: " << e.what() << '\n';
                return kExitConfig;
            case ErrorKind::parse:
                std::cerr << "parse error: " << e.what() << '\n';
                return kExitConfig;
            default:
                std::cerr << "precondition failed: " << e.what() << '\n';
                return kExitConfig;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitConfig;
}
