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

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
    int status = -1;
    std::string out;
    std::string err;
};

std::string cli_path() {
    const char* p = std::getenv("JETCIRCLE_CLI");
    return p ? p : "./jetcircle";
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Run run(const std::string& args) {
    const auto dir = std::filesystem::temp_directory_path();
    const auto err = dir / "jetcircle_cli_test.err";
    const std::string cmd = cli_path() + " " + args + " 2>" + err.string();
    Run r;
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f);
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
    const int st = pclose(f);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    r.err = slurp(err);
    return r;
}

}  // namespace

TEST_CASE("count on the conic") {
    const auto r = run("count --q 3 --form conic --e 2 --m 0 --no-timestamp");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["raw_count"] == 48);
    CHECK_FALSE(j.contains("timestamp"));
    CHECK(nlohmann::json::parse(run("count --q 3 --form conic --e 2 --m 0").out).contains("timestamp"));
}

TEST_CASE("reports are byte-identical without timestamps") {
    const std::string args = "count --q 5 --form random --n 1 --d 3 --seed 7 --e 1 --m 1 --no-timestamp";
    const auto a = run(args), b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("bounds certificate") {
    const auto r = run("bounds --mode canonical --d 2 --g 1 --n-plus-1 7 --no-timestamp");
    CHECK(r.status == 0);
    CHECK(nlohmann::json::parse(r.out)["verdict"] == "pass");
    CHECK(run("bounds --mode canonical --d 2 --g 1 --n-plus-1 6 --e-max 30 --m-max 5").status == 1);
}

TEST_CASE("circle major identity") {
    const auto r = run("circle --q 3 --form conic --e 2 --m 1 --check major-identity --no-timestamp");
    CHECK(r.status == 0);
    CHECK(nlohmann::json::parse(r.out)["verdict"] == "equal");
}

TEST_CASE("budget errors exit 2 with an estimate") {
    const auto r = run("count --q 7 --form fermat --n 4 --d 3 --e 3 --m 2");
    CHECK(r.status == 2);
    CHECK(r.err.find("budget") != std::string::npos);
    CHECK(r.err.find("--force") != std::string::npos);
}

TEST_CASE("configuration errors exit 2") {
    CHECK(run("count --q 4 --form conic --e 2 --m 0").status == 2);
    CHECK(run("count --q 2 --form conic --e 2 --m 0").status == 2);
    CHECK(run("bounds --mode canonical --d 2 --g 0").status == 2);
    CHECK(run("circle --q 3 --form conic --e 2 --m 1").status == 2);
    CHECK(run("nosuch").status == 2);
    CHECK(run("count --q 3 --form /nonexistent/form.txt --e 1 --m 0").status == 2);
}

TEST_CASE("prime sweeps emit CSV") {
    const auto r = run("count --form conic --e 2 --m 0 --primes 3,5,7");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("prime,raw_count,normalized_num,normalized_den,exponent\n", 0) == 0);
    CHECK(r.out.find("\n3,48,16,27,4\n") != std::string::npos);
    CHECK(r.out.find("\n5,480,96,125,4\n") != std::string::npos);
}

TEST_CASE("config file supplies defaults and flags override") {
    const auto path = std::filesystem::temp_directory_path() / "jetcircle_cli_test.json";
    {
        std::ofstream out(path);
        out << R"({"no-timestamp": true, "count": {"q": 3, "form": "conic", "e": 2, "m": 0}})";
    }
    const auto a = run("count --config " + path.string());
    CHECK(a.status == 0);
    CHECK(nlohmann::json::parse(a.out)["raw_count"] == 48);
    const auto b = run("count --config " + path.string() + " --q 5");
    CHECK(b.status == 0);
    CHECK(nlohmann::json::parse(b.out)["raw_count"] == 480);
    std::filesystem::remove(path);
}

TEST_CASE("output file") {
    const auto path = std::filesystem::temp_directory_path() / "jetcircle_cli_test_out.json";
    CHECK(run("count --q 3 --form conic --e 2 --m 0 --no-timestamp --output " + path.string()).status == 0);
    CHECK(nlohmann::json::parse(slurp(path))["raw_count"] == 48);
    std::filesystem::remove(path);
}

TEST_CASE("smoothness subcommand") {
    CHECK(run("smooth --q 3 --form conic").status == 0);
    const auto path = std::filesystem::temp_directory_path() / "jetcircle_cli_test_form.txt";
    {
        std::ofstream out(path);
        out << "2 0 1\n";
    }
    CHECK(run("smooth --q 3 --n 1 --d 2 --form " + path.string() + " --k-max 1").status == 1);
    std::filesystem::remove(path);
}
