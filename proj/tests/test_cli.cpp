/*
   Copyright 2026 The gop Authors

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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gop/catalog.hpp"
#include "gop/cli/commands.hpp"
#include "gop/cli/parser.hpp"
#include "nlohmann/json.hpp"

using namespace gop;
using gop::cli::parse_operator;
using nlohmann::ordered_json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string w; in >> w;) v.push_back(w);
    return v;
}

ordered_json result_of(const std::vector<std::string>& args) {
    Run r = run(args);
    REQUIRE_MESSAGE(r.code == 0, r.err);
    return ordered_json::parse(r.out)["result"];
}

std::vector<std::string> golden_invocations() {
    std::vector<std::string> v{"catalog list"};
    for (const auto& e : catalog_all()) {
        v.push_back("catalog get " + e.id);
        v.push_back("classify --catalog " + e.id);
        v.push_back("scan --catalog " + e.id + " --primes 2..30");
        v.push_back("galochkin --catalog " + e.id + " --s 8");
    }
    v.push_back("exponents --catalog 2f1 --point inf");
    v.push_back("exponents --catalog f0 --point 4/3");
    v.push_back("pcurv --catalog polylog:2 --prime 5");
    v.push_back("pcurv --catalog exp --prime 7");
    v.push_back("size --catalog polylog:2 --s 12 --P 11");
    v.push_back("radius --catalog polylog:1 --prime 3 --s 12");
    v.push_back("radius --catalog theta2m2 --prime 7 --s 14");
    v.push_back("bombieri --catalog polylog:1 --s 12 --P 11");
    v.push_back("pade --catalog geometric --N 1 --M 1");
    v.push_back("pade --catalog polylog:1 --N 6 --M 3");
    return v;
}

std::string golden_name(const std::string& inv) {
    std::string n;
    for (char c : inv) n += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    return n + ".json";
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("parsing operators") {
        CHECK(parse_operator("(1-z)*D^2 - D") == polylog_operator(1));
        CHECK(parse_operator("theta^2 - 2") == counterexample_theta2_minus_2());
        CHECK(parse_operator("theta*(theta) - z*(theta+1/2)^2") == catalog_get("2f1").op);
        CHECK(parse_operator("D - 1") == DiffOp(Basis::D, {RatFn(-1), RatFn(1)}));
        CHECK(parse_operator("z^-1*D") == DiffOp(Basis::D, {RatFn(0), RatFn(Poly::constant(1), Poly::monomial(1, 1))}));
        CHECK(parse_operator("-(z)") == DiffOp(Basis::D, {RatFn(Poly::monomial(-1, 1))}));
        CHECK(parse_operator("1/2*D") == DiffOp(Basis::D, {RatFn(0), RatFn(BigRat(1, 2))}));
        CHECK(parse_operator("z*D") == change_basis(DiffOp(Basis::Theta, {RatFn(0), RatFn(1)}), Basis::D));
    }

    TEST_CASE("parse errors carry positions") {
        try {
            parse_operator("D +\n  * z");
            FAIL("no error");
        } catch (const cli::ParseError& e) {
            CHECK(e.line() == 2);
            CHECK(e.column() == 3);
        }
        try {
            parse_operator("z D");
            FAIL("no error");
        } catch (const cli::ParseError& e) {
            CHECK(e.line() == 1);
            CHECK(e.column() == 3);
        }
        CHECK_THROWS_AS(parse_operator("D*theta"), cli::MixedBasisError);
        CHECK_THROWS_AS(parse_operator("(D"), cli::ParseError);
        CHECK_THROWS_AS(parse_operator("D^x"), cli::ParseError);
        CHECK_THROWS_AS(parse_operator(""), cli::ParseError);
        CHECK_THROWS_AS(parse_operator("D/2"), cli::ParseError);
        CHECK_THROWS_AS(parse_operator("1/(z-z)*D"), std::exception);
    }

    TEST_CASE("printing round-trips") {
        for (const auto& e : catalog_all()) CHECK_MESSAGE(parse_operator(e.op.to_string()) == e.op, e.id);
    }

    TEST_CASE("exit codes") {
        CHECK(run(split("catalog list")).code == 0);
        CHECK(run(split("frobnicate")).code == 1);
        CHECK(run(split("classify --catalog nope")).code == 1);
        CHECK(run({"classify", "D +* z"}).code == 1);
        CHECK(run(split("scan --catalog exp --primes 9..2")).code == 1);
        CHECK(run(split("pcurv --catalog exp --prime 8")).code == 1);
        Run bad = run(split("radius --catalog 2f1 --prime 2"));
        CHECK(bad.code == 2);
        CHECK_FALSE(bad.err.empty());
        CHECK(run(split("pade --catalog geometric --N 0 --M 3")).code == 2);
    }

    TEST_CASE("command results") {
        ordered_json c = result_of({"classify", "theta^2 - 2"});
        CHECK(c["fuchsian"] == true);
        CHECK(c["all_exponents_rational"] == false);
        CHECK(result_of(split("scan --catalog polylog:2"))["verdict"] == "AllGoodNilpotent");
        ordered_json x = result_of({"exponents", "(1-z)*D^2 - D", "--point", "0"});
        REQUIRE(x["exponents"].size() == 2);
        CHECK(x["exponents"][0]["value"] == "0");
        CHECK(x["exponents"][1]["value"] == "1");
        Run t = run(split("--format text catalog get exp"));
        CHECK(t.code == 0);
        CHECK(t.out.find("D - 1") != std::string::npos);
    }

    TEST_CASE("JSON envelope") {
        Run r = run(split("catalog get polylog:1"));
        ordered_json j = ordered_json::parse(r.out);
        CHECK(j["tool"] == "gop");
        CHECK(j["version"] == cli::kToolVersion);
        CHECK(j["command"] == "catalog get");
        CHECK(j.contains("input"));
        CHECK(j["timing"]["elapsed_ms"].is_number());
    }

    TEST_CASE("golden outputs") {
        const std::filesystem::path dir = std::filesystem::path(GOP_SOURCE_DIR) / "tests" / "golden";
        const bool update = std::getenv("GOP_UPDATE_GOLDEN") != nullptr;
        for (const auto& inv : golden_invocations()) {
            Run r = run(split(inv));
            REQUIRE_MESSAGE(r.code == 0, inv, ": ", r.err);
            ordered_json got = ordered_json::parse(r.out);
            got.erase("timing");
            const auto path = dir / golden_name(inv);
            if (update) {
                std::filesystem::create_directories(dir);
                std::ofstream(path) << got.dump(2) << "\n";
                continue;
            }
            std::ifstream in(path);
            REQUIRE_MESSAGE(in.good(), "missing ", path.string());
            CHECK_MESSAGE(ordered_json::parse(in) == got, inv);
        }
    }
}
