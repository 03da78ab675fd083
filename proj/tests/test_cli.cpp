/*
   Copyright 2026 The lctspin Authors

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

#include <cstdio>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <string>

#include <json.hpp>

#include "doctest.h"

#ifndef LCTSPIN_CLI
#error "LCTSPIN_CLI must name the CLI binary"
#endif

namespace {

struct Run {
    int code;
    std::string err;
};

std::string scratch(const std::string& name) { return std::string(LCTSPIN_TEST_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path, std::ios::binary) << text; }

Run run(const std::string& args) {
    const std::string err = scratch("cli_stderr.txt");
    const std::string cmd = std::string("\"") + LCTSPIN_CLI + "\" " + args + " > /dev/null 2> \"" + err + "\"";
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(err)};
}

}  // namespace

TEST_CASE("passing suite exits 0") { CHECK(run("verify --suite clifford-1d").code == 0); }

TEST_CASE("failing identity exits 1 and still writes the report") {
    const std::string out = scratch("products_nd.json");
    std::remove(out.c_str());
    CHECK(run("verify --suite products-nd --out \"" + out + "\"").code == 1);
    const auto doc = nlohmann::json::parse(slurp(out));
    CHECK(doc.at("pass") == false);
}

TEST_CASE("input errors exit 2") {
    CHECK(run("verify --suite bogus").code == 2);
    CHECK(run("verify --no-such-flag").code == 2);
    CHECK(run("verify --sig 1").code == 2);
    CHECK(run("verify --n 2 --sig 1,0").code == 2);
    CHECK(run("generate --params /nonexistent/params.json").code == 2);

    const std::string bad = scratch("bad_trace.json");
    write(bad, R"({"signature": {"plus": 1, "minus": 0}, "lambda": [["5"]]})");
    const Run r = run("generate --params \"" + bad + "\"");
    CHECK(r.code == 2);
    CHECK(r.err.find("trace(lambda) != 0") != std::string::npos);
}

TEST_CASE("size limits exit 3") {
    CHECK(run("verify --suite square --n 3").code == 3);
    CHECK(run("verify --suite membership --n 4").code == 3);
    CHECK(run("tables --n 4").code == 3);
}

TEST_CASE("verify output is byte-identical for a fixed seed") {
    const std::string a = scratch("verify_a.json"), b = scratch("verify_b.json");
    run("verify --suite all --n 1 --seed 7 --out \"" + a + "\"");
    run("verify --suite all --n 1 --seed 7 --out \"" + b + "\"");
    CHECK(!slurp(a).empty());
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("generate for zero and rotation parameters") {
    const std::string zero = scratch("zero.json"), out = scratch("zero_bundle.json");
    write(zero, R"({"signature": {"plus": 1, "minus": 0}})");
    CHECK(run("generate --params \"" + zero + "\" --out \"" + out + "\"").code == 0);
    auto doc = nlohmann::json::parse(slurp(out));
    CHECK(doc.at("A") == nlohmann::json::parse(R"([["0","0"],["0","0"]])"));
    CHECK(doc.at("g") == nlohmann::json::parse(R"([["1","0"],["0","1"]])"));

    const std::string rot = scratch("rot.json");
    write(rot, R"({"signature": {"plus": 1, "minus": 0}, "theta": [["1/4"]]})");
    CHECK(run("generate --params \"" + rot + "\" --out \"" + out + "\"").code == 0);
    doc = nlohmann::json::parse(slurp(out));
    CHECK(std::stod(doc.at("g")[0][0].get<std::string>()) == std::cos(0.25));
    CHECK(std::stod(doc.at("g")[1][0].get<std::string>()) == std::sin(0.25));
}

TEST_CASE("conventions emits the full ledger") {
    const std::string out = scratch("conventions.json");
    CHECK(run("conventions --n 2 --out \"" + out + "\"").code == 0);
    const auto doc = nlohmann::json::parse(slurp(out));
    for (const char* key : {"generator_families", "commutator", "zx_readings", "spin", "square"})
        CHECK_MESSAGE(doc.contains(key), key);
    CHECK(doc.at("commutator").at("indexed").at("candidates").size() == 2);
    CHECK(doc.at("spin").at("probe").at("candidates").size() == 8);
}
