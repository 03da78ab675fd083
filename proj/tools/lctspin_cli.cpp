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

// Command-line front end over the lctspin C API.
//
// Exit codes: 0 pass, 1 identity failure or unresolved convention,
// 2 input error, 3 size limit.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lctspin/lctspin.h"

namespace {

enum Exit { kPass = 0, kFail = 1, kInput = 2, kResource = 3 };

struct Options {
    std::string params;
    std::optional<int> n;
    std::string sig;
    std::string suite = "all";
    std::uint64_t seed = 1;
    double tol = 0;
    int draws = 0;
    std::string out;
    std::string vector;
    bool unsafe_size = false;
};

class CliError : public std::runtime_error {
   public:
    CliError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
    int code() const { return code_; }

   private:
    int code_;
};

int exit_for(lcts_status s) {
    switch (s) {
        case LCTS_OK: return kPass;
        case LCTS_ERR_CONSTRAINT:
        case LCTS_ERR_DIMENSION:
        case LCTS_ERR_PARSE:
        case LCTS_ERR_UNKNOWN_SUITE:
        case LCTS_ERR_INVALID_ARGUMENT: return kInput;
        case LCTS_ERR_SIZE_LIMIT: return kResource;
        default: return kFail;
    }
}

void check(lcts_status s) {
    if (s != LCTS_OK) throw CliError(exit_for(s), std::string(lcts_status_name(s)) + ": " + lcts_last_error());
}

// Owns a string returned by the library.
struct Owned {
    char* p = nullptr;
    ~Owned() { lcts_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError(kInput, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const Options& o, const std::string& json) {
    if (o.out.empty()) {
        std::cout << json << "\n";
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw CliError(kInput, "cannot write " + o.out);
    f << json << "\n";
}

lcts_run_config config_of(const Options& o) {
    lcts_run_config c = lcts_default_config();
    if (!o.sig.empty()) {
        int p = -1, m = -1;
        char tail = 0;
        if (std::sscanf(o.sig.c_str(), "%d,%d%c", &p, &m, &tail) != 2 || p < 0 || m < 0 || p + m < 1)
            throw CliError(kInput, "--sig expects P,M with P, M >= 0 and P + M >= 1, got '" + o.sig + "'");
        if (o.n && *o.n != p + m)
            throw CliError(kInput, "--n " + std::to_string(*o.n) + " disagrees with --sig " + o.sig);
        c.n_plus = p;
        c.n_minus = m;
    } else if (o.n) {
        if (*o.n < 1) throw CliError(kInput, "--n must be at least 1");
        c.n_plus = *o.n;
        c.n_minus = 0;
    }
    c.seed = o.seed;
    c.tol = o.tol;
    c.unsafe_size = o.unsafe_size ? 1 : 0;
    c.draws = o.draws;
    return c;
}

struct Params {
    lcts_params* p = nullptr;
    ~Params() { lcts_params_free(p); }
};

struct Bundle {
    lcts_bundle* b = nullptr;
    ~Bundle() { lcts_bundle_free(b); }
};

int cmd_generate(const Options& o) {
    if (o.params.empty()) throw CliError(kInput, "generate needs --params FILE");
    Params params;
    check(lcts_params_parse(read_file(o.params).c_str(), &params.p));
    Bundle bundle;
    check(lcts_bundle_create(params.p, &bundle.b));
    Owned json;
    check(lcts_bundle_to_json(bundle.b, &json.p));
    emit(o, json.str());
    return kPass;
}

int cmd_spinor(const Options& o) {
    if (o.params.empty()) throw CliError(kInput, "spinor needs --params FILE");
    Params params;
    check(lcts_params_parse(read_file(o.params).c_str(), &params.p));
    Bundle bundle;
    check(lcts_bundle_create(params.p, &bundle.b));
    const std::size_t dim = lcts_bundle_spinor_dim(bundle.b);

    std::vector<double> v;
    std::stringstream ss(o.vector);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw CliError(kInput, "--vector entry '" + item + "' is not a number");
        }
        v.push_back(0.0);
    }
    if (v.size() != 2 * dim)
        throw CliError(kInput, "--vector needs " + std::to_string(dim) + " components, got " + std::to_string(v.size() / 2));
    std::vector<double> out(2 * dim);
    check(lcts_bundle_apply_spin(bundle.b, v.data(), out.data(), dim));

    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    char buf[40];
    for (std::size_t k = 0; k < dim; ++k) {
        nlohmann::ordered_json pair = nlohmann::ordered_json::array();
        for (int part = 0; part < 2; ++part) {
            std::snprintf(buf, sizeof buf, "%.17g", out[2 * k + part]);
            pair.push_back(buf);
        }
        j.push_back(std::move(pair));
    }
    emit(o, nlohmann::ordered_json{{"S_v", std::move(j)}}.dump(2));
    return kPass;
}

void summarize(const std::string& json) {
    const auto doc = nlohmann::ordered_json::parse(json);
    for (const auto& suite : doc.at("suites")) {
        std::size_t passed = 0;
        for (const auto& line : suite.at("lines")) passed += line.at("pass").get<bool>() ? 1 : 0;
        std::cerr << suite.at("suite").get<std::string>() << ": " << passed << "/" << suite.at("lines").size()
                  << (passed == suite.at("lines").size() ? " pass" : " FAIL") << "\n";
    }
}

int cmd_verify(const Options& o) {
    const lcts_run_config c = config_of(o);
    Owned json;
    int pass = 0;
    check(lcts_verify(&c, o.suite.c_str(), &json.p, &pass));
    emit(o, json.str());
    summarize(json.str());
    return pass ? kPass : kFail;
}

int cmd_conventions(const Options& o) {
    const lcts_run_config c = config_of(o);
    Owned json;
    check(lcts_conventions(&c, &json.p));
    emit(o, json.str());
    return kPass;
}

int cmd_tables(const Options& o) {
    const lcts_run_config c = config_of(o);
    Owned json;
    check(lcts_tables(&c, &json.p));
    emit(o, json.str());
    return kPass;
}

int cmd_invariant(const Options& o) {
    const lcts_run_config c = config_of(o);
    Owned json;
    int pass = 0;
    check(lcts_invariant(&c, &json.p, &pass));
    emit(o, json.str());
    return pass ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spin representation of linear canonical transformations: generation and identity checks"};
    app.require_subcommand(1);
    Options o;

    auto add_run = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "number of modes N (signature (N,0) unless --sig)");
        sub->add_option("--sig", o.sig, "metric signature P,M");
        sub->add_option("--seed", o.seed, "seed for randomized checks");
        sub->add_option("--tol", o.tol, "override every numeric tolerance");
        sub->add_option("--draws", o.draws, "random parameter draws per randomized suite");
        sub->add_flag("--unsafe-size", o.unsafe_size, "lift the default caps on N");
    };

    CLI::App* generate = app.add_subcommand("generate", "emit A, g, X, O, theta, S for a parameter file");
    generate->add_option("--params", o.params, "parameter JSON file")->required();

    CLI::App* verify = app.add_subcommand("verify", "run identity suites and emit the report");
    add_run(verify);
    verify->add_option("--suite", o.suite, "suite names, comma separated, or all");

    CLI::App* conventions = app.add_subcommand("conventions", "resolve every sign convention and emit the ledger");
    add_run(conventions);

    CLI::App* tables = app.add_subcommand("tables", "dump the evaluated bivector commutator tables and generators");
    add_run(tables);

    CLI::App* invariant = app.add_subcommand("invariant", "quartic invariant report (N = 1) or exploratory search (N = 2)");
    add_run(invariant);

    CLI::App* spinor = app.add_subcommand("spinor", "apply the spin element S of a parameter file to a vector");
    spinor->add_option("--params", o.params, "parameter JSON file")->required();
    spinor->add_option("--vector", o.vector, "real components, comma separated")->required();

    for (CLI::App* sub : {generate, verify, conventions, tables, invariant, spinor})
        sub->add_option("--out", o.out, "write JSON here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInput;
    }

    try {
        if (*generate) return cmd_generate(o);
        if (*verify) return cmd_verify(o);
        if (*conventions) return cmd_conventions(o);
        if (*tables) return cmd_tables(o);
        if (*invariant) return cmd_invariant(o);
        return cmd_spinor(o);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
}
