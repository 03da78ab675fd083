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

// Acceptance gate: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "core/clifford.hpp"
#include "core/invariant_lab.hpp"
#include "core/numeric.hpp"
#include "core/phase_ops.hpp"
#include "core/spin_rep.hpp"

#ifndef LCTSPIN_CLI
#error "LCTSPIN_CLI must name the CLI binary"
#endif

using namespace lctspin;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void require(bool ok, const std::string& what) {
        if (!ok) pass = false;
        if (!detail.empty()) detail += "; ";
        detail += (ok ? "" : "FAILED ") + what;
    }
};

const lct::Signature kOne(1, 0), kTwo(2, 0), kMixed(1, 1);

std::string count(const VerificationReport& r) {
    return std::to_string(r.passed()) + "/" + std::to_string(r.lines.size());
}

std::string short_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string sig_name(const lct::Signature& s) {
    return "(" + std::to_string(s.plus()) + "," + std::to_string(s.minus()) + ")";
}

// Distinct stated templates among failing table lines.
std::string failing_templates(const VerificationReport& r) {
    std::set<std::string> stated;
    for (const auto& line : r.lines)
        if (!line.pass && line.witness) {
            const std::string& w = *line.witness;
            const auto from = w.find("stated: ");
            if (from == std::string::npos) continue;
            stated.insert(w.substr(from + 8, w.find(';', from) - from - 8));
        }
    std::string out;
    for (const auto& s : stated) out += (out.empty() ? "" : " | ") + s;
    return out;
}

std::string failing_shapes(const VerificationReport& r) {
    std::set<std::string> shapes;
    for (const auto& line : r.lines)
        if (!line.pass) {
            const auto cut = line.id.find('[', line.id.find(']') == std::string::npos ? 0 : 1);
            shapes.insert(line.id.substr(0, cut == std::string::npos ? line.id.size() : line.id.find(']') + 1));
        }
    std::string out;
    for (const auto& s : shapes) out += (out.empty() ? "" : " ") + s;
    return out;
}

lct::LctParams draw(const lct::Signature& sig, std::mt19937_64& rng, bool need_lambda = false) {
    for (;;) {
        lct::LctParams p = lct::random_params(sig, rng);
        if (!need_lambda || !p.lambda().is_zero()) return p;
    }
}

Outcome ac1() {
    Outcome o;
    for (auto [p, q] : {std::pair{2, 0}, {2, 2}, {4, 4}, {6, 6}}) {
        const Rational d = clifford::relation_defect(clifford::build_generators(p, q));
        o.require(sgn(d) == 0, "C(" + std::to_string(p) + "," + std::to_string(q) + ") defect " + to_string(d));
    }
    return o;
}

Outcome ac2() {
    Outcome o;
    const VerificationReport one = clifford::comm_table_1d(clifford::label_lct_generators(kOne));
    o.require(one.all_pass(), "unindexed table " + count(one));
    for (const auto& sig : {kOne, kTwo, kMixed}) {
        const VerificationReport r = clifford::comm_table_check(clifford::label_lct_generators(sig));
        o.require(r.all_pass(), "indexed table " + sig_name(sig) + " " + count(r) +
                                    (r.all_pass() ? "" : " [failing: " + failing_templates(r) + "]"));
    }
    return o;
}

Outcome ac3() {
    Outcome o;
    std::mt19937_64 rng(3);
    Rational worst_alg = 0, worst_ortho = 0;
    double worst_sp = 0;
    const std::vector<lct::Signature> sigs = {kOne, lct::Signature(0, 1), kTwo, kMixed};
    for (int k = 0; k < 200; ++k) {
        const lct::Signature& sig = sigs[static_cast<std::size_t>(k) % sigs.size()];
        const lct::LctParams p = draw(sig, rng);
        worst_alg = std::max(worst_alg, lct::symplectic_algebra_defect(lct::sl_generator(p), sig));
        worst_ortho = std::max(worst_ortho, lct::ortho_defect(lct::ortho_generator(p)));
        worst_sp = std::max(worst_sp, lct::symplectic_defect(lct::group_element(p).matrix(), sig));
    }
    o.require(sgn(worst_alg) == 0, "A^T K + K A max " + to_string(worst_alg));
    o.require(sgn(worst_ortho) == 0, "X G + G X^T max " + to_string(worst_ortho));
    o.require(worst_sp < 1e-10, "symplectic defect max " + format_double(worst_sp) + " < 1e-10");
    return o;
}

Outcome ac4() {
    Outcome o;
    int passing = 0;
    std::string winner;
    for (const auto& c : phase::one_mode_candidates())
        if (phase::product_table_1d(c).all_pass()) {
            ++passing;
            winner = c->name();
        }
    o.require(passing == 1, std::to_string(passing) + " one-mode convention(s) pass all 7 lines (" + winner + ")");
    for (const auto& sig : {kOne, kTwo, kMixed}) {
        const VerificationReport r = phase::product_table_nd(sig, weyl::convention_plus_i_eta(sig));
        o.require(r.all_pass(), "indexed products " + sig_name(sig) + " " + count(r) +
                                    (r.all_pass() ? "" : " [failing: " + failing_shapes(r) + "]"));
    }
    return o;
}

Outcome ac5() {
    Outcome o;
    std::mt19937_64 rng(5);
    for (const auto& [sig, n] : {std::pair{kOne, 100}, {kTwo, 50}, {kMixed, 50}}) {
        const auto conv = weyl::convention_plus_i_eta(sig);
        int ok = 0;
        for (int k = 0; k < n; ++k) ok += phase::infinitesimal_consistency(draw(sig, rng), conv).all_pass() ? 1 : 0;
        o.require(ok == n, sig_name(sig) + " " + std::to_string(ok) + "/" + std::to_string(n));
    }
    return o;
}

Outcome ac6() {
    Outcome o;
    std::mt19937_64 rng(6);
    for (const auto& sig : {kOne, kTwo, kMixed}) {
        const spin::ProbeOutcome probe = spin::convention_probe(sig);
        const spin::SpinConvention& conv = probe.convention;
        const clifford::LctGenerators lg = clifford::label_lct_generators(sig);
        const bool wide = sig.dimension() > 1;
        const int first_draws = sig == kOne ? 34 : 33;
        Rational worst = 0;
        for (int k = 0; k < first_draws; ++k)
            worst = std::max(worst, spin::first_order_cover_defect(draw(sig, rng, wide), lg, conv));
        o.require(sgn(worst) == 0, sig_name(sig) + " probe " + conv.label() + ", first-order max " + to_string(worst) +
                                       " over " + std::to_string(first_draws));

        const int cover_draws = sig == kOne ? 25 : (sig == kTwo ? 13 : 12);
        const double tol = wide ? 1e-7 : 1e-8;
        double cover = 0;
        for (int k = 0; k < cover_draws; ++k)
            cover = std::max(cover, spin::rho(draw(sig, rng, wide), lg, conv).double_cover_defect);
        o.require(cover < tol, "double cover max " + format_double(cover) + " < " + short_double(tol));
        const double slope = spin::scaling_slope(draw(sig, rng, wide), lg, conv, {0.1, 0.05, 0.025, 0.0125});
        o.require(slope >= 1.9, "slope " + format_double(slope));
    }
    return o;
}

Outcome ac7() {
    Outcome o;
    const VerificationReport sq = invariant::square_decomposition_1d(phase::determine_one_mode_convention());
    o.require(sq.all_pass(), "one-mode square " + count(sq));
    const invariant::UProductTable t = invariant::u_product_table(clifford::label_lct_generators(kOne));
    std::size_t computed = 0;
    for (const auto& row : t.forms)
        for (const auto& f : row) computed += f.empty() ? 0 : 1;
    o.require(computed == 16, std::to_string(computed) + " U products computed");
    o.require(t.stated.passed() >= 14, "stated U relations matching " + count(t.stated) + " (14 non-duplicated)");
    return o;
}

Outcome ac8() {
    Outcome o;
    const spin::SpinConvention sc = spin::convention_probe(kOne).convention;
    const VerificationReport r = invariant::invariant_commutator(phase::determine_one_mode_convention(), sc, 8, 10);
    o.require(r.all_pass(), "invariant lines " + count(r) + " (theta, phi, mu, 10 random, negative control)");
    return o;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cli(const std::string& args) {
    const std::string cmd = std::string("\"") + LCTSPIN_CLI + "\" " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome ac9() {
    Outcome o;
    const std::string dir = LCTSPIN_TEST_DIR;
    const std::string a = dir + "/ac9_a.json", b = dir + "/ac9_b.json", led = dir + "/ac9_ledger.json",
                      bad = dir + "/ac9_bad.json";
    cli("verify --suite all --n 1 --seed 7 --out \"" + a + "\"");
    cli("verify --suite all --n 1 --seed 7 --out \"" + b + "\"");
    o.require(!slurp(a).empty() && slurp(a) == slurp(b), "identical reports for a fixed seed");
    std::ofstream(bad) << R"({"signature": {"plus": 1, "minus": 0}, "lambda": [["5"]]})";
    const int pass = cli("verify --suite clifford-1d"), fail = cli("verify --suite products-nd");
    const int input = cli("verify --suite bogus"), constraint = cli("generate --params \"" + bad + "\"");
    const int size = cli("verify --suite square --n 3");
    o.require(pass == 0 && fail == 1 && input == 2 && constraint == 2 && size == 3,
              "exit codes " + std::to_string(pass) + "/" + std::to_string(fail) + "/" + std::to_string(input) + "/" +
                  std::to_string(constraint) + "/" + std::to_string(size) + " (want 0/1/2/2/3)");
    const int conv = cli("conventions --n 2 --out \"" + led + "\"");
    const std::string ledger = slurp(led);
    bool complete = conv == 0;
    for (const char* key : {"\"one_mode\"", "\"indexed\"", "\"probe\"", "\"adjoint_direction\"", "\"lambda_factor\"",
                            "\"zx_readings\"", "\"generator_families\"", "\"square\""})
        complete = complete && ledger.find(key) != std::string::npos;
    o.require(complete, "conventions ledger complete");
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* id;
        const char* name;
        double budget;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"AC1", "Clifford relations", 5, ac1},
        {"AC2", "commutator tables", 30, ac2},
        {"AC3", "Lie-algebra memberships", 60, ac3},
        {"AC4", "convention determination", 60, ac4},
        {"AC5", "representation consistency", 60, ac5},
        {"AC6", "spinorial double cover", 300, ac6},
        {"AC7", "square decomposition", 60, ac7},
        {"AC8", "quartic invariant", 600, ac8},
        {"AC9", "CLI contract", 30, ac9},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("threw: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget) o.require(false, "runtime over budget");
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", secs, c.budget);
        std::cout << c.id << " " << (o.pass ? "PASS" : "FAIL") << "  " << c.name << " [" << timing << "]: " << o.detail
                  << "\n";
        failed += o.pass ? 0 : 1;
    }
    std::cout << (failed ? std::to_string(failed) + " criterion(s) failed" : std::string("all criteria passed")) << "\n";
    return failed ? 1 : 0;
}
