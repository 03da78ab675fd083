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

#include "core/suites.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "core/clifford.hpp"
#include "core/error.hpp"
#include "core/invariant_lab.hpp"
#include "core/io.hpp"
#include "core/numeric.hpp"
#include "core/phase_ops.hpp"
#include "core/spin_rep.hpp"

namespace lctspin::suites {

namespace {

using clifford::LctGenerators;

const lct::Signature kOneMode(1, 0);

double tolerance(const SuiteConfig& cfg, double fallback) { return cfg.tol ? *cfg.tol : fallback; }

std::string draw_label(int k) { return "draw " + std::to_string(k); }

void require_cap(const std::string& name, const SuiteConfig& cfg, std::size_t cap) {
    const std::size_t n = cfg.sig.dimension();
    if (n > cap && !cfg.unsafe_size)
        throw Error(ErrorKind::SizeLimit, "suite " + name + " is capped at N = " + std::to_string(cap) + " (N = " +
                                              std::to_string(n) + "); pass --unsafe-size to override");
}

std::size_t cap_of(const std::string& name) {
    if (name == "square" || name == "invariant" || name == "products-nd") return name == "products-nd" ? 3 : kSymbolicModeCap;
    return kMatrixModeCap;
}

std::vector<lct::LctParams> draws(const SuiteConfig& cfg, std::uint64_t salt) {
    std::mt19937_64 rng(cfg.seed * 1000003ULL + salt);
    std::vector<lct::LctParams> out;
    for (int k = 0; k < cfg.draws; ++k) out.push_back(lct::random_params(cfg.sig, rng));
    return out;
}

spin::SpinConvention spin_convention(const lct::Signature& sig, std::uint64_t seed) {
    return spin::convention_probe(sig, seed).convention;
}

VerificationReport relations(const clifford::GeneratorSet& set) {
    VerificationReport r;
    const Rational d = clifford::relation_defect(set);
    r.add_exact("relations C(" + std::to_string(set.p) + "," + std::to_string(set.q) + ")", sgn(d) == 0,
                "max defect " + to_string(d));
    return r;
}

VerificationReport clifford_1d() {
    VerificationReport r;
    r.suite = "clifford-1d";
    r.absorb(relations(clifford::build_generators(2, 0)));
    r.absorb(relations(clifford::build_generators(2, 2)));
    r.absorb(clifford::comm_table_1d(clifford::label_lct_generators(kOneMode)));
    return r;
}

VerificationReport clifford_nd(const SuiteConfig& cfg) {
    const LctGenerators lg = clifford::label_lct_generators(cfg.sig);
    VerificationReport r;
    r.suite = "clifford-nd";
    r.absorb(relations(lg.as_set()));
    r.absorb(clifford::comm_table_check(lg, clifford::TableForm::Stated));
    r.absorb(clifford::comm_table_check(lg, clifford::TableForm::Derived));
    return r;
}

VerificationReport products_1d() {
    VerificationReport r;
    r.suite = "products-1d";
    const weyl::ConventionPtr conv = phase::determine_one_mode_convention();
    r.add("unique one-mode convention", true, conv->name());
    r.absorb(phase::product_table_1d(conv));
    return r;
}

VerificationReport products_nd(const SuiteConfig& cfg) {
    VerificationReport r;
    r.suite = "products-nd";
    r.absorb(phase::product_table_nd(cfg.sig, weyl::convention_plus_i_eta(cfg.sig)));
    return r;
}

VerificationReport membership(const SuiteConfig& cfg) {
    VerificationReport r;
    r.suite = "membership";
    const lct::Signature& sig = cfg.sig;
    const double tol_sp = tolerance(cfg, 1e-10), tol_o = tolerance(cfg, 1e-8);
    Rational worst_alg = 0, worst_ortho = 0;
    double worst_sp = 0, worst_po = 0, worst_det = 0;
    int k = 0;
    for (const lct::LctParams& p : draws(cfg, 1)) {
        const RationalMatrix a = lct::sl_generator(p);
        const lct::OrthoGenerator x = lct::ortho_generator(p);
        const RealMatrix o = lct::special_orthogonal_element(x);
        worst_alg = std::max(worst_alg, lct::symplectic_algebra_defect(a, sig));
        worst_ortho = std::max(worst_ortho, lct::ortho_defect(x));
        worst_sp = std::max(worst_sp, lct::symplectic_defect(lct::group_element(p).matrix(), sig));
        worst_po = std::max(worst_po, lct::pseudo_orthogonal_defect(o, sig));
        worst_det = std::max(worst_det, std::abs(o.determinant() - 1));
        ++k;
    }
    const std::string over = " over " + std::to_string(k) + " draws";
    r.add_exact("A^T K + K A = 0" + over, sgn(worst_alg) == 0, "max defect " + to_string(worst_alg));
    r.add_exact("X G + G X^T = 0" + over, sgn(worst_ortho) == 0, "max defect " + to_string(worst_ortho));
    r.add_numeric("g^T K g - K" + over, worst_sp, tol_sp);
    r.add_numeric("O^T G O - G" + over, worst_po, tol_o);
    r.add_numeric("det O - 1" + over, worst_det, tol_o);
    return r;
}

VerificationReport consistency(const SuiteConfig& cfg) {
    VerificationReport r;
    r.suite = "consistency";
    const weyl::ConventionPtr conv = weyl::convention_plus_i_eta(cfg.sig);
    int k = 0;
    for (const lct::LctParams& p : draws(cfg, 2)) {
        const VerificationReport one = phase::infinitesimal_consistency(p, conv);
        std::optional<std::string> witness;
        for (const ReportLine& line : one.lines)
            if (!line.pass) {
                witness = line.id + ": " + line.witness.value_or("");
                break;
            }
        r.add(draw_label(k++) + ": reduced operators transform by I + X", !witness, witness);
    }
    return r;
}

VerificationReport cover(const SuiteConfig& cfg) {
    VerificationReport r;
    r.suite = "cover";
    const lct::Signature& sig = cfg.sig;
    const LctGenerators lg = clifford::label_lct_generators(sig);
    const spin::ProbeOutcome probe = spin::convention_probe(sig, cfg.seed);
    const spin::SpinConvention& conv = probe.convention;
    r.add("unique spin convention", true, conv.label());

    const double tol_cover = tolerance(cfg, sig.dimension() == 1 ? 1e-8 : 1e-7);
    Rational worst_first = 0, worst_residual = 0;
    double worst_cover = 0, worst_det = 0;
    int k = 0;
    for (const lct::LctParams& p : draws(cfg, 3)) {
        const spin::SpinBundle b = spin::rho(p, lg, conv);
        worst_first = std::max(worst_first, b.first_order_defect);
        worst_residual = std::max(worst_residual, spin::bivector_residual(b.theta.mat, lg));
        worst_cover = std::max(worst_cover, b.double_cover_defect);
        worst_det = std::max(worst_det, b.det_s_defect);
        ++k;
    }
    const std::string over = " over " + std::to_string(k) + " draws";
    r.add_exact("[theta, G_b] = sum_a X_ba G_a" + over, sgn(worst_first) == 0, "max defect " + to_string(worst_first));
    r.add_exact("theta is a bivector" + over, sgn(worst_residual) == 0, "residual " + to_string(worst_residual));
    r.add_numeric("S G_b S^-1 - sum_a O_ba G_a" + over, worst_cover, tol_cover);
    r.add_numeric("det S - 1" + over, worst_det, tolerance(cfg, 1e-8));

    std::mt19937_64 rng(cfg.seed * 1000003ULL + 4);
    const lct::LctParams dir = lct::random_params(sig, rng);
    const double slope = spin::scaling_slope(dir, lg, conv, {0.1, 0.05, 0.025, 0.0125});
    r.add("linearization defect scales as t^2 (slope >= 1.9)", slope >= 1.9, "slope " + format_double(slope));
    return r;
}

VerificationReport square(const SuiteConfig& cfg) {
    VerificationReport r;
    r.suite = "square";
    r.absorb(invariant::u_product_table(clifford::label_lct_generators(kOneMode)).stated);
    r.absorb(invariant::square_decomposition_1d(weyl::convention_minus_i(1)));
    if (cfg.sig.dimension() >= 2)
        r.absorb(invariant::square_decomposition_nd(cfg.sig, weyl::convention_plus_i_eta(cfg.sig)));
    return r;
}

VerificationReport invariant_suite(const SuiteConfig& cfg) {
    VerificationReport r;
    r.suite = "invariant";
    r.absorb(invariant::invariant_commutator(weyl::convention_minus_i(1), spin_convention(kOneMode, cfg.seed),
                                             cfg.seed));
    return r;
}

Json candidate_lines(const VerificationReport& rep, const std::string& name = "") {
    Json failed = Json::array();
    for (const ReportLine& line : rep.lines)
        if (!line.pass) failed.push_back(line.id);
    Json out;
    if (!name.empty()) out["candidate"] = name;
    out["passed"] = rep.passed();
    out["of"] = rep.lines.size();
    out["failed_lines"] = std::move(failed);
    return out;
}

Json probe_json(const spin::ProbeOutcome& probe, const lct::Signature& sig) {
    Json evidence = Json::array();
    for (const auto& e : probe.evidence)
        evidence.push_back(Json{{"candidate", e.candidate.label()}, {"max_defect", to_string(e.max_defect)}});
    return Json{{"signature", io::signature_json(sig)},
                {"candidates", std::move(evidence)},
                {"selected", probe.convention.label()}};
}

lct::LctParams transposed(const lct::LctParams& p) {
    return lct::validate_params(p.theta().transpose(), p.phi().transpose(), p.mu().transpose(),
                                p.lambda().transpose(), p.signature());
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"clifford-1d", "clifford-nd", "products-1d", "products-nd",
                                                   "membership",  "consistency", "cover",       "square",
                                                   "invariant"};
    return names;
}

std::vector<std::string> resolve_suites(const std::string& list, const SuiteConfig& cfg) {
    std::vector<std::string> out;
    std::stringstream ss(list);
    std::string name;
    auto push = [&](const std::string& s) {
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    };
    while (std::getline(ss, name, ',')) {
        if (name == "all") {
            for (const std::string& s : suite_names()) push(s);
        } else if (std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end()) {
            push(name);
        } else {
            throw Error(ErrorKind::UnknownSuite, "unknown suite '" + name + "'");
        }
    }
    if (out.empty()) throw Error(ErrorKind::UnknownSuite, "no suite selected");
    for (const std::string& s : out) require_cap(s, cfg, cap_of(s));
    return out;
}

VerificationReport run_suite(const std::string& name, const SuiteConfig& cfg) {
    require_cap(name, cfg, cap_of(name));
    if (name == "clifford-1d") return clifford_1d();
    if (name == "clifford-nd") return clifford_nd(cfg);
    if (name == "products-1d") return products_1d();
    if (name == "products-nd") return products_nd(cfg);
    if (name == "membership") return membership(cfg);
    if (name == "consistency") return consistency(cfg);
    if (name == "cover") return cover(cfg);
    if (name == "square") return square(cfg);
    if (name == "invariant") return invariant_suite(cfg);
    throw Error(ErrorKind::UnknownSuite, "unknown suite '" + name + "'");
}

Json run_suites(const std::vector<std::string>& names, const SuiteConfig& cfg) {
    Json reports = Json::array();
    bool pass = true;
    for (const std::string& name : names) {
        const VerificationReport r = run_suite(name, cfg);
        pass = pass && r.all_pass();
        reports.push_back(r.to_json());
    }
    return Json{{"signature", io::signature_json(cfg.sig)},
                {"seed", cfg.seed},
                {"pass", pass},
                {"suites", std::move(reports)}};
}

Json conventions_ledger(const SuiteConfig& cfg) {
    require_cap("conventions", cfg, kSymbolicModeCap);
    const lct::Signature& sig = cfg.sig;
    Json ledger;
    ledger["signature"] = io::signature_json(sig);
    ledger["seed"] = cfg.seed;

    const LctGenerators lg = clifford::label_lct_generators(sig);
    bool pattern = true;
    for (std::size_t b = 0; b < lg.basis_size(); ++b) {
        const GaussianMatrix sq = lg.basis(b) * lg.basis(b);
        pattern = pattern && (sq - GaussianMatrix::identity(lg.dim()).scaled(Gaussian(lg.basis_square(b)))).is_zero();
    }
    ledger["generator_families"] = Json{{"squares", {"+eta", "+eta", "-eta", "-eta"}},
                                        {"order", {"alpha+", "beta+", "beta-", "alpha-"}},
                                        {"holds", pattern}};

    // One-mode commutator: both candidates with their failing lines.
    Json one_mode = Json::array();
    for (const weyl::ConventionPtr& c : phase::one_mode_candidates()) {
        Json entry = candidate_lines(phase::product_table_1d(c), c->name());
        entry["last_bracket_reversed"] = candidate_lines(phase::product_table_1d(c, true));
        one_mode.push_back(std::move(entry));
    }
    const weyl::ConventionPtr one = phase::determine_one_mode_convention();
    ledger["commutator"]["one_mode"] = Json{{"candidates", std::move(one_mode)},
                                            {"selected", one->name()},
                                            {"last_bracket", "[x+, p-] = x+ p- - p- x+"}};

    // Indexed table: candidates [p, x] = -/+ i eta; the selected one passes
    // every line that any candidate passes.
    Json indexed = Json::array();
    std::vector<VerificationReport> reps;
    const std::vector<weyl::ConventionPtr> nd_candidates = {weyl::convention_minus_i_eta(sig),
                                                            weyl::convention_plus_i_eta(sig)};
    for (const weyl::ConventionPtr& c : nd_candidates) {
        reps.push_back(phase::product_table_nd(sig, c));
        indexed.push_back(candidate_lines(reps.back(), c->name()));
    }
    std::optional<std::size_t> selected;
    for (std::size_t k = 0; k < reps.size(); ++k) {
        bool dominates = true;
        for (std::size_t j = 0; j < reps.size() && dominates; ++j)
            for (std::size_t l = 0; l < reps[j].lines.size(); ++l)
                if (reps[j].lines[l].pass && !reps[k].lines[l].pass) {
                    dominates = false;
                    break;
                }
        if (dominates && reps[k].passed() > 0) {
            if (selected) throw Error(ErrorKind::AmbiguousConvention, "indexed product table does not separate the candidates");
            selected = k;
        }
    }
    if (!selected) throw Error(ErrorKind::NoConsistentConvention, "no candidate dominates the indexed product table");
    const weyl::ConventionPtr nd = nd_candidates[*selected];
    phase::NdReadings corrected;
    corrected.stated_xm_pm_sign = false;
    ledger["commutator"]["indexed"] =
        Json{{"candidates", std::move(indexed)},
             {"selected", nd->name()},
             {"one_mode_equivalent", nd->name() == "plus_i_eta" ? "[p, x] = +i at N = 1, opposite to the one-mode table"
                                                                : "[p, x] = -i at N = 1, same as the one-mode table"},
             {"xm_pm_line", Json{{"stated", "[x-_nu, p-_mu] = -4i s3 z-_mn"},
                                 {"computed", "[x-_nu, p-_mu] = +4i s3 z-_mn"},
                                 {"corrected_table", candidate_lines(phase::product_table_nd(sig, nd, corrected))}}}};

    const lct::Signature survey_sig = sig.dimension() >= 2 ? sig : lct::Signature(2, 0);
    const phase::ReadingSurvey survey = phase::survey_cross_readings(survey_sig, weyl::convention_plus_i_eta(survey_sig));
    auto names = [](const std::vector<phase::CrossReading>& rs) {
        Json out = Json::array();
        for (phase::CrossReading r : rs) out.push_back(phase::cross_reading_name(r));
        return out;
    };
    ledger["zx_readings"] = Json{{"signature", io::signature_json(survey_sig)},
                                 {"squares", names(survey.squares)},
                                 {"brackets", names(survey.brackets)}};

    // Spin generator.
    const spin::ProbeOutcome probe = spin::convention_probe(sig, cfg.seed);
    ledger["spin"]["probe"] = probe_json(probe, sig);
    if (sig.dimension() == 1) {
        const lct::Signature two(2, 0);
        const spin::ProbeOutcome wide = spin::convention_probe(two, cfg.seed);
        ledger["spin"]["lambda_probe"] = probe_json(wide, two);
        ledger["spin"]["lambda_factor"] = Json{{"stated", "1/2"}, {"selected", to_string(wide.convention.lambda_factor)}};
    } else {
        ledger["spin"]["lambda_factor"] = Json{{"stated", "1/2"}, {"selected", to_string(probe.convention.lambda_factor)}};
    }

    std::mt19937_64 rng(cfg.seed * 1000003ULL + 5);
    const lct::LctParams p = lct::random_params(sig, rng);
    const GaussianMatrix row = spin::spin_generator(p, lg, probe.convention).mat;
    const GaussianMatrix column = spin::spin_generator(transposed(p), lg, probe.convention).mat;
    const Rational row_defect = spin::first_order_cover_defect(row, p, lg);
    const Rational column_defect = spin::first_order_cover_defect(column, p, lg);
    std::string reading = "indistinguishable";
    if (sgn(row_defect) == 0 && sgn(column_defect) != 0) reading = "row";
    if (sgn(row_defect) != 0 && sgn(column_defect) == 0) reading = "column";
    ledger["spin"]["parameter_upper_index"] =
        Json{{"row", to_string(row_defect)}, {"column", to_string(column_defect)}, {"selected", reading}};

    const spin::SpinBundle b = spin::rho(p, lg, probe.convention);
    const double forward = b.double_cover_defect;
    const double backward = spin::double_cover_defect(b.s.inverse(), b.o, lg);
    ledger["spin"]["adjoint_direction"] = Json{{"S G S^-1", format_double(forward)},
                                               {"S^-1 G S", format_double(backward)},
                                               {"selected", forward <= backward ? "S G S^-1" : "S^-1 G S"}};

    // Square of P: one-mode constant sign and the indexed sign choices.
    const VerificationReport sq1 = invariant::square_decomposition_1d(one);
    Json forms = Json::array();
    for (int l : {-1, 1})
        for (int c : {-1, 1}) {
            const VerificationReport rep = invariant::square_decomposition_nd(sig, nd, {l, c});
            forms.push_back(Json{{"lambda_sign", l}, {"constant_sign", c}, {"holds", rep.lines.front().pass}});
        }
    ledger["square"] = Json{{"one_mode", Json{{"convention", one->name()},
                                              {"constant", "+2 Ixs3 - i(a+b+ - b-a-)xI2"},
                                              {"holds", sq1.all_pass()}}},
                            {"indexed", Json{{"convention", nd->name()}, {"forms", std::move(forms)}}}};
    return ledger;
}

Json tables(const SuiteConfig& cfg) {
    require_cap("tables", cfg, kMatrixModeCap);
    const LctGenerators lg = clifford::label_lct_generators(cfg.sig);
    Json out;
    out["signature"] = io::signature_json(cfg.sig);
    out["labels"] = Json::array();
    for (std::size_t b = 0; b < lg.basis_size(); ++b) out["labels"].push_back(lg.basis_label(b));
    out["generators"] = io::generators_json(lg.as_set());
    out["rows"] = clifford::comm_table_dump(lg);
    return out;
}

}  // namespace lctspin::suites
