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

#include "core/clifford.hpp"

#include <functional>

#include "core/error.hpp"

namespace lctspin::clifford {

namespace {

GaussianMatrix pauli(char which) {
    GaussianMatrix m(2, 2);
    switch (which) {
        case 'I': m(0, 0) = 1; m(1, 1) = 1; break;
        case 'X': m(0, 1) = 1; m(1, 0) = 1; break;
        case 'Y': m(0, 1) = Gaussian(0, -1); m(1, 0) = Gaussian(0, 1); break;
        case 'Z': m(0, 0) = 1; m(1, 1) = -1; break;
    }
    return m;
}

GaussianMatrix pauli_string(const std::string& factors) {
    GaussianMatrix out = GaussianMatrix::identity(1);
    for (char f : factors) out = kron(out, pauli(f));
    return out;
}

}  // namespace

GeneratorSet build_generators(int p, int q) {
    const int n = p + q;
    if (p < 0 || q < 0 || n < 1 || n > kMaxGenerators)
        throw Error(ErrorKind::SizeLimit, "C(" + std::to_string(p) + "," + std::to_string(q) +
                                              ") outside the supported range 1 <= p+q <= " +
                                              std::to_string(kMaxGenerators));
    const int qubits = (n + 1) / 2;
    GeneratorSet set;
    set.p = p;
    set.q = q;
    set.dim = std::size_t{1} << qubits;
    for (int a = 0; a < n; ++a) {
        const int site = a / 2;
        std::string factors(static_cast<std::size_t>(site), 'Z');
        factors += (a % 2 == 0) ? 'X' : 'Y';
        factors.append(static_cast<std::size_t>(qubits - site - 1), 'I');
        GaussianMatrix g = pauli_string(factors);
        if (a >= p) g = g.scaled(Gaussian::i());
        set.gens.push_back(std::move(g));
        set.metric.push_back(a < p ? 1 : -1);
    }
    return set;
}

Rational relation_defect(const GeneratorSet& set) {
    const GaussianMatrix id = GaussianMatrix::identity(set.dim);
    Rational worst = 0;
    for (std::size_t a = 0; a < set.gens.size(); ++a)
        for (std::size_t b = a; b < set.gens.size(); ++b) {
            GaussianMatrix anti = set.gens[a] * set.gens[b] + set.gens[b] * set.gens[a];
            if (a == b) anti -= id.scaled(Gaussian(2 * set.metric[a]));
            Rational d = max_abs_entry(anti);
            if (d > worst) worst = d;
        }
    return worst;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::AlphaPlus: return "alpha+";
        case Family::BetaPlus: return "beta+";
        case Family::BetaMinus: return "beta-";
        case Family::AlphaMinus: return "alpha-";
    }
    return "?";
}

LctGenerators::LctGenerators(lct::Signature sig, std::size_t dim, std::array<std::vector<GaussianMatrix>, 4> families)
    : sig_(sig), dim_(dim), families_(std::move(families)) {
    for (const auto& fam : families_)
        if (fam.size() != sig_.dimension())
            throw Error(ErrorKind::DimensionMismatch, "generator family size does not match the signature");
}

int LctGenerators::basis_square(std::size_t b) const {
    return family_sign(kFamilies[b / modes()]) * sig_.eta(b % modes());
}

std::string LctGenerators::basis_label(std::size_t b) const {
    return std::string(family_name(kFamilies[b / modes()])) + "^" + std::to_string(b % modes());
}

GeneratorSet LctGenerators::as_set() const {
    GeneratorSet set;
    set.dim = dim_;
    for (std::size_t b = 0; b < basis_size(); ++b) {
        set.gens.push_back(basis(b));
        set.metric.push_back(basis_square(b));
        (basis_square(b) > 0 ? set.p : set.q) += 1;
    }
    return set;
}

LctGenerators label_lct_generators(const lct::Signature& sig) {
    const std::size_t n = sig.dimension();
    const int half = static_cast<int>(2 * n);
    if (2 * half > kMaxGenerators)
        throw Error(ErrorKind::SizeLimit, "C(2N,2N) with N = " + std::to_string(n) + " exceeds the generator limit");
    GeneratorSet raw = build_generators(half, half);
    std::size_t next_plus = 0;
    std::size_t next_minus = static_cast<std::size_t>(half);
    std::array<std::vector<GaussianMatrix>, 4> families;
    for (std::size_t mu = 0; mu < n; ++mu)
        for (Family f : kFamilies) {
            const int square = family_sign(f) * sig.eta(mu);
            std::size_t& next = square > 0 ? next_plus : next_minus;
            families[static_cast<std::size_t>(f)].push_back(raw.gens[next++]);
        }
    return LctGenerators(sig, raw.dim, std::move(families));
}

LctGenerators label_lct_generators(std::size_t n, const lct::Signature& sig) {
    if (n != sig.dimension())
        throw Error(ErrorKind::DimensionMismatch, "N = " + std::to_string(n) + " does not match the signature");
    return label_lct_generators(sig);
}

GaussianMatrix volume_element(const LctGenerators& lg) {
    GaussianMatrix out = GaussianMatrix::identity(lg.dim());
    for (std::size_t b = 0; b < lg.basis_size(); ++b) out = out * lg.basis(b);
    return out;
}

BasisDecomposition decompose(const GaussianMatrix& m, const LctGenerators& lg) {
    BasisDecomposition d;
    GaussianMatrix rest = m;
    const Gaussian inv_dim(Rational(1, static_cast<long>(lg.dim())));
    for (std::size_t b = 0; b < lg.basis_size(); ++b) {
        // tr(Gamma_b m) / (dim * Gamma_b^2)
        const GaussianMatrix prod = lg.basis(b) * m;
        Gaussian trace;
        for (std::size_t i = 0; i < prod.rows(); ++i) trace += prod(i, i);
        Gaussian c = trace * inv_dim * Gaussian(lg.basis_square(b));
        if (!c.is_zero()) rest -= lg.basis(b).scaled(c);
        d.coefficients.push_back(std::move(c));
    }
    d.in_span = rest.is_zero();
    return d;
}

std::string describe(const BasisDecomposition& d, const LctGenerators& lg) {
    std::string out;
    for (std::size_t b = 0; b < d.coefficients.size(); ++b) {
        const Gaussian& c = d.coefficients[b];
        if (c.is_zero()) continue;
        std::string coef = to_string(c);
        if (!out.empty()) out += " + ";
        out += (coef == "1" ? "" : coef + " ") + lg.basis_label(b);
    }
    if (out.empty()) out = "0";
    if (!d.in_span) out += " + (terms outside the generator span)";
    return out;
}

namespace {

enum class Slot { Mu, Nu, Rho };

struct GenRef {
    Family family;
    Slot slot;
};

// coef * eta^{eta_a eta_b} * gen; `with_eta` false drops the metric factor.
struct RhsTerm {
    int coef;
    bool with_eta;
    Slot eta_a;
    Slot eta_b;
    GenRef gen;
};

struct StatedLine {
    GenRef left1;
    GenRef left2;
    GenRef right;
    std::vector<RhsTerm> rhs;
};

constexpr Family AP = Family::AlphaPlus;
constexpr Family BP = Family::BetaPlus;
constexpr Family BM = Family::BetaMinus;
constexpr Family AM = Family::AlphaMinus;
constexpr Slot MU = Slot::Mu;
constexpr Slot NU = Slot::Nu;
constexpr Slot RHO = Slot::Rho;

RhsTerm plain(int coef, Family f) { return {coef, false, MU, MU, {f, MU}}; }
RhsTerm metric(int coef, Slot a, Slot b, Family f, Slot s) { return {coef, true, a, b, {f, s}}; }

// [left1 left2, right] = rhs for the C(2,2) generators.
StatedLine line_1d(Family l1, Family l2, Family r, std::vector<RhsTerm> rhs) {
    return {{l1, MU}, {l2, MU}, {r, MU}, std::move(rhs)};
}

const std::vector<StatedLine>& unindexed_table() {
    static const std::vector<StatedLine> table = {
        line_1d(AP, BP, AP, {plain(-2, BP)}), line_1d(AP, BP, BP, {plain(2, AP)}),
        line_1d(AP, BP, BM, {}),              line_1d(AP, BP, AM, {}),
        line_1d(AP, BM, AP, {plain(-2, BM)}), line_1d(AP, BM, BP, {}),
        line_1d(AP, BM, BM, {plain(-2, AP)}), line_1d(AP, BM, AM, {}),
        line_1d(AP, AM, AP, {plain(-2, AM)}), line_1d(AP, AM, BP, {}),
        line_1d(AP, AM, BM, {}),              line_1d(AP, AM, AM, {plain(-2, AP)}),
        line_1d(BP, AM, AP, {}),              line_1d(BP, AM, BP, {plain(-2, AM)}),
        line_1d(BP, AM, BM, {}),              line_1d(BP, AM, AM, {plain(-2, BP)}),
        line_1d(BP, BM, AP, {}),              line_1d(BP, BM, BP, {plain(-2, BM)}),
        line_1d(BP, BM, BM, {plain(-2, BP)}), line_1d(BP, BM, AM, {}),
        line_1d(BM, AM, AP, {}),              line_1d(BM, AM, BP, {}),
        line_1d(BM, AM, BM, {plain(2, AM)}),  line_1d(BM, AM, AM, {plain(-2, BM)}),
    };
    return table;
}

// [l1^mu l2^nu, r^rho] = rhs.
StatedLine line_nd(Family l1, Family l2, Family r, std::vector<RhsTerm> rhs) {
    return {{l1, MU}, {l2, NU}, {r, RHO}, std::move(rhs)};
}

const std::vector<StatedLine>& indexed_table() {
    static const std::vector<StatedLine> table = {
        line_nd(AP, AP, AP, {metric(2, NU, RHO, AP, MU)}),
        line_nd(AP, AP, BP, {}),
        line_nd(AP, AP, BM, {}),
        line_nd(AP, AP, AM, {}),
        line_nd(BP, BP, AP, {}),
        line_nd(BP, BP, BP, {metric(2, NU, RHO, BP, MU)}),
        line_nd(BP, BP, BM, {}),
        line_nd(BP, BP, AM, {}),
        line_nd(BM, BM, AP, {}),
        line_nd(BM, BM, BP, {}),
        line_nd(BM, BM, BM, {metric(-2, NU, RHO, BM, MU)}),
        line_nd(BM, BM, AM, {}),
        line_nd(AM, AM, AP, {}),
        line_nd(AM, AM, BP, {}),
        line_nd(AM, AM, BM, {}),
        line_nd(AM, AM, AM, {metric(-2, NU, RHO, AM, MU)}),
        line_nd(AP, AM, AP, {metric(-2, MU, RHO, AM, NU)}),
        line_nd(AP, AM, BP, {}),
        line_nd(AP, AM, BM, {}),
        line_nd(AP, AM, AM, {metric(2, NU, RHO, AP, MU)}),
        line_nd(AP, BP, AP, {metric(-2, MU, RHO, BP, NU)}),
        line_nd(AP, BP, BP, {metric(2, NU, RHO, AP, MU)}),
        line_nd(AP, BP, BM, {}),
        line_nd(AP, BP, AM, {}),
        line_nd(AP, BM, AP, {metric(-2, MU, RHO, BM, NU)}),
        line_nd(AP, BM, BP, {}),
        line_nd(AP, BM, BM, {metric(-2, NU, RHO, AP, MU)}),
        line_nd(AP, BM, AM, {}),
        line_nd(BP, BM, AP, {}),
        line_nd(BP, BM, BP, {metric(-2, MU, RHO, BP, NU)}),
        line_nd(BP, BM, BM, {metric(-2, NU, RHO, BP, MU)}),
        line_nd(BP, BM, AM, {}),
        line_nd(BP, AM, AP, {}),
        line_nd(BP, AM, BP, {metric(2, MU, RHO, AM, NU)}),
        line_nd(BP, AM, BM, {}),
        line_nd(BP, AM, AM, {metric(-2, NU, RHO, BP, MU)}),
        line_nd(BM, AM, AP, {}),
        line_nd(BM, AM, AM, {metric(-2, NU, RHO, BM, MU)}),
        line_nd(BM, AM, BM, {metric(2, MU, RHO, AM, NU)}),
        line_nd(BM, AM, BP, {}),
    };
    return table;
}

struct Indices {
    std::size_t mu, nu, rho;
    std::size_t at(Slot s) const { return s == MU ? mu : s == NU ? nu : rho; }
};

std::size_t basis_index(const LctGenerators& lg, const GenRef& g, const Indices& idx) {
    return static_cast<std::size_t>(g.family) * lg.modes() + idx.at(g.slot);
}

// Upper-index metric of the generator pair (a, b): Gamma_a Gamma_b + Gamma_b Gamma_a = 2 g_ab.
int pair_metric(const LctGenerators& lg, std::size_t a, std::size_t b) {
    return a == b ? lg.basis_square(a) : 0;
}

std::string slot_label(Slot s, bool indexed) {
    if (!indexed) return "";
    return s == MU ? "^mu" : s == NU ? "^nu" : "^rho";
}

std::string line_text(const StatedLine& line, bool indexed) {
    auto ref = [&](const GenRef& g) { return std::string(family_name(g.family)) + slot_label(g.slot, indexed); };
    std::string out = "[" + ref(line.left1) + " " + ref(line.left2) + ", " + ref(line.right) + "] = ";
    if (line.rhs.empty()) return out + "0";
    for (std::size_t k = 0; k < line.rhs.size(); ++k) {
        const RhsTerm& t = line.rhs[k];
        if (k > 0) out += " + ";
        out += std::to_string(t.coef);
        if (t.with_eta) {
            auto idx = [](Slot s) { return s == MU ? "mu" : s == NU ? "nu" : "rho"; };
            out += std::string(" eta^{") + idx(t.eta_a) + "," + idx(t.eta_b) + "}";
        }
        out += " " + ref(t.gen);
    }
    return out;
}

struct Evaluation {
    GaussianMatrix lhs;
    GaussianMatrix rhs;
};

Evaluation evaluate(const LctGenerators& lg, const StatedLine& line, const Indices& idx, TableForm form) {
    const std::size_t a = basis_index(lg, line.left1, idx);
    const std::size_t b = basis_index(lg, line.left2, idx);
    const std::size_t c = basis_index(lg, line.right, idx);
    Evaluation ev;
    ev.lhs = commutator(GaussianMatrix(lg.basis(a) * lg.basis(b)), lg.basis(c));
    ev.rhs = GaussianMatrix(lg.dim(), lg.dim());
    if (form == TableForm::Derived) {
        // [G_a G_b, G_c] = 2 g_bc G_a - 2 g_ac G_b
        if (int g = pair_metric(lg, b, c)) ev.rhs += lg.basis(a).scaled(Gaussian(2 * g));
        if (int g = pair_metric(lg, a, c)) ev.rhs -= lg.basis(b).scaled(Gaussian(2 * g));
        return ev;
    }
    for (const RhsTerm& t : line.rhs) {
        int factor = t.coef;
        if (t.with_eta) {
            const std::size_t i = idx.at(t.eta_a), j = idx.at(t.eta_b);
            factor *= i == j ? lg.signature().eta(i) : 0;
        }
        if (factor != 0) ev.rhs += lg.basis(basis_index(lg, t.gen, idx)).scaled(Gaussian(factor));
    }
    return ev;
}

std::string line_id(const StatedLine& line, const LctGenerators& lg, const Indices& idx, bool indexed) {
    auto ref = [&](const GenRef& g) {
        std::string s = family_name(g.family);
        if (indexed) s += std::to_string(idx.at(g.slot));
        return s;
    };
    (void)lg;
    return "[" + ref(line.left1) + " " + ref(line.left2) + "," + ref(line.right) + "]";
}

VerificationReport run_table(const LctGenerators& lg, const std::vector<StatedLine>& table, bool indexed,
                             TableForm form, const std::string& suite) {
    VerificationReport report;
    report.suite = suite + (form == TableForm::Derived ? "-derived" : "");
    const std::size_t n = indexed ? lg.modes() : 1;
    for (const StatedLine& line : table)
        for (std::size_t mu = 0; mu < n; ++mu)
            for (std::size_t nu = 0; nu < n; ++nu)
                for (std::size_t rho = 0; rho < n; ++rho) {
                    const Indices idx{mu, nu, rho};
                    const Evaluation ev = evaluate(lg, line, idx, form);
                    const GaussianMatrix diff = ev.lhs - ev.rhs;
                    const bool pass = diff.is_zero();
                    std::string witness;
                    if (!pass)
                        witness = "stated: " + line_text(line, indexed) + "; computed: " +
                                  describe(decompose(ev.lhs, lg), lg) + "; max entry defect " +
                                  to_string(max_abs_entry(diff));
                    report.add_exact(line_id(line, lg, idx, indexed), pass, witness);
                }
    return report;
}

}  // namespace

VerificationReport comm_table_1d(const LctGenerators& lg, TableForm form) {
    if (!(lg.signature() == lct::Signature(1, 0)))
        throw Error(ErrorKind::DimensionMismatch, "the unindexed commutator table is stated for signature (1,0)");
    return run_table(lg, unindexed_table(), false, form, "bivector-table-1d");
}

VerificationReport comm_table_check(const LctGenerators& lg, TableForm form) {
    return run_table(lg, indexed_table(), true, form, "bivector-table-nd");
}

Json comm_table_dump(const LctGenerators& lg) {
    Json out = Json::array();
    auto dump = [&](const std::vector<StatedLine>& table, bool indexed, const char* name) {
        const std::size_t n = indexed ? lg.modes() : 1;
        for (const StatedLine& line : table)
            for (std::size_t mu = 0; mu < n; ++mu)
                for (std::size_t nu = 0; nu < n; ++nu)
                    for (std::size_t rho = 0; rho < n; ++rho) {
                        const Indices idx{mu, nu, rho};
                        const Evaluation stated = evaluate(lg, line, idx, TableForm::Stated);
                        const Evaluation derived = evaluate(lg, line, idx, TableForm::Derived);
                        Json row;
                        row["table"] = name;
                        row["id"] = line_id(line, lg, idx, indexed);
                        row["stated"] = line_text(line, indexed);
                        row["computed"] = describe(decompose(stated.lhs, lg), lg);
                        row["stated_holds"] = (stated.lhs - stated.rhs).is_zero();
                        row["derived_holds"] = (derived.lhs - derived.rhs).is_zero();
                        out.push_back(std::move(row));
                    }
    };
    if (lg.signature() == lct::Signature(1, 0)) dump(unindexed_table(), false, "unindexed");
    dump(indexed_table(), true, "indexed");
    return out;
}

}  // namespace lctspin::clifford
