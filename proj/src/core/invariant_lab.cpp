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

#include "core/invariant_lab.hpp"

#include "core/error.hpp"

namespace lctspin::invariant {

using clifford::Family;
using clifford::LctGenerators;
using weyl::WeylPoly;

namespace {

constexpr Family AP = Family::AlphaPlus, BP = Family::BetaPlus, BM = Family::BetaMinus, AM = Family::AlphaMinus;

GaussianMatrix sigma_identity() { return GaussianMatrix::identity(2); }

GaussianMatrix with_sigma3(const GaussianMatrix& gamma) { return kron(gamma, phase::pauli().s3); }

GaussianMatrix scaled(const GaussianMatrix& m, long num, long den = 1) { return m.scaled(Gaussian(Rational(num, den))); }
GaussianMatrix scaled_i(const GaussianMatrix& m, long num, long den = 1) {
    return m.scaled(Gaussian(0, Rational(num, den)));
}

OperatorPoly tensor(const GaussianMatrix& c, const WeylPoly& f) { return weyl::kron(c, f); }

void check(VerificationReport& report, std::string id, const OperatorPoly& lhs, const OperatorPoly& rhs) {
    const OperatorPoly diff = lhs - rhs;
    const bool pass = weyl::is_zero(diff);
    report.add_exact(std::move(id), pass, pass ? std::string() : "lhs - rhs = " + weyl::to_string(diff));
}

void check(VerificationReport& report, std::string id, const GaussianMatrix& lhs, const GaussianMatrix& rhs) {
    const GaussianMatrix diff = lhs - rhs;
    const bool pass = diff.is_zero();
    report.add_exact(std::move(id), pass, pass ? std::string() : "max entry defect " + to_string(max_abs_entry(diff)));
}

OperatorPoly degree_part(const OperatorPoly& m, unsigned degree) {
    return m.map([degree](const WeylPoly& f) { return f.homogeneous_part(degree); });
}

unsigned max_degree(const OperatorPoly& m) {
    unsigned d = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) d = std::max(d, m(i, j).degree());
    return d;
}

}  // namespace

POperator build_P(const lct::Signature& sig, ConventionPtr conv, bool unsafe_size) {
    if (sig.dimension() > kMaxQuarticModes && !unsafe_size)
        throw Error(ErrorKind::SizeLimit, "the quartic pipeline is limited to N <= " + std::to_string(kMaxQuarticModes) +
                                              " (override with --unsafe-size)");
    LctGenerators lg = clifford::label_lct_generators(sig);
    const phase::ReducedQuadruple q = phase::build_reduced(sig, conv);
    OperatorPoly op(2 * lg.dim(), 2 * lg.dim());
    for (std::size_t b = 0; b < lg.basis_size(); ++b) op += weyl::kron(lg.basis(b), q.basis(b));
    return POperator{std::move(op), std::move(lg), std::move(conv)};
}

GaussianMatrix with_sigma_identity(const GaussianMatrix& gamma) { return kron(gamma, sigma_identity()); }

GaussianMatrix identity_sigma3(std::size_t clifford_dim) {
    return kron(GaussianMatrix::identity(clifford_dim), phase::pauli().s3);
}

UOperators build_U(const LctGenerators& lg) {
    auto g = [&](Family f) { return lg(f, 0); };
    UOperators u;
    u.plus = scaled(with_sigma3(g(AP) * g(BP) + g(BM) * g(AM)), 1, 2);
    u.minus = scaled(with_sigma3(g(AP) * g(BM) + g(BP) * g(AM)), 1, 2);
    u.cross = scaled(with_sigma3(g(AP) * g(AM) - g(BP) * g(BM)), 1, 2);
    u.zero = scaled(with_sigma3(g(AP) * g(BP) - g(BM) * g(AM)), 1, 2);
    return u;
}

const char* u_name(std::size_t k) {
    static const char* names[] = {"U+", "U-", "Ux", "U0"};
    return k < 4 ? names[k] : "?";
}

IndexedU build_indexed_U(const LctGenerators& lg) {
    IndexedU u;
    u.modes = lg.modes();
    for (std::size_t m = 0; m < u.modes; ++m)
        for (std::size_t n = 0; n < u.modes; ++n) {
            u.plus.push_back(scaled(with_sigma3(lg(AP, m) * lg(BP, n) + lg(BM, n) * lg(AM, m)), 1, 2));
            u.minus.push_back(scaled(with_sigma3(lg(AP, m) * lg(BM, n) + lg(BP, n) * lg(AM, m)), 1, 2));
            u.cross.push_back(scaled(with_sigma3(lg(AP, m) * lg(AM, n) - lg(BP, n) * lg(BM, m)), 1, 2));
            u.lambda.push_back(scaled(with_sigma3(lg(AP, m) * lg(AP, n) + lg(BP, m) * lg(BP, n) -
                                                  lg(BM, m) * lg(BM, n) - lg(AM, m) * lg(AM, n)),
                                      1, 4));
            u.zero.push_back(scaled(with_sigma3(lg(AP, m) * lg(BP, n) - lg(BM, n) * lg(AM, m)), 1, 2));
        }
    return u;
}

UProductTable u_product_table(const LctGenerators& lg) {
    if (lg.modes() != 1) throw Error(ErrorKind::DimensionMismatch, "the U product table is a one-mode table");
    const UOperators u = build_U(lg);
    const std::size_t dim = 2 * lg.dim();
    const GaussianMatrix id = GaussianMatrix::identity(dim);
    const GaussianMatrix eps = with_sigma_identity(clifford::volume_element(lg));
    const GaussianMatrix s3 = identity_sigma3(lg.dim());

    std::vector<std::pair<std::string, GaussianMatrix>> forms = {{"0", GaussianMatrix(dim, dim)}};
    for (int sign : {1, -1}) {
        const std::string s = sign > 0 ? "" : "-";
        forms.emplace_back(s + "1/2(eps-I)xI2", scaled(eps - id, sign, 2));
        forms.emplace_back(s + "1/2(eps+I)xI2", scaled(eps + id, sign, 2));
        for (std::size_t k = 0; k < 4; ++k) forms.emplace_back(s + "(Ixs3)" + u_name(k), scaled(s3 * u[k], sign));
    }

    UProductTable table;
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
            const GaussianMatrix prod = u[a] * u[b];
            std::string name = "other";
            for (const auto& [label, value] : forms)
                if (prod == value) {
                    name = label;
                    break;
                }
            table.forms[a][b] = name;
        }

    VerificationReport& r = table.stated;
    r.suite = "u-products";
    const GaussianMatrix zero(dim, dim);
    check(r, "U+U+ = 1/2(eps-I)xI2", u.plus * u.plus, scaled(eps - id, 1, 2));
    check(r, "U-U- = -1/2(eps-I)xI2", u.minus * u.minus, scaled(eps - id, -1, 2));
    check(r, "UxUx = -1/2(eps-I)xI2", u.cross * u.cross, scaled(eps - id, -1, 2));
    check(r, "U0U0 = -1/2(eps+I)xI2", u.zero * u.zero, scaled(eps + id, -1, 2));
    check(r, "U+U- = (Ixs3)Ux", u.plus * u.minus, s3 * u.cross);
    check(r, "-U-U+ = (Ixs3)Ux", -(u.minus * u.plus), s3 * u.cross);
    check(r, "U-Ux = -(Ixs3)U+", u.minus * u.cross, -(s3 * u.plus));
    check(r, "-UxU- = -(Ixs3)U+", -(u.cross * u.minus), -(s3 * u.plus));
    check(r, "UxU+ = (Ixs3)U-", u.cross * u.plus, s3 * u.minus);
    check(r, "-U+Ux = (Ixs3)U-", -(u.plus * u.cross), s3 * u.minus);
    check(r, "U+U0 = 0", u.plus * u.zero, zero);
    check(r, "U0U+ = 0", u.zero * u.plus, zero);
    check(r, "U-U0 = 0", u.minus * u.zero, zero);
    check(r, "U0U- = 0", u.zero * u.minus, zero);
    return table;
}

SquareSplit split_square(const POperator& p) {
    SquareSplit s;
    s.square = p.op * p.op;
    s.quadratic = degree_part(s.square, 2);
    s.linear = degree_part(s.square, 1);
    s.constant = degree_part(s.square, 0);
    return s;
}

VerificationReport square_decomposition_1d(ConventionPtr conv) {
    const lct::Signature sig(1, 0);
    const POperator p = build_P(sig, conv);
    const LctGenerators& lg = p.lg;
    const SquareSplit s = split_square(p);
    const UOperators u = build_U(lg);
    const phase::DispersionOps z = phase::build_dispersion(sig, conv);
    auto g = [&](Family f) { return lg(f, 0); };
    const std::size_t dim = 2 * lg.dim();
    const GaussianMatrix s3 = identity_sigma3(lg.dim());
    const GaussianMatrix id = GaussianMatrix::identity(dim);

    VerificationReport r;
    r.suite = "square-1d";
    const OperatorPoly constant_stated =
        weyl::lift(scaled(s3, 2) - scaled_i(with_sigma_identity(g(AP) * g(BP) - g(BM) * g(AM)), 1));
    const OperatorPoly constant_u_form = weyl::lift(scaled(s3 * (id - scaled_i(u.zero, 1)), 2));
    const OperatorPoly d_bivector =
        (tensor(with_sigma3(g(AP) * g(BP) + g(BM) * g(AM)), z.zplus(0, 0)) -
         tensor(with_sigma3(g(AP) * g(BM) + g(BP) * g(AM)), z.zminus(0, 0)) +
         tensor(with_sigma3(g(AP) * g(AM) - g(BP) * g(BM)), z.zcross(0, 0)))
            .scaled(ExactScalar(Gaussian(0, -4)));
    const OperatorPoly d_u_form = (tensor(u.plus, z.zplus(0, 0)) - tensor(u.minus, z.zminus(0, 0)) +
                                   tensor(u.cross, z.zcross(0, 0)))
                                      .scaled(ExactScalar(Gaussian(0, -8)));
    const OperatorPoly zero(dim, dim);
    // z-cross carries a constant once normal ordered, so D and the constant
    // part are compared through the full identity rather than by Weyl degree.
    check(r, "P^2 = D + 2 Ixs3 - i(a+b+ - b-a-)xI2", s.square, d_u_form + constant_stated);
    check(r, "P^2 = D + 2(Ixs3)(IxI2 - i U0)", s.square, d_u_form + constant_u_form);
    check(r, "-4i[bivectors x s3 x z] = -8i[U+ z+ - U- z- + Ux zx]", d_bivector, d_u_form);
    check(r, "top-degree part of P^2 = top-degree part of D", s.quadratic, degree_part(d_u_form, 2));
    check(r, "linear part of P^2 = 0", s.linear, zero);
    return r;
}

VerificationReport square_decomposition_nd(const lct::Signature& sig, ConventionPtr conv, const NdSquareForm& form) {
    const POperator p = build_P(sig, conv);
    const LctGenerators& lg = p.lg;
    const std::size_t n = lg.modes();
    const SquareSplit s = split_square(p);
    const IndexedU u = build_indexed_U(lg);
    const phase::DispersionOps z = phase::build_dispersion(sig, conv);
    const std::size_t dim = 2 * lg.dim();
    const GaussianMatrix s3 = identity_sigma3(lg.dim());

    GaussianMatrix eta_u0(dim, dim);
    for (std::size_t m = 0; m < n; ++m) eta_u0 += scaled(u.zero[m * n + m], sig.eta(m));
    const GaussianMatrix inner = scaled(GaussianMatrix::identity(dim), static_cast<long>(n)) - scaled_i(eta_u0, 1);

    OperatorPoly d(dim, dim);
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t idx = m * n + k;
            d += tensor(u.plus[idx], z.zplus(m, k)) - tensor(u.minus[idx], z.zminus(m, k)) +
                 tensor(u.cross[idx], z.zcross_sym(m, k)) +
                 tensor(scaled(u.lambda[idx], form.lambda_sign), z.zcross_anti(m, k));
        }
    d = d.scaled(ExactScalar(Gaussian(0, -8)));
    const OperatorPoly c = weyl::lift(scaled(s3 * inner, 2 * form.constant_sign));

    const std::string tag = std::string(form.lambda_sign < 0 ? "-" : "+") + "Ul zx_anti";
    const std::string sign = form.constant_sign < 0 ? " - " : " + ";
    VerificationReport r;
    r.suite = "square-nd";
    check(r, "P^2 = D[" + tag + "]" + sign + "2(Ixs3)(N IxI2 - i eta_mn U0^mn)", s.square, d + c);
    check(r, "top-degree part of P^2 = top-degree part of D[" + tag + "]", s.quadratic, degree_part(d, 2));
    check(r, "linear part of P^2 = 0", s.linear, OperatorPoly(dim, dim));
    return r;
}

namespace {

lct::LctParams single_direction(const lct::Signature& sig, char which) {
    const std::size_t n = sig.dimension();
    RationalMatrix z(n, n), one(n, n);
    for (std::size_t i = 0; i < n; ++i) one(i, i) = 1;
    switch (which) {
        case 't': return lct::validate_params(one, z, z, z, sig);
        case 'f': return lct::validate_params(z, one, z, z, sig);
        default: return lct::validate_params(z, z, one, z, sig);
    }
}

OperatorPoly adjoint(const GaussianMatrix& theta_spin, const OperatorPoly& m) {
    const OperatorPoly t = weyl::lift(with_sigma_identity(theta_spin));
    return t * m - m * t;
}

}  // namespace

VerificationReport invariant_commutator(ConventionPtr conv, const spin::SpinConvention& spin_conv,
                                        std::uint64_t seed, int random_directions) {
    const lct::Signature sig(1, 0);
    const POperator p = build_P(sig, conv);
    const LctGenerators& lg = p.lg;
    const std::size_t dim = 2 * lg.dim();
    const OperatorPoly p2 = p.op * p.op;
    const OperatorPoly s3 = weyl::lift(identity_sigma3(lg.dim()));
    const OperatorPoly q = p2 * p2 + (s3 * p2).scaled(ExactScalar(4));
    const OperatorPoly zero(dim, dim);

    std::vector<std::pair<std::string, lct::LctParams>> dirs = {
        {"theta", single_direction(sig, 't')}, {"phi", single_direction(sig, 'f')}, {"mu", single_direction(sig, 'm')}};
    std::mt19937_64 rng(seed);
    for (int k = 0; k < random_directions; ++k)
        dirs.emplace_back("random" + std::to_string(k), lct::random_params(sig, rng));

    VerificationReport r;
    r.suite = "invariant";
    bool some_p2_moves = false;
    std::string p2_witness;
    for (const auto& [name, params] : dirs) {
        const GaussianMatrix theta = spin::spin_generator(params, lg, spin_conv).mat;
        check(r, "[theta_" + name + ", Q] = 0", adjoint(theta, q), zero);
        if (name == "theta" || name == "phi" || name == "mu") {
            const OperatorPoly moved = adjoint(theta, p2);
            if (!weyl::is_zero(moved)) {
                some_p2_moves = true;
                if (p2_witness.empty()) p2_witness = name;
                r.add_exact("[theta_" + name + ", P^2] has Weyl degree 2",
                            max_degree(moved) == 2, "degree " + std::to_string(max_degree(moved)));
            }
            if (name == "theta")
                r.add_exact("[I x s3, theta_theta x I2] = 0",
                            weyl::is_zero(s3 * weyl::lift(with_sigma_identity(theta)) -
                                          weyl::lift(with_sigma_identity(theta)) * s3),
                            "sigma factor does not separate");
        }
    }
    r.add("[theta_dir, P^2] != 0 for some direction", some_p2_moves,
          some_p2_moves ? std::optional<std::string>("nonzero along " + p2_witness) : std::optional<std::string>("P^2 commutes with every direction"));
    return r;
}

Json NdInvariantReport::to_json() const {
    Json out;
    out["exploratory"] = true;
    Json dirs = Json::array();
    for (std::size_t k = 0; k < directions.size(); ++k)
        dirs.push_back({{"direction", directions[k]}, {"commutes_with_P2", !nonzero[k][0]}, {"commutes_with_P4", !nonzero[k][1]}});
    out["directions"] = dirs;
    Json cands = Json::array();
    for (const ProbeCandidate& c : candidates) cands.push_back({{"form", c.form}, {"annihilates_all", c.annihilates_all}});
    out["candidates"] = cands;
    bool any = false;
    for (const ProbeCandidate& c : candidates) any = any || c.annihilates_all;
    out["summary"] = any ? "invariant candidate found" : "no invariant found at degree <= 4";
    return out;
}

NdInvariantReport nd_invariant_probe(const lct::Signature& sig, ConventionPtr conv,
                                     const spin::SpinConvention& spin_conv, std::uint64_t seed, bool unsafe_size) {
    if (sig.dimension() != 2) throw Error(ErrorKind::SizeLimit, "the indexed invariant probe runs at N = 2 only");
    const POperator p = build_P(sig, conv, unsafe_size);
    const LctGenerators& lg = p.lg;
    const OperatorPoly p2 = p.op * p.op;
    const OperatorPoly p4 = p2 * p2;
    const OperatorPoly s3 = weyl::lift(identity_sigma3(lg.dim()));

    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::string, lct::LctParams>> dirs;
    auto only = [&](const char* name, lct::RandomParamOptions o) { dirs.emplace_back(name, lct::random_params(sig, rng, o)); };
    only("theta", {4, true, false, false, false});
    only("phi", {4, false, true, false, false});
    only("mu", {4, false, false, true, false});
    only("lambda", {4, false, false, false, true});
    only("mixed", {});

    // c ranges over k/2, k = -16..16.
    std::vector<Rational> grid;
    for (long k = -16; k <= 16; ++k) {
        Rational c(k, 2);
        c.canonicalize();
        grid.push_back(c);
    }
    std::vector<bool> survives(grid.size(), true);

    NdInvariantReport report;
    for (const auto& [name, params] : dirs) {
        const GaussianMatrix theta = spin::spin_generator(params, lg, spin_conv).mat;
        const OperatorPoly a2 = adjoint(theta, p2);
        const OperatorPoly a4 = adjoint(theta, p4);
        report.directions.push_back(name);
        report.nonzero.push_back({!weyl::is_zero(a2), !weyl::is_zero(a4)});
        const OperatorPoly b = s3 * a2;
        for (std::size_t k = 0; k < grid.size(); ++k)
            if (survives[k] && !weyl::is_zero(a4 + b.scaled(ExactScalar(grid[k])))) survives[k] = false;
    }
    for (std::size_t k = 0; k < grid.size(); ++k)
        report.candidates.push_back({"P^4 + (" + to_string(grid[k]) + ")(I x s3)P^2", survives[k]});
    return report;
}

}  // namespace lctspin::invariant
