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

#include "core/phase_ops.hpp"

#include "core/clifford.hpp"
#include "core/error.hpp"

namespace lctspin::phase {

namespace {

ExactScalar rat(long num, long den = 1) { return ExactScalar(Rational(num, den)); }
ExactScalar imag(long num, long den = 1) { return ExactScalar(Gaussian(0, Rational(num, den))); }

OperatorPoly with_s3(const WeylPoly& f) { return weyl::kron(pauli().s3, f); }
OperatorPoly with_id(const WeylPoly& f) { return weyl::kron(GaussianMatrix::identity(2), f); }

void check(VerificationReport& report, std::string id, const OperatorPoly& lhs, const OperatorPoly& rhs) {
    const OperatorPoly diff = lhs - rhs;
    const bool pass = weyl::is_zero(diff);
    report.add_exact(std::move(id), pass, pass ? std::string() : "lhs - rhs = " + weyl::to_string(diff));
}

std::string pair_id(const char* name, std::size_t mu, std::size_t nu) {
    return std::string(name) + "[" + std::to_string(mu) + "," + std::to_string(nu) + "]";
}

void require_modes(const ConventionPtr& conv, std::size_t n) {
    if (!conv || conv->modes() != n)
        throw Error(ErrorKind::DimensionMismatch, "convention does not cover " + std::to_string(n) + " modes");
}

}  // namespace

const Pauli& pauli() {
    static const Pauli p = [] {
        const clifford::GeneratorSet set = clifford::build_generators(2, 0);
        Pauli out{set.gens[0], set.gens[1], {}};
        out.s3 = (out.s1 * out.s2).scaled(Gaussian(0, -1));
        return out;
    }();
    return p;
}

const char* reduced_name(Reduced r) {
    switch (r) {
        case Reduced::PPlus: return "p+";
        case Reduced::XMinus: return "x-";
        case Reduced::XPlus: return "x+";
        case Reduced::PMinus: return "p-";
    }
    return "?";
}

ReducedQuadruple build_reduced(const std::vector<WeylPoly>& p, const std::vector<WeylPoly>& x, ConventionPtr conv) {
    if (p.size() != x.size() || p.empty())
        throw Error(ErrorKind::DimensionMismatch, "momentum and position lists differ in length");
    const ExactScalar r = ExactScalar::inv_sqrt2();
    const Pauli& s = pauli();
    std::array<std::vector<OperatorPoly>, 4> ops;
    for (std::size_t mu = 0; mu < p.size(); ++mu) {
        const OperatorPoly s1p = weyl::kron(s.s1, p[mu]), s1x = weyl::kron(s.s1, x[mu]);
        const OperatorPoly s2p = weyl::kron(s.s2, p[mu]), s2x = weyl::kron(s.s2, x[mu]);
        ops[0].push_back((s1p + s2x).scaled(r));
        ops[1].push_back((s1x - s2p).scaled(r));
        ops[2].push_back((s1x + s2p).scaled(r));
        ops[3].push_back((s1p - s2x).scaled(r));
    }
    return ReducedQuadruple(std::move(conv), std::move(ops));
}

ReducedQuadruple build_reduced(const lct::Signature& sig, ConventionPtr conv) {
    const std::size_t n = sig.dimension();
    require_modes(conv, n);
    std::vector<WeylPoly> p, x;
    for (std::size_t mu = 0; mu < n; ++mu) {
        p.push_back(WeylPoly::p(conv, mu));
        x.push_back(WeylPoly::x(conv, mu));
    }
    return build_reduced(p, x, std::move(conv));
}

DispersionOps build_dispersion(const lct::Signature& sig, ConventionPtr conv) {
    const std::size_t n = sig.dimension();
    require_modes(conv, n);
    DispersionOps d{PolyMatrix(n, n), PolyMatrix(n, n), PolyMatrix(n, n), PolyMatrix(n, n), PolyMatrix(n, n)};
    const ExactScalar quarter = rat(1, 4);
    for (std::size_t mu = 0; mu < n; ++mu)
        for (std::size_t nu = 0; nu < n; ++nu) {
            const WeylPoly pm = WeylPoly::p(conv, mu), pn = WeylPoly::p(conv, nu);
            const WeylPoly xm = WeylPoly::x(conv, mu), xn = WeylPoly::x(conv, nu);
            const WeylPoly pp = weyl::mul(pm, pn), xx = weyl::mul(xm, xn);
            d.zplus(mu, nu) = (pp + xx).scaled(quarter);
            d.zminus(mu, nu) = (pp - xx).scaled(quarter);
            d.zcross(mu, nu) = (weyl::mul(pm, xn) + weyl::mul(xn, pm)).scaled(quarter);
        }
    const ExactScalar half = rat(1, 2);
    for (std::size_t mu = 0; mu < n; ++mu)
        for (std::size_t nu = 0; nu < n; ++nu) {
            d.zcross_sym(mu, nu) = (d.zcross(mu, nu) + d.zcross(nu, mu)).scaled(half);
            d.zcross_anti(mu, nu) = (d.zcross(mu, nu) - d.zcross(nu, mu)).scaled(half);
        }
    return d;
}

VerificationReport product_table_1d(ConventionPtr conv, bool reversed_last_bracket) {
    const lct::Signature sig(1, 0);
    require_modes(conv, 1);
    const ReducedQuadruple q = build_reduced(sig, conv);
    const DispersionOps z = build_dispersion(sig, conv);
    const OperatorPoly& pp = q(Reduced::PPlus, 0);
    const OperatorPoly& xm = q(Reduced::XMinus, 0);
    const OperatorPoly& xp = q(Reduced::XPlus, 0);
    const OperatorPoly& pm = q(Reduced::PMinus, 0);
    const WeylPoly& zp = z.zplus(0, 0);
    const WeylPoly& zm = z.zminus(0, 0);
    const WeylPoly& zx = z.zcross(0, 0);
    using weyl::commutator;

    VerificationReport r;
    r.suite = "products-1d";
    check(r, "p+^2+x-^2-x+^2-p-^2", pp * pp + xm * xm - xp * xp - pm * pm, with_s3(WeylPoly(2)));
    check(r, "[p+,x-]", commutator(pp, xm), with_s3(zp.scaled(imag(-4))) + with_id(WeylPoly(imag(-1))));
    check(r, "[p+,x+]", commutator(pp, xp), with_s3(zm.scaled(imag(4))));
    check(r, "[p+,p-]", commutator(pp, pm), with_s3(zx.scaled(imag(-4))));
    check(r, "[x-,x+]", commutator(xm, xp), with_s3(zx.scaled(imag(4))));
    check(r, "[x-,p-]", commutator(xm, pm), with_s3(zm.scaled(imag(4))));
    check(r, "[x+,p-]", reversed_last_bracket ? commutator(pm, xp) : commutator(xp, pm), with_s3(zp.scaled(imag(-4))) + with_id(WeylPoly(imag(1))));
    return r;
}

const char* cross_reading_name(CrossReading r) {
    switch (r) {
        case CrossReading::Full: return "full";
        case CrossReading::Symmetric: return "symmetric";
        case CrossReading::Antisymmetric: return "antisymmetric";
    }
    return "?";
}

namespace {

const PolyMatrix& cross_part(const DispersionOps& z, CrossReading r) {
    switch (r) {
        case CrossReading::Symmetric: return z.zcross_sym;
        case CrossReading::Antisymmetric: return z.zcross_anti;
        case CrossReading::Full: break;
    }
    return z.zcross;
}

struct NdContext {
    const lct::Signature& sig;
    ReducedQuadruple q;
    DispersionOps z;
};

// Squares: sign +1 for p+p+ and x-x-, -1 for x+x+ and p-p-.
OperatorPoly square_rhs(const NdContext& c, std::size_t mu, std::size_t nu, int sign, const WeylPoly& cross_term) {
    const ExactScalar eta(static_cast<long>(mu == nu ? c.sig.eta(mu) : 0));
    return with_id(c.z.zplus(mu, nu).scaled(rat(2))) + with_s3(cross_term.scaled(imag(sign))) +
           with_s3(WeylPoly(eta * rat(-sign, 2)));
}

struct SquareLine {
    const char* name;
    Reduced op;
    int sign;
};
constexpr std::array<SquareLine, 4> kSquareLines = {{{"p+p+", Reduced::PPlus, 1},
                                                     {"x-x-", Reduced::XMinus, 1},
                                                     {"x+x+", Reduced::XPlus, -1},
                                                     {"p-p-", Reduced::PMinus, -1}}};

// [p+_mu, p-_nu] = -2i s3 (zx_mn + zx_nm) and [x-_nu, x+_mu] = +2i s3 (zx_mn + zx_nm).
struct BracketLine {
    const char* name;
    Reduced left;
    Reduced right;
    bool left_is_mu;
    int sign;
};
constexpr std::array<BracketLine, 2> kCrossBrackets = {{{"[p+_mu,p-_nu]", Reduced::PPlus, Reduced::PMinus, true, -1},
                                                        {"[x-_nu,x+_mu]", Reduced::XMinus, Reduced::XPlus, false, 1}}};

bool square_line_holds(const NdContext& c, const SquareLine& line, CrossReading reading) {
    const PolyMatrix& zx = cross_part(c.z, reading);
    const std::size_t n = c.sig.dimension();
    for (std::size_t mu = 0; mu < n; ++mu)
        for (std::size_t nu = 0; nu < n; ++nu) {
            const OperatorPoly lhs = c.q(line.op, mu) * c.q(line.op, nu);
            if (!weyl::is_zero(lhs - square_rhs(c, mu, nu, line.sign, zx(mu, nu).scaled(rat(2))))) return false;
        }
    return true;
}

OperatorPoly bracket_lhs(const NdContext& c, const BracketLine& line, std::size_t mu, std::size_t nu) {
    const std::size_t a = line.left_is_mu ? mu : nu, b = line.left_is_mu ? nu : mu;
    return weyl::commutator(c.q(line.left, a), c.q(line.right, b));
}

bool bracket_line_holds(const NdContext& c, const BracketLine& line, CrossReading reading) {
    const PolyMatrix& zx = cross_part(c.z, reading);
    const std::size_t n = c.sig.dimension();
    for (std::size_t mu = 0; mu < n; ++mu)
        for (std::size_t nu = 0; nu < n; ++nu)
            if (!weyl::is_zero(bracket_lhs(c, line, mu, nu) - with_s3(zx(mu, nu).scaled(imag(4 * line.sign)))))
                return false;
    return true;
}

NdContext nd_context(const lct::Signature& sig, ConventionPtr conv) {
    if (sig.dimension() > 3)
        throw Error(ErrorKind::SizeLimit, "indexed product table is limited to N <= 3");
    require_modes(conv, sig.dimension());
    return NdContext{sig, build_reduced(sig, conv), build_dispersion(sig, conv)};
}

}  // namespace

VerificationReport product_table_nd(const lct::Signature& sig, ConventionPtr conv, const NdReadings& readings) {
    const NdContext c = nd_context(sig, conv);
    const std::size_t n = sig.dimension();
    const PolyMatrix& zx_sq = cross_part(c.z, readings.squares);
    const PolyMatrix& zx_br = cross_part(c.z, readings.brackets);
    using weyl::commutator;

    VerificationReport r;
    r.suite = "products-nd";
    for (std::size_t mu = 0; mu < n; ++mu)
        for (std::size_t nu = 0; nu < n; ++nu) {
            const ExactScalar eta(static_cast<long>(mu == nu ? sig.eta(mu) : 0));
            const WeylPoly explicit_diff = c.z.zcross(mu, nu) - c.z.zcross(nu, mu);
            for (const SquareLine& line : kSquareLines) {
                const OperatorPoly lhs = c.q(line.op, mu) * c.q(line.op, nu);
                check(r, pair_id(line.name, mu, nu) + "/expanded", lhs, square_rhs(c, mu, nu, line.sign, explicit_diff));
                check(r, pair_id(line.name, mu, nu) + "/compact", lhs,
                      square_rhs(c, mu, nu, line.sign, zx_sq(mu, nu).scaled(rat(2))));
            }
            const auto& pp_m = c.q(Reduced::PPlus, mu);
            check(r, pair_id("[p+_mu,x-_nu]", mu, nu), commutator(pp_m, c.q(Reduced::XMinus, nu)),
                  with_s3(c.z.zplus(mu, nu).scaled(imag(-4))) + with_id(WeylPoly(eta * ExactScalar::i())));
            check(r, pair_id("[p+_mu,x+_nu]", mu, nu), commutator(pp_m, c.q(Reduced::XPlus, nu)),
                  with_s3(c.z.zminus(mu, nu).scaled(imag(4))));
            const WeylPoly explicit_sum = c.z.zcross(mu, nu) + c.z.zcross(nu, mu);
            for (const BracketLine& line : kCrossBrackets) {
                const OperatorPoly lhs = bracket_lhs(c, line, mu, nu);
                check(r, pair_id(line.name, mu, nu) + "/expanded", lhs,
                      with_s3(explicit_sum.scaled(imag(2 * line.sign))));
                check(r, pair_id(line.name, mu, nu) + "/compact", lhs,
                      with_s3(zx_br(mu, nu).scaled(imag(4 * line.sign))));
            }
            check(r, pair_id("[x-_nu,p-_mu]", mu, nu), commutator(c.q(Reduced::XMinus, nu), c.q(Reduced::PMinus, mu)),
                  with_s3(c.z.zminus(mu, nu).scaled(imag(readings.stated_xm_pm_sign ? -4 : 4))));
            check(r, pair_id("[x+_nu,p-_mu]", mu, nu), commutator(c.q(Reduced::XPlus, nu), c.q(Reduced::PMinus, mu)),
                  with_s3(c.z.zplus(mu, nu).scaled(imag(-4))) - with_id(WeylPoly(eta * ExactScalar::i())));
        }
    return r;
}

ReadingSurvey survey_cross_readings(const lct::Signature& sig, ConventionPtr conv) {
    const NdContext c = nd_context(sig, conv);
    constexpr std::array<CrossReading, 3> kReadings = {CrossReading::Full, CrossReading::Symmetric,
                                                       CrossReading::Antisymmetric};
    ReadingSurvey out;
    for (CrossReading reading : kReadings) {
        bool squares = true;
        for (const SquareLine& line : kSquareLines) squares = squares && square_line_holds(c, line, reading);
        if (squares) out.squares.push_back(reading);
        bool brackets = true;
        for (const BracketLine& line : kCrossBrackets) brackets = brackets && bracket_line_holds(c, line, reading);
        if (brackets) out.brackets.push_back(reading);
    }
    return out;
}

VerificationReport infinitesimal_consistency(const lct::LctParams& params, ConventionPtr conv) {
    const lct::Signature& sig = params.signature();
    const std::size_t n = sig.dimension();
    require_modes(conv, n);
    const RationalMatrix a = lct::sl_generator(params);
    const lct::OrthoGenerator x = lct::ortho_generator(params);

    // (p' x') = (p x)(I + A): p'_j = p_j + sum_i p_i A_ij + sum_i x_i A_(N+i)j.
    std::vector<WeylPoly> p1, x1;
    for (std::size_t j = 0; j < n; ++j) {
        WeylPoly pj = WeylPoly::p(conv, j), xj = WeylPoly::x(conv, j);
        for (std::size_t i = 0; i < n; ++i) {
            const WeylPoly pi = WeylPoly::p(conv, i), xi = WeylPoly::x(conv, i);
            pj += pi.scaled(ExactScalar(a(i, j))) + xi.scaled(ExactScalar(a(n + i, j)));
            xj += pi.scaled(ExactScalar(a(i, n + j))) + xi.scaled(ExactScalar(a(n + i, n + j)));
        }
        p1.push_back(std::move(pj));
        x1.push_back(std::move(xj));
    }
    const ReducedQuadruple transformed = build_reduced(p1, x1, conv);
    const ReducedQuadruple base = build_reduced(sig, conv);

    VerificationReport r;
    r.suite = "consistency";
    const std::size_t dim = 4 * n;
    for (std::size_t b = 0; b < dim; ++b) {
        OperatorPoly row_action = base.basis(b);
        for (std::size_t k = 0; k < dim; ++k)
            if (sgn(x.mat(k, b)) != 0) row_action += base.basis(k).scaled(ExactScalar(x.mat(k, b)));
        const Reduced fam = static_cast<Reduced>(b / n);
        check(r, std::string(reduced_name(fam)) + "'_" + std::to_string(b % n), transformed.basis(b), row_action);
    }
    return r;
}

std::vector<ConventionPtr> one_mode_candidates() {
    return {weyl::convention_minus_i(1), weyl::convention_plus_i_eta(lct::Signature(1, 0))};
}

ConventionPtr determine_one_mode_convention() {
    std::vector<ConventionPtr> passing;
    for (const ConventionPtr& c : one_mode_candidates())
        if (product_table_1d(c).all_pass()) passing.push_back(c);
    if (passing.empty())
        throw Error(ErrorKind::NoConsistentConvention, "no candidate convention satisfies the one-mode product table");
    if (passing.size() > 1)
        throw Error(ErrorKind::AmbiguousConvention, "both candidate conventions satisfy the one-mode product table");
    return passing.front();
}

}  // namespace lctspin::phase
