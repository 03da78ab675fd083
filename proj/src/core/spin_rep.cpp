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

#include "core/spin_rep.hpp"

#include <cmath>

#include "core/error.hpp"

namespace lctspin::spin {

using clifford::Family;
using clifford::LctGenerators;

const char* mu_variant_name(MuVariant v) { return v == MuVariant::A ? "A" : "B"; }

std::string SpinConvention::label() const {
    return std::string(sign > 0 ? "+" : "-") + "/" + mu_variant_name(mu_variant) + "/lambda*" + to_string(lambda_factor);
}

namespace {

void require_match(const lct::LctParams& params, const LctGenerators& lg) {
    if (!(params.signature() == lg.signature()))
        throw Error(ErrorKind::DimensionMismatch, "parameters and generators use different signatures");
}

GaussianMatrix pair(const LctGenerators& lg, Family f, std::size_t m, Family h, std::size_t n) {
    return lg(f, m) * lg(h, n);
}

}  // namespace

SpinGenerator spin_generator(const lct::LctParams& params, const LctGenerators& lg, const SpinConvention& conv) {
    require_match(params, lg);
    const std::size_t n = lg.modes();
    const lct::Signature& sig = lg.signature();
    constexpr Family AP = Family::AlphaPlus, BP = Family::BetaPlus, BM = Family::BetaMinus, AM = Family::AlphaMinus;
    GaussianMatrix out(lg.dim(), lg.dim());
    const Rational half(1, 2);
    // eta_nr contracts the second generator index nu with the parameter row rho.
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t r = 0; r < n; ++r) {
            const Rational eta(sig.eta(r));
            const Rational th = params.theta()(r, m), ph = params.phi()(r, m);
            const Rational mu = params.mu()(r, m), la = params.lambda()(r, m);
            if (sgn(th) != 0)
                out += (pair(lg, AP, m, BP, r) + pair(lg, BM, r, AM, m)).scaled(Gaussian(eta * th * half));
            if (sgn(ph) != 0)
                out -= (pair(lg, AP, m, BM, r) + pair(lg, BP, r, AM, m)).scaled(Gaussian(eta * ph * half));
            if (sgn(mu) != 0) {
                if (conv.mu_variant == MuVariant::A)
                    out -= (pair(lg, AP, m, AM, r) - pair(lg, BP, r, BM, m)).scaled(Gaussian(eta * mu * half));
                else
                    out += (pair(lg, AP, m, AM, r) + pair(lg, BP, r, BM, m)).scaled(Gaussian(eta * mu * half));
            }
            if (sgn(la) != 0)
                out += (pair(lg, AP, m, AP, r) + pair(lg, BP, m, BP, r) - pair(lg, BM, m, BM, r) -
                        pair(lg, AM, m, AM, r))
                           .scaled(Gaussian(eta * la * conv.lambda_factor));
        }
    if (conv.sign < 0) out = -out;
    return SpinGenerator{std::move(out), params, conv};
}

SpinGenerator spin_generator_from_x(const lct::LctParams& params, const LctGenerators& lg) {
    require_match(params, lg);
    const lct::OrthoGenerator x = lct::ortho_generator(params);
    const std::size_t dim = lg.basis_size();
    GaussianMatrix out(lg.dim(), lg.dim());
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            if (i == j || sgn(x.mat(j, i)) == 0) continue;
            const Rational c = x.mat(j, i) * lg.basis_square(j) / 4;
            out += (lg.basis(i) * lg.basis(j)).scaled(Gaussian(c));
        }
    return SpinGenerator{std::move(out), params, std::nullopt};
}

Rational bivector_residual(const GaussianMatrix& m, const LctGenerators& lg) {
    GaussianMatrix rest = m;
    const std::size_t dim = lg.basis_size();
    const Rational inv_dim(1, static_cast<long>(lg.dim()));
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = a + 1; b < dim; ++b) {
            // (G_a G_b)^-1 = G_b G_a / (g_aa g_bb)
            const GaussianMatrix inv = (lg.basis(b) * lg.basis(a)).scaled(Gaussian(lg.basis_square(a) * lg.basis_square(b)));
            const GaussianMatrix prod = inv * m;
            Gaussian trace;
            for (std::size_t i = 0; i < prod.rows(); ++i) trace += prod(i, i);
            if (!trace.is_zero()) rest -= (lg.basis(a) * lg.basis(b)).scaled(trace * Gaussian(inv_dim));
        }
    return max_abs_entry(rest);
}

Rational first_order_cover_defect(const GaussianMatrix& theta, const lct::LctParams& params, const LctGenerators& lg) {
    require_match(params, lg);
    const lct::OrthoGenerator x = lct::ortho_generator(params);
    Rational worst = 0;
    for (std::size_t b = 0; b < lg.basis_size(); ++b) {
        GaussianMatrix diff = commutator(theta, lg.basis(b));
        for (std::size_t a = 0; a < lg.basis_size(); ++a)
            if (sgn(x.mat(b, a)) != 0) diff -= lg.basis(a).scaled(Gaussian(x.mat(b, a)));
        const Rational d = max_abs_entry(diff);
        if (d > worst) worst = d;
    }
    return worst;
}

Rational first_order_cover_defect(const lct::LctParams& params, const LctGenerators& lg, const SpinConvention& conv) {
    return first_order_cover_defect(spin_generator(params, lg, conv).mat, params, lg);
}

std::vector<SpinConvention> probe_candidates(const lct::Signature& sig) {
    std::vector<Rational> lambda_factors = {Rational(1, 4)};
    if (sig.dimension() >= 2) lambda_factors = {Rational(1, 2), Rational(1, 4)};
    std::vector<SpinConvention> out;
    for (int sign : {1, -1})
        for (MuVariant v : {MuVariant::A, MuVariant::B})
            for (const Rational& f : lambda_factors) out.push_back(SpinConvention{sign, v, f});
    return out;
}

ProbeOutcome convention_probe(const lct::Signature& sig, const std::vector<lct::LctParams>& draws) {
    const LctGenerators lg = clifford::label_lct_generators(sig);
    ProbeOutcome outcome;
    std::vector<SpinConvention> passing;
    for (const SpinConvention& cand : probe_candidates(sig)) {
        Rational worst = 0;
        for (const lct::LctParams& p : draws) {
            const Rational d = first_order_cover_defect(p, lg, cand);
            if (d > worst) worst = d;
        }
        outcome.evidence.push_back({cand, worst});
        if (sgn(worst) == 0) passing.push_back(cand);
    }
    if (passing.empty())
        throw Error(ErrorKind::NoConsistentConvention, "no spin generator candidate has zero first-order defect");
    if (passing.size() > 1) {
        std::string names;
        for (const SpinConvention& c : passing) names += (names.empty() ? "" : ", ") + c.label();
        throw Error(ErrorKind::AmbiguousConvention, "several spin generator candidates pass: " + names);
    }
    outcome.convention = passing.front();
    return outcome;
}

ProbeOutcome convention_probe(const lct::Signature& sig, std::uint64_t seed, int draws,
                              const lct::RandomParamOptions& opts) {
    std::mt19937_64 rng(seed);
    std::vector<lct::LctParams> params;
    for (int k = 0; k < draws; ++k) params.push_back(lct::random_params(sig, rng, opts));
    return convention_probe(sig, params);
}

ComplexMatrix spin_element(const SpinGenerator& theta) { return expm(to_complex(theta.mat)); }

namespace {

template <class Coeff>
double adjoint_defect(const ComplexMatrix& s, const ComplexMatrix& s_inv, const Coeff& coeff, const LctGenerators& lg) {
    double worst = 0;
    std::vector<ComplexMatrix> gens;
    for (std::size_t b = 0; b < lg.basis_size(); ++b) gens.push_back(to_complex(lg.basis(b)));
    for (std::size_t b = 0; b < gens.size(); ++b) {
        ComplexMatrix diff = s * gens[b] * s_inv;
        for (std::size_t a = 0; a < gens.size(); ++a) diff -= coeff(b, a) * gens[a];
        worst = std::max(worst, max_abs_entry(diff));
    }
    return worst;
}

}  // namespace

double double_cover_defect(const ComplexMatrix& s, const RealMatrix& o, const LctGenerators& lg) {
    const ComplexMatrix s_inv = s.inverse();
    return adjoint_defect(s, s_inv, [&](std::size_t b, std::size_t a) { return o(b, a); }, lg);
}

SpinBundle rho(const lct::LctParams& params, const LctGenerators& lg, const SpinConvention& conv) {
    SpinGenerator theta = spin_generator(params, lg, conv);
    lct::OrthoGenerator x = lct::ortho_generator(params);
    lct::GroupElement g = lct::group_element(params);
    SpinBundle b{params, lct::sl_generator(params), g, x, lct::special_orthogonal_element(x), theta, spin_element(theta)};
    b.symplectic_defect = lct::symplectic_defect(b.g, params.signature());
    b.ortho_defect = lct::ortho_defect(b.x);
    b.pseudo_orthogonal_defect = lct::pseudo_orthogonal_defect(b.o, params.signature());
    b.first_order_defect = first_order_cover_defect(b.theta.mat, params, lg);
    b.double_cover_defect = double_cover_defect(b.s, b.o, lg);
    b.det_s_defect = std::abs(b.s.determinant() - std::complex<double>(1.0));
    return b;
}

double linearization_defect(const lct::LctParams& params, const LctGenerators& lg, const SpinConvention& conv,
                            double t) {
    const ComplexMatrix theta = to_complex(spin_generator(params, lg, conv).mat);
    const RealMatrix x = to_real(lct::ortho_generator(params).mat);
    const ComplexMatrix s = expm(ComplexMatrix(theta * t));
    const ComplexMatrix s_inv = expm(ComplexMatrix(theta * -t));
    return adjoint_defect(
        s, s_inv, [&](std::size_t b, std::size_t a) { return (b == a ? 1.0 : 0.0) + t * x(b, a); }, lg);
}

double scaling_slope(const lct::LctParams& params, const LctGenerators& lg, const SpinConvention& conv,
                     const std::vector<double>& ts) {
    if (ts.size() < 2) throw Error(ErrorKind::DimensionMismatch, "slope needs at least two scales");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (double t : ts) {
        const double lx = std::log(t), ly = std::log(linearization_defect(params, lg, conv, t));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double n = static_cast<double>(ts.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

CompositionCheck composition_check(const lct::LctParams& direction, const Rational& t1, const Rational& t2,
                                   const LctGenerators& lg, const SpinConvention& conv) {
    const ComplexMatrix s1 = spin_element(spin_generator(direction.scaled(t1), lg, conv));
    const ComplexMatrix s2 = spin_element(spin_generator(direction.scaled(t2), lg, conv));
    const ComplexMatrix s12 = spin_element(spin_generator(direction.scaled(t1 + t2), lg, conv));
    const ComplexMatrix prod = s1 * s2;
    const std::complex<double> c = (s12.adjoint() * prod).trace() / (s12.adjoint() * s12).trace();
    return CompositionCheck{c, max_abs_entry(ComplexMatrix(prod - c * s12))};
}

}  // namespace lctspin::spin
