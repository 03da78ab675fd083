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

#include "core/lct_core.hpp"

#include "core/error.hpp"

namespace lctspin::lct {

Signature::Signature(int n_plus, int n_minus) : plus_(n_plus), minus_(n_minus) {
    if (n_plus < 0 || n_minus < 0 || n_plus + n_minus < 1)
        throw Error(ErrorKind::DimensionMismatch,
                    "signature (" + std::to_string(n_plus) + "," + std::to_string(n_minus) +
                        ") needs nonnegative counts with N >= 1");
}

RationalMatrix Signature::metric() const {
    const std::size_t n = dimension();
    RationalMatrix eta(n, n);
    for (std::size_t i = 0; i < n; ++i) eta(i, i) = this->eta(i);
    return eta;
}

LctParams LctParams::zero(const Signature& sig) {
    const std::size_t n = sig.dimension();
    return LctParams(sig, RationalMatrix(n, n), RationalMatrix(n, n), RationalMatrix(n, n),
                     RationalMatrix(n, n));
}

LctParams LctParams::scaled(const Rational& t) const {
    return LctParams(sig_, theta_.scaled(t), phi_.scaled(t), mu_.scaled(t), lambda_.scaled(t));
}

LctParams LctParams::operator+(const LctParams& o) const {
    if (!(sig_ == o.sig_)) throw Error(ErrorKind::DimensionMismatch, "adding parameters of different signature");
    return LctParams(sig_, theta_ + o.theta_, phi_ + o.phi_, mu_ + o.mu_, lambda_ + o.lambda_);
}

namespace {

void check_square(const RationalMatrix& m, std::size_t n, const char* name) {
    if (m.rows() != n || m.cols() != n)
        throw Error(ErrorKind::DimensionMismatch, std::string(name) + " is " + m.shape() + ", expected " +
                                                      std::to_string(n) + "x" + std::to_string(n));
}

// Throws unless m^T == sign * eta m eta.
void check_eta_symmetry(const RationalMatrix& m, const RationalMatrix& eta, int sign,
                        const std::string& constraint, const std::string& failure) {
    RationalMatrix rhs = (eta * m * eta).scaled(Rational(sign));
    RationalMatrix diff = m.transpose() - rhs;
    if (!diff.is_zero()) throw ConstraintViolation(constraint, failure, to_string(max_abs_entry(diff)));
}

}  // namespace

LctParams validate_params(RationalMatrix theta, RationalMatrix phi, RationalMatrix mu, RationalMatrix lambda,
                          const Signature& sig) {
    const std::size_t n = sig.dimension();
    check_square(theta, n, "theta");
    check_square(phi, n, "phi");
    check_square(mu, n, "mu");
    check_square(lambda, n, "lambda");

    const RationalMatrix eta = sig.metric();
    check_eta_symmetry(theta, eta, 1, "theta^T = eta theta eta", "theta^T != eta theta eta");
    check_eta_symmetry(phi, eta, 1, "phi^T = eta phi eta", "phi^T != eta phi eta");
    check_eta_symmetry(mu, eta, 1, "mu^T = eta mu eta", "mu^T != eta mu eta");

    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += lambda(i, i);
    if (sgn(trace) != 0) throw ConstraintViolation("trace(lambda) = 0", "trace(lambda) != 0", to_string(abs(trace)));
    check_eta_symmetry(lambda, eta, -1, "lambda^T = -eta lambda eta", "lambda^T != -eta lambda eta");

    return LctParams(sig, std::move(theta), std::move(phi), std::move(mu), std::move(lambda));
}

RationalMatrix sl_generator(const LctParams& p) {
    const std::size_t n = p.dimension();
    RationalMatrix a(2 * n, 2 * n);
    a.set_block(0, 0, p.lambda() + p.mu());
    a.set_block(0, n, p.phi() - p.theta());
    a.set_block(n, 0, p.phi() + p.theta());
    a.set_block(n, n, p.lambda() - p.mu());
    return a;
}

RationalMatrix symplectic_form(const Signature& sig) {
    const std::size_t n = sig.dimension();
    RationalMatrix k(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        k(i, n + i) = sig.eta(i);
        k(n + i, i) = -sig.eta(i);
    }
    return k;
}

Rational symplectic_algebra_defect(const RationalMatrix& a, const Signature& sig) {
    const RationalMatrix k = symplectic_form(sig);
    return max_abs_entry(a.transpose() * k + k * a);
}

GroupElement group_element(const LctParams& params) { return GroupElement(expm(to_real(sl_generator(params)))); }

double symplectic_defect(const RealMatrix& g, const Signature& sig) {
    if (g.rows() != g.cols() || static_cast<std::size_t>(g.rows()) != 2 * sig.dimension())
        throw Error(ErrorKind::DimensionMismatch, "group element does not match the signature");
    const RealMatrix k = to_real(symplectic_form(sig));
    return max_abs_entry(RealMatrix(g.transpose() * k * g - k));
}

RationalMatrix ortho_metric(const Signature& sig) {
    const std::size_t n = sig.dimension();
    RationalMatrix g(4 * n, 4 * n);
    for (std::size_t block = 0; block < 4; ++block)
        for (std::size_t i = 0; i < n; ++i) g(block * n + i, block * n + i) = (block < 2 ? 1 : -1) * sig.eta(i);
    return g;
}

OrthoGenerator ortho_generator(const LctParams& p) {
    const std::size_t n = p.dimension();
    const RationalMatrix& th = p.theta();
    const RationalMatrix& ph = p.phi();
    const RationalMatrix& mu = p.mu();
    const RationalMatrix& la = p.lambda();
    const RationalMatrix layout[4][4] = {
        {la, -th, ph, mu},
        {th, la, -mu, ph},
        {ph, -mu, la, th},
        {mu, ph, -th, la},
    };
    RationalMatrix x(4 * n, 4 * n);
    for (std::size_t bi = 0; bi < 4; ++bi)
        for (std::size_t bj = 0; bj < 4; ++bj) x.set_block(bi * n, bj * n, layout[bi][bj]);
    return {std::move(x), p.signature()};
}

Rational ortho_defect(const OrthoGenerator& x) {
    const RationalMatrix g = ortho_metric(x.sig);
    if (x.mat.rows() != g.rows() || x.mat.cols() != g.cols())
        throw Error(ErrorKind::DimensionMismatch, "generator " + x.mat.shape() + " does not match the signature");
    return max_abs_entry(x.mat * g + g * x.mat.transpose());
}

RealMatrix special_orthogonal_element(const OrthoGenerator& x) { return expm(to_real(x.mat)); }

double pseudo_orthogonal_defect(const RealMatrix& o, const Signature& sig) {
    const RealMatrix g = to_real(ortho_metric(sig));
    if (o.rows() != g.rows() || o.cols() != g.cols())
        throw Error(ErrorKind::DimensionMismatch, "orthogonal element does not match the signature");
    return max_abs_entry(RealMatrix(o.transpose() * g * o - g));
}

namespace {

Rational random_entry(std::mt19937_64& rng, int max_den) {
    const auto den = static_cast<long>(rng() % static_cast<std::uint64_t>(max_den)) + 1;
    const auto num = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * den + 1)) - den;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Fills the free entries (upper triangle, plus diagonal unless antisymmetric)
// and sets the rest from m_ji = sign * eta_i eta_j m_ij.
RationalMatrix random_constrained(const Signature& sig, std::mt19937_64& rng, int max_den, int sign) {
    const std::size_t n = sig.dimension();
    RationalMatrix m(n, n);
    for (int attempt = 0; attempt < 64; ++attempt) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                if (i == j && sign < 0) continue;
                m(i, j) = random_entry(rng, max_den);
                if (i != j) m(j, i) = Rational(sign * sig.eta(i) * sig.eta(j)) * m(i, j);
            }
        if (!m.is_zero()) break;
    }
    return m;
}

}  // namespace

LctParams random_params(const Signature& sig, std::mt19937_64& rng, const RandomParamOptions& opts) {
    const std::size_t n = sig.dimension();
    const int den = opts.max_denominator < 1 ? 1 : opts.max_denominator;
    RationalMatrix zero(n, n);
    RationalMatrix theta = opts.theta ? random_constrained(sig, rng, den, 1) : zero;
    RationalMatrix phi = opts.phi ? random_constrained(sig, rng, den, 1) : zero;
    RationalMatrix mu = opts.mu ? random_constrained(sig, rng, den, 1) : zero;
    RationalMatrix lambda = opts.lambda && n > 1 ? random_constrained(sig, rng, den, -1) : zero;
    return validate_params(std::move(theta), std::move(phi), std::move(mu), std::move(lambda), sig);
}

}  // namespace lctspin::lct
