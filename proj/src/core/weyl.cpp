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

#include "core/weyl.hpp"

#include <vector>

#include "core/error.hpp"

namespace lctspin::weyl {

Monomial Monomial::bumped(std::size_t k, unsigned e) const {
    if (k >= 2 * kMaxModes) throw Error(ErrorKind::SizeLimit, "mode index exceeds " + std::to_string(kMaxModes));
    if (e == 0) return *this;
    if (field(k) + e > kMaxExponent || degree() + e > 255)
        throw Error(ErrorKind::SizeLimit, "monomial exponent exceeds " + std::to_string(kMaxExponent));
    Monomial m;
    m.key_ = key_ + (std::uint64_t{e} << (4 * k)) + (std::uint64_t{e} << 56);
    return m;
}

Monomial Monomial::drop_x(std::size_t mu) const {
    Monomial m;
    m.key_ = key_ - (std::uint64_t{1} << (4 * mu)) - (std::uint64_t{1} << 56);
    return m;
}

Monomial Monomial::combined(const Monomial& other) const {
    Monomial m = *this;
    for (std::size_t k = 0; k < 2 * kMaxModes; ++k) m = m.bumped(k, other.field(k));
    return m;
}

std::string to_string(const Monomial& m) {
    if (m.is_constant()) return "1";
    std::string out;
    auto emit = [&](char sym, std::size_t mu, unsigned e) {
        if (e == 0) return;
        if (!out.empty()) out += ' ';
        out += sym + std::to_string(mu);
        if (e > 1) out += "^" + std::to_string(e);
    };
    for (std::size_t mu = 0; mu < kMaxModes; ++mu) emit('x', mu, m.xexp(mu));
    for (std::size_t mu = 0; mu < kMaxModes; ++mu) emit('p', mu, m.pexp(mu));
    return out;
}

Convention::Convention(std::string name, GaussianMatrix c) : name_(std::move(name)), c_(std::move(c)) {
    if (c_.rows() != c_.cols() || c_.rows() == 0 || c_.rows() > kMaxModes)
        throw Error(ErrorKind::DimensionMismatch, "commutation constants must be square with 1..7 modes");
    for (std::size_t i = 0; i < c_.rows(); ++i)
        for (std::size_t j = 0; j < c_.cols(); ++j) {
            if (sgn(c_(i, j).re()) != 0)
                throw Error(ErrorKind::ConventionMismatch, "commutation constants must be imaginary");
            scalars_.emplace_back(c_(i, j));
        }
}

ConventionPtr convention_minus_i(std::size_t n) {
    GaussianMatrix c(n, n);
    for (std::size_t mu = 0; mu < n; ++mu) c(mu, mu) = Gaussian(0, -1);
    return std::make_shared<const Convention>("minus_i", std::move(c));
}

namespace {

ConventionPtr eta_convention(const lct::Signature& sig, int sign, const char* name) {
    const std::size_t n = sig.dimension();
    GaussianMatrix c(n, n);
    for (std::size_t mu = 0; mu < n; ++mu) c(mu, mu) = Gaussian(0, sign * sig.eta(mu));
    return std::make_shared<const Convention>(name, std::move(c));
}

}  // namespace

ConventionPtr convention_plus_i_eta(const lct::Signature& sig) { return eta_convention(sig, 1, "plus_i_eta"); }

ConventionPtr convention_minus_i_eta(const lct::Signature& sig) { return eta_convention(sig, -1, "minus_i_eta"); }

WeylPoly::WeylPoly(const ExactScalar& c) {
    if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

WeylPoly WeylPoly::monomial(ConventionPtr conv, Monomial m, ExactScalar c) {
    WeylPoly f;
    f.conv_ = std::move(conv);
    f.add_term(m, c);
    return f;
}

WeylPoly WeylPoly::x(ConventionPtr conv, std::size_t mu) {
    if (!conv || mu >= conv->modes()) throw Error(ErrorKind::DimensionMismatch, "x index outside the convention");
    return monomial(std::move(conv), Monomial::x(mu));
}

WeylPoly WeylPoly::p(ConventionPtr conv, std::size_t mu) {
    if (!conv || mu >= conv->modes()) throw Error(ErrorKind::DimensionMismatch, "p index outside the convention");
    return monomial(std::move(conv), Monomial::p(mu));
}

ExactScalar WeylPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ExactScalar() : it->second;
}

WeylPoly WeylPoly::homogeneous_part(unsigned degree) const {
    WeylPoly out;
    out.conv_ = conv_;
    for (const auto& [m, c] : terms_)
        if (m.degree() == degree) out.terms_.emplace(m, c);
    return out;
}

void WeylPoly::add_term(const Monomial& m, const ExactScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void WeylPoly::adopt(const ConventionPtr& other) {
    if (!other || conv_ == other) return;
    if (!conv_) {
        conv_ = other;
        return;
    }
    if (!(*conv_ == *other))
        throw Error(ErrorKind::ConventionMismatch,
                    "polynomials use different commutation conventions (" + conv_->name() + " vs " + other->name() + ")");
}

WeylPoly WeylPoly::operator-() const {
    WeylPoly out;
    out.conv_ = conv_;
    for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, -c);
    return out;
}

WeylPoly& WeylPoly::operator+=(const WeylPoly& o) {
    adopt(o.conv_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

WeylPoly& WeylPoly::operator-=(const WeylPoly& o) {
    adopt(o.conv_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

WeylPoly& WeylPoly::operator*=(const WeylPoly& o) { return *this = mul(*this, o); }

WeylPoly operator*(const WeylPoly& a, const WeylPoly& b) { return mul(a, b); }

WeylPoly WeylPoly::scaled(const ExactScalar& s) const {
    WeylPoly out;
    out.conv_ = conv_;
    if (s.is_zero()) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, c * s);
    return out;
}

namespace {

using TermList = std::vector<std::pair<Monomial, ExactScalar>>;

// p_mu (x^e p^f) = x^e p^(f + 1_mu) + sum_nu c_mu_nu e_nu x^(e - 1_nu) p^f
TermList left_multiply_p(std::size_t mu, const TermList& terms, const Convention& conv) {
    TermList out;
    out.reserve(2 * terms.size());
    for (const auto& [m, c] : terms) {
        out.emplace_back(m.times_p(mu), c);
        for (std::size_t nu = 0; nu < conv.modes(); ++nu) {
            const unsigned e = m.xexp(nu);
            if (e == 0 || conv(mu, nu).is_zero()) continue;
            out.emplace_back(m.drop_x(nu), c * conv(mu, nu) * ExactScalar(static_cast<long>(e)));
        }
    }
    return out;
}

}  // namespace

WeylPoly mul(const WeylPoly& f, const WeylPoly& g) {
    WeylPoly out;
    out.conv_ = f.conv_;
    out.adopt(g.conv_);
    if (f.is_zero() || g.is_zero()) return out;
    for (const auto& [m1, c1] : f.terms_) {
        // m1 = x^a p^b; split off p^b, which must pass the x factors of m2.
        Monomial xa;
        for (std::size_t mu = 0; mu < kMaxModes; ++mu) xa = xa.times_x(mu, m1.xexp(mu));
        for (const auto& [m2, c2] : g.terms_) {
            const ExactScalar c = c1 * c2;
            if (!m2.has_x()) {
                out.add_term(m1.combined(m2), c);
                continue;
            }
            if (!out.conv_) throw Error(ErrorKind::ConventionMismatch, "reordering requires a commutation convention");
            TermList terms{{m2, c}};
            for (std::size_t mu = 0; mu < kMaxModes; ++mu)
                for (unsigned k = 0; k < m1.pexp(mu); ++k) terms = left_multiply_p(mu, terms, *out.conv_);
            for (const auto& [m, coef] : terms) out.add_term(xa.combined(m), coef);
        }
    }
    return out;
}

WeylPoly commutator(const WeylPoly& f, const WeylPoly& g) { return mul(f, g) - mul(g, f); }

std::string to_string(const WeylPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        if (!out.empty()) out += " + ";
        if (m.is_constant())
            out += to_string(c);
        else if (c.is_one())
            out += to_string(m);
        else
            out += to_string(c) + "·" + to_string(m);
    }
    return out;
}

OperatorPoly mat_mul(const OperatorPoly& f, const OperatorPoly& g) { return f * g; }

OperatorPoly commutator(const OperatorPoly& f, const OperatorPoly& g) { return f * g - g * f; }

bool is_zero(const OperatorPoly& f) { return f.is_zero(); }

OperatorPoly lift(const GaussianMatrix& m) {
    return m.map([](const Gaussian& z) { return WeylPoly(z); });
}

OperatorPoly kron(const GaussianMatrix& a, const WeylPoly& f) {
    return a.map([&](const Gaussian& z) { return f.scaled(ExactScalar(z)); });
}

OperatorPoly kron(const GaussianMatrix& a, const OperatorPoly& f) {
    OperatorPoly out(a.rows() * f.rows(), a.cols() * f.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            const ExactScalar s(a(i, j));
            for (std::size_t k = 0; k < f.rows(); ++k)
                for (std::size_t l = 0; l < f.cols(); ++l)
                    out(i * f.rows() + k, j * f.cols() + l) = f(k, l).scaled(s);
        }
    return out;
}

std::string to_string(const OperatorPoly& f) {
    std::string out;
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) {
            if (f(i, j).is_zero()) continue;
            if (!out.empty()) out += "; ";
            out += "(" + std::to_string(i) + "," + std::to_string(j) + "): " + to_string(f(i, j));
        }
    return out.empty() ? "0" : out;
}

}  // namespace lctspin::weyl
