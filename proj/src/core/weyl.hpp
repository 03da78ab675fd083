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

#ifndef LCTSPIN_CORE_WEYL_HPP
#define LCTSPIN_CORE_WEYL_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>

#include "core/lct_core.hpp"
#include "core/matrix.hpp"

namespace lctspin::weyl {

constexpr std::size_t kMaxModes = 7;
constexpr unsigned kMaxExponent = 15;

/// Normal-ordered monomial x_0^e0 ... x_{N-1}^e{N-1} p_0^f0 ... p_{N-1}^f{N-1}.
/// Packed as 4-bit exponents (x fields below p fields) under an 8-bit total
/// degree, so key order sorts by degree first.
class Monomial {
   public:
    Monomial() = default;

    static Monomial x(std::size_t mu, unsigned e = 1) { return Monomial().times_x(mu, e); }
    static Monomial p(std::size_t mu, unsigned e = 1) { return Monomial().times_p(mu, e); }

    unsigned xexp(std::size_t mu) const { return field(mu); }
    unsigned pexp(std::size_t mu) const { return field(kMaxModes + mu); }
    unsigned degree() const { return static_cast<unsigned>(key_ >> 56); }
    bool is_constant() const { return key_ == 0; }
    bool has_x() const { return (key_ & kXMask) != 0; }

    /// Throws Error(SizeLimit) when an exponent would exceed kMaxExponent.
    Monomial times_x(std::size_t mu, unsigned e = 1) const { return bumped(mu, e); }
    Monomial times_p(std::size_t mu, unsigned e = 1) const { return bumped(kMaxModes + mu, e); }
    /// Requires xexp(mu) >= 1.
    Monomial drop_x(std::size_t mu) const;

    /// Commutative product of the exponent vectors.
    Monomial combined(const Monomial& other) const;

    std::uint64_t key() const { return key_; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.key_ < b.key_; }

   private:
    static constexpr std::uint64_t kXMask = (std::uint64_t{1} << (4 * kMaxModes)) - 1;
    unsigned field(std::size_t k) const { return static_cast<unsigned>((key_ >> (4 * k)) & 0xF); }
    Monomial bumped(std::size_t k, unsigned e) const;

    std::uint64_t key_ = 0;
};

/// "x0^2 p1"; the constant monomial prints as "1".
std::string to_string(const Monomial& m);

/// Canonical commutation constants c with [p_mu, x_nu] = c_mu_nu.
/// Entries must be purely imaginary.
class Convention {
   public:
    Convention(std::string name, GaussianMatrix c);

    const std::string& name() const { return name_; }
    std::size_t modes() const { return c_.rows(); }
    const ExactScalar& operator()(std::size_t mu, std::size_t nu) const { return scalars_[mu * modes() + nu]; }
    const GaussianMatrix& matrix() const { return c_; }

    friend bool operator==(const Convention& a, const Convention& b) { return a.c_ == b.c_; }

   private:
    std::string name_;
    GaussianMatrix c_;
    std::vector<ExactScalar> scalars_;
};

using ConventionPtr = std::shared_ptr<const Convention>;

/// [p_mu, x_nu] = -i delta_mu_nu.
ConventionPtr convention_minus_i(std::size_t n);
/// [p_mu, x_nu] = +i eta_mu_nu.
ConventionPtr convention_plus_i_eta(const lct::Signature& sig);
/// [p_mu, x_nu] = -i eta_mu_nu.
ConventionPtr convention_minus_i_eta(const lct::Signature& sig);

/// Sparse polynomial over Q(i)[sqrt 2] in normal order. A null convention
/// marks a constant that adopts the convention of whatever it meets.
class WeylPoly {
   public:
    using Terms = std::map<Monomial, ExactScalar>;

    WeylPoly() = default;
    WeylPoly(long c) : WeylPoly(ExactScalar(c)) {}
    WeylPoly(const Gaussian& c) : WeylPoly(ExactScalar(c)) {}
    WeylPoly(const ExactScalar& c);

    static WeylPoly x(ConventionPtr conv, std::size_t mu);
    static WeylPoly p(ConventionPtr conv, std::size_t mu);
    static WeylPoly monomial(ConventionPtr conv, Monomial m, ExactScalar c = ExactScalar(1));

    const Terms& terms() const { return terms_; }
    const ConventionPtr& convention() const { return conv_; }
    bool is_zero() const { return terms_.empty(); }
    /// Highest total degree; 0 for constants and the zero polynomial.
    unsigned degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }
    ExactScalar coefficient(const Monomial& m) const;

    /// Terms of exactly the given total degree.
    WeylPoly homogeneous_part(unsigned degree) const;

    WeylPoly operator-() const;
    WeylPoly& operator+=(const WeylPoly& o);
    WeylPoly& operator-=(const WeylPoly& o);
    WeylPoly& operator*=(const WeylPoly& o);
    WeylPoly scaled(const ExactScalar& s) const;

    friend WeylPoly operator+(WeylPoly a, const WeylPoly& b) { return a += b; }
    friend WeylPoly operator-(WeylPoly a, const WeylPoly& b) { return a -= b; }
    friend WeylPoly operator*(const WeylPoly& a, const WeylPoly& b);
    /// Coefficient maps only; conventions are not compared.
    friend bool operator==(const WeylPoly& a, const WeylPoly& b) { return a.terms_ == b.terms_; }

   private:
    friend WeylPoly mul(const WeylPoly& f, const WeylPoly& g);
    void add_term(const Monomial& m, const ExactScalar& c);
    void adopt(const ConventionPtr& other);

    ConventionPtr conv_;
    Terms terms_;
};

/// Normal-ordered product. Throws Error(ConventionMismatch) when both
/// operands carry different conventions.
WeylPoly mul(const WeylPoly& f, const WeylPoly& g);
WeylPoly commutator(const WeylPoly& f, const WeylPoly& g);
inline bool is_zero(const WeylPoly& f) { return f.is_zero(); }

/// Debug form, e.g. "(3/2 + 1/2√2 i)·x0^2 p1 + -i·x0", highest degree first.
std::string to_string(const WeylPoly& f);

/// Square matrix of polynomials: sigma (x) operator or Gamma (x) operator objects.
using OperatorPoly = Matrix<WeylPoly>;

OperatorPoly mat_mul(const OperatorPoly& f, const OperatorPoly& g);
OperatorPoly commutator(const OperatorPoly& f, const OperatorPoly& g);
bool is_zero(const OperatorPoly& f);

/// Constant matrix lifted entrywise.
OperatorPoly lift(const GaussianMatrix& m);
/// a (x) f: every entry a_ij f.
OperatorPoly kron(const GaussianMatrix& a, const WeylPoly& f);
/// Block Kronecker product a (x) F.
OperatorPoly kron(const GaussianMatrix& a, const OperatorPoly& f);

/// Every nonzero entry as "(i,j): poly", joined by "; ". "0" when zero.
std::string to_string(const OperatorPoly& f);

}  // namespace lctspin::weyl

#endif
