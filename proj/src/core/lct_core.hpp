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

#ifndef LCTSPIN_CORE_LCT_CORE_HPP
#define LCTSPIN_CORE_LCT_CORE_HPP

#include <cstdint>
#include <random>

#include "core/matrix.hpp"
#include "core/numeric.hpp"

/// Parameterization of linear canonical transformations and the matching
/// pseudo-orthogonal generator on the reduced-operator space.
///
/// Conventions (row-vector action throughout):
///   (p' x') = (p x) g,   g = exp(A),   A = [[lambda+mu, phi-theta], [phi+theta, lambda-mu]]
///   (p+ x- x+ p-)' = (p+ x- x+ p-)(I + X)   to first order
///
/// Invariant bilinear form of the group element. With [z_i, z_j] = c K_ij for
/// z = (p x) and [p_mu, x_nu] = c eta_mu_nu (either sign of c), K is
/// [[0, eta], [-eta, 0]]. For z' = z g the commutators become c (g^T K g), so
/// g preserves the canonical relations iff g^T K g = K, and the algebra
/// condition is A^T K + K A = 0.
///
/// X preserves G = diag(eta, eta, -eta, -eta): X G + G X^T = 0.
namespace lctspin::lct {

class Signature {
   public:
    Signature(int n_plus, int n_minus);

    int plus() const { return plus_; }
    int minus() const { return minus_; }
    std::size_t dimension() const { return static_cast<std::size_t>(plus_ + minus_); }

    /// eta_mu_mu: +1 for the first `plus` indices, -1 after.
    int eta(std::size_t mu) const { return static_cast<int>(mu) < plus_ ? 1 : -1; }
    RationalMatrix metric() const;

    friend bool operator==(const Signature&, const Signature&) = default;

   private:
    int plus_;
    int minus_;
};

class LctParams {
   public:
    static LctParams zero(const Signature& sig);

    const Signature& signature() const { return sig_; }
    std::size_t dimension() const { return sig_.dimension(); }
    const RationalMatrix& theta() const { return theta_; }
    const RationalMatrix& phi() const { return phi_; }
    const RationalMatrix& mu() const { return mu_; }
    const RationalMatrix& lambda() const { return lambda_; }

    /// t * params; the constraints are linear so the result stays valid.
    LctParams scaled(const Rational& t) const;
    LctParams operator+(const LctParams& other) const;

   private:
    friend LctParams validate_params(RationalMatrix, RationalMatrix, RationalMatrix, RationalMatrix,
                                     const Signature&);
    LctParams(Signature sig, RationalMatrix theta, RationalMatrix phi, RationalMatrix mu,
              RationalMatrix lambda)
        : sig_(sig),
          theta_(std::move(theta)),
          phi_(std::move(phi)),
          mu_(std::move(mu)),
          lambda_(std::move(lambda)) {}

    Signature sig_;
    RationalMatrix theta_;
    RationalMatrix phi_;
    RationalMatrix mu_;
    RationalMatrix lambda_;
};

/// Checks the parameter constraints exactly, in this order:
///   theta^T = eta theta eta, phi^T = eta phi eta, mu^T = eta mu eta,
///   trace(lambda) = 0, lambda^T = -eta lambda eta.
/// Throws ConstraintViolation or Error(DimensionMismatch).
LctParams validate_params(RationalMatrix theta, RationalMatrix phi, RationalMatrix mu,
                          RationalMatrix lambda, const Signature& sig);

/// The 2N x 2N generator A with g = exp(A).
RationalMatrix sl_generator(const LctParams& params);

/// K = [[0, eta], [-eta, 0]].
RationalMatrix symplectic_form(const Signature& sig);

/// Max entry of A^T K + K A; zero iff A is in the pseudo-symplectic algebra.
Rational symplectic_algebra_defect(const RationalMatrix& a, const Signature& sig);

class GroupElement {
   public:
    explicit GroupElement(RealMatrix mat) : mat_(std::move(mat)) {}

    const RealMatrix& matrix() const { return mat_; }
    std::size_t dimension() const { return static_cast<std::size_t>(mat_.rows() / 2); }

    // Blocks of g = [[Pi, Xi], [Theta, Lambda]].
    RealMatrix pi_block() const { return block(0, 0); }
    RealMatrix xi_block() const { return block(0, 1); }
    RealMatrix theta_block() const { return block(1, 0); }
    RealMatrix lambda_block() const { return block(1, 1); }

   private:
    RealMatrix block(int bi, int bj) const {
        const Eigen::Index n = mat_.rows() / 2;
        return mat_.block(bi * n, bj * n, n, n);
    }
    RealMatrix mat_;
};

GroupElement group_element(const LctParams& params);

/// Max entry of g^T K g - K.
double symplectic_defect(const RealMatrix& g, const Signature& sig);
inline double symplectic_defect(const GroupElement& g, const Signature& sig) {
    return symplectic_defect(g.matrix(), sig);
}

/// G = diag(eta, eta, -eta, -eta), the form preserved on (p+ x- x+ p-).
RationalMatrix ortho_metric(const Signature& sig);

struct OrthoGenerator {
    RationalMatrix mat;
    Signature sig;
};

/// X = [[lambda, -theta, phi, mu], [theta, lambda, -mu, phi],
///      [phi, -mu, lambda, theta], [mu, phi, -theta, lambda]].
OrthoGenerator ortho_generator(const LctParams& params);

/// Max entry of X G + G X^T, exact.
Rational ortho_defect(const OrthoGenerator& x);

/// exp(X). Throws Error(ExpDivergence).
RealMatrix special_orthogonal_element(const OrthoGenerator& x);

/// Max entry of O^T G O - G.
double pseudo_orthogonal_defect(const RealMatrix& o, const Signature& sig);

/// Which parameter families a random draw populates.
struct RandomParamOptions {
    int max_denominator = 4;
    bool theta = true;
    bool phi = true;
    bool mu = true;
    bool lambda = true;
};

/// Random constrained parameters with entries p/q, 1 <= q <= max_denominator,
/// |p/q| <= 1. Enabled families are redrawn until nonzero (lambda at N = 1
/// is always zero). Deterministic for a given engine state on all platforms.
LctParams random_params(const Signature& sig, std::mt19937_64& rng, const RandomParamOptions& opts = {});

}  // namespace lctspin::lct

#endif
