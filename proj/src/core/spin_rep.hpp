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

#ifndef LCTSPIN_CORE_SPIN_REP_HPP
#define LCTSPIN_CORE_SPIN_REP_HPP

#include <optional>
#include <string>
#include <vector>

#include "core/clifford.hpp"
#include "core/lct_core.hpp"
#include "core/numeric.hpp"

namespace lctspin::spin {

/// How the mu term of the spin generator is written:
///   A: -(mu/2)(alpha+^m alpha-^n - beta+^n beta-^m), the one-mode form;
///   B: +(mu/2)(alpha+^m alpha-^n + beta+^n beta-^m), the indexed form.
enum class MuVariant { A, B };
const char* mu_variant_name(MuVariant v);

/// A stated-form candidate for the spin generator:
///   sign * eta_nr [ theta_m^r/2 (a+^m b+^n + b-^n a-^m) - phi_m^r/2 (a+^m b-^n + b+^n a-^m)
///                   + mu term + lambda_factor * lambda_m^r (a+^m a+^n + b+^m b+^n - b-^m b-^n - a-^m a-^n) ]
/// with the upper index of a parameter read as the matrix row: theta_m^r = theta(r, m).
struct SpinConvention {
    int sign = 1;
    MuVariant mu_variant = MuVariant::A;
    Rational lambda_factor = Rational(1, 4);

    std::string label() const;
    friend bool operator==(const SpinConvention& a, const SpinConvention& b) {
        return a.sign == b.sign && a.mu_variant == b.mu_variant && a.lambda_factor == b.lambda_factor;
    }
};

struct SpinGenerator {
    GaussianMatrix mat;
    lct::LctParams params;
    /// Empty for the generator built from X directly.
    std::optional<SpinConvention> convention;
};

/// Stated-form generator for the given convention.
SpinGenerator spin_generator(const lct::LctParams& params, const clifford::LctGenerators& lg,
                             const SpinConvention& conv);

/// theta = 1/4 sum_ij X_ji G_jj Gamma_i Gamma_j, the bivector whose adjoint
/// action on the generators is Gamma_b -> sum_a X_ba Gamma_a. Independent of
/// any stated form.
SpinGenerator spin_generator_from_x(const lct::LctParams& params, const clifford::LctGenerators& lg);

/// Max entry of the part of m outside the span of the bivectors Gamma_a Gamma_b (a < b).
Rational bivector_residual(const GaussianMatrix& m, const clifford::LctGenerators& lg);

/// max_b max-entry of [theta, Gamma_b] - sum_a X_ba Gamma_a, exact.
Rational first_order_cover_defect(const GaussianMatrix& theta, const lct::LctParams& params,
                                  const clifford::LctGenerators& lg);
Rational first_order_cover_defect(const lct::LctParams& params, const clifford::LctGenerators& lg,
                                  const SpinConvention& conv);

/// Candidates searched by the probe: sign x mu variant, and at N >= 2 also
/// lambda factor in {1/2, 1/4}. The lambda axis is absent at N = 1 since
/// lambda vanishes there.
std::vector<SpinConvention> probe_candidates(const lct::Signature& sig);

struct ProbeOutcome {
    SpinConvention convention;
    struct Entry {
        SpinConvention candidate;
        Rational max_defect;
    };
    std::vector<Entry> evidence;
};

/// Runs every candidate against `draws` random parameter sets (seeded) and
/// returns the unique one with zero first-order defect on all of them.
/// Throws Error(NoConsistentConvention) or Error(AmbiguousConvention).
ProbeOutcome convention_probe(const lct::Signature& sig, std::uint64_t seed = 1, int draws = 3,
                              const lct::RandomParamOptions& opts = {});
/// Probe on caller-supplied parameters.
ProbeOutcome convention_probe(const lct::Signature& sig, const std::vector<lct::LctParams>& draws);

/// S = exp(theta).
ComplexMatrix spin_element(const SpinGenerator& theta);

/// max_b max-entry of S Gamma_b S^-1 - sum_a O_ba Gamma_a.
double double_cover_defect(const ComplexMatrix& s, const RealMatrix& o, const clifford::LctGenerators& lg);

/// Everything rho(g) produces for one parameter set. S is stored without the
/// trailing identity factor on the sigma space.
struct SpinBundle {
    lct::LctParams params;
    RationalMatrix a;
    lct::GroupElement g;
    lct::OrthoGenerator x;
    RealMatrix o;
    SpinGenerator theta;
    ComplexMatrix s;
    double symplectic_defect = 0;
    Rational ortho_defect = 0;
    double pseudo_orthogonal_defect = 0;
    Rational first_order_defect = 0;
    double double_cover_defect = 0;
    double det_s_defect = 0;
};

SpinBundle rho(const lct::LctParams& params, const clifford::LctGenerators& lg, const SpinConvention& conv);

/// max_b max-entry of S(t) Gamma_b S(t)^-1 - sum_a (I + tX)_ba Gamma_a for
/// the scaled parameters t * params; second order in t.
double linearization_defect(const lct::LctParams& params, const clifford::LctGenerators& lg,
                            const SpinConvention& conv, double t);

/// Least-squares slope of log defect against log t over `ts`.
double scaling_slope(const lct::LctParams& params, const clifford::LctGenerators& lg, const SpinConvention& conv,
                     const std::vector<double>& ts);

/// For S1 = rho(t1 p), S2 = rho(t2 p), S12 = rho((t1 + t2) p): the best-fit
/// scalar c with S1 S2 = c S12, and the residual max-entry of S1 S2 - c S12.
struct CompositionCheck {
    std::complex<double> scalar;
    double residual = 0;
};
CompositionCheck composition_check(const lct::LctParams& direction, const Rational& t1, const Rational& t2,
                                   const clifford::LctGenerators& lg, const SpinConvention& conv);

}  // namespace lctspin::spin

#endif
