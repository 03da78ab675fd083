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

#ifndef LCTSPIN_CORE_PHASE_OPS_HPP
#define LCTSPIN_CORE_PHASE_OPS_HPP

#include <array>
#include <vector>

#include "core/lct_core.hpp"
#include "core/report.hpp"
#include "core/weyl.hpp"

namespace lctspin::phase {

using weyl::ConventionPtr;
using weyl::OperatorPoly;
using weyl::WeylPoly;
using PolyMatrix = Matrix<WeylPoly>;

/// sigma1, sigma2 from the C(2,0) generators, sigma3 = sigma1 sigma2 / i.
struct Pauli {
    GaussianMatrix s1, s2, s3;
};
const Pauli& pauli();

/// Order of the reduced operators in the row vector acted on by I + X.
enum class Reduced { PPlus = 0, XMinus = 1, XPlus = 2, PMinus = 3 };
const char* reduced_name(Reduced r);

/// p+, x-, x+, p- per mode as 2x2 sigma-coefficient operator matrices:
///   p+ = (s1 p + s2 x)/sqrt2    x- = (s1 x - s2 p)/sqrt2
///   x+ = (s1 x + s2 p)/sqrt2    p- = (s1 p - s2 x)/sqrt2
class ReducedQuadruple {
   public:
    ReducedQuadruple(ConventionPtr conv, std::array<std::vector<OperatorPoly>, 4> ops)
        : conv_(std::move(conv)), ops_(std::move(ops)) {}

    std::size_t modes() const { return ops_[0].size(); }
    const ConventionPtr& convention() const { return conv_; }
    const OperatorPoly& operator()(Reduced r, std::size_t mu) const { return ops_[static_cast<std::size_t>(r)][mu]; }
    /// Basis index b = family * N + mu, matching the pseudo-orthogonal generator.
    const OperatorPoly& basis(std::size_t b) const { return ops_[b / modes()][b % modes()]; }

   private:
    ConventionPtr conv_;
    std::array<std::vector<OperatorPoly>, 4> ops_;
};

ReducedQuadruple build_reduced(const lct::Signature& sig, ConventionPtr conv);
/// Quadruple over arbitrary momentum and position polynomials (one per mode).
ReducedQuadruple build_reduced(const std::vector<WeylPoly>& p, const std::vector<WeylPoly>& x, ConventionPtr conv);

/// z+_mn = (p_m p_n + x_m x_n)/4, z-_mn = (p_m p_n - x_m x_n)/4,
/// zx_mn = (p_m x_n + x_n p_m)/4 and its symmetric/antisymmetric parts in (m, n).
struct DispersionOps {
    PolyMatrix zplus;
    PolyMatrix zminus;
    PolyMatrix zcross;
    PolyMatrix zcross_sym;
    PolyMatrix zcross_anti;
};
DispersionOps build_dispersion(const lct::Signature& sig, ConventionPtr conv);

/// The seven one-mode product identities. The last bracket is evaluated as
/// [x+, p-] = x+ p- - p- x+, or as p- x+ - x+ p- when `reversed_last_bracket`.
VerificationReport product_table_1d(ConventionPtr conv, bool reversed_last_bracket = false);

/// Which part of zx stands in the compact right-hand sides.
enum class CrossReading { Full, Symmetric, Antisymmetric };
const char* cross_reading_name(CrossReading r);

struct NdReadings {
    /// Compact forms of the four squares p+p+, x-x-, x+x+, p-p-.
    CrossReading squares = CrossReading::Antisymmetric;
    /// Compact forms of [p+, p-] and [x-, x+].
    CrossReading brackets = CrossReading::Symmetric;
    /// false replaces the stated -4i in [x-_nu, p-_mu] = -4i s3 z-_mn by the
    /// computed +4i.
    bool stated_xm_pm_sign = true;
};

/// Every line of the indexed product table over all pairs (mu, nu). Lines
/// stated with two right-hand sides are checked once per form.
/// Throws Error(SizeLimit) when N > 3.
VerificationReport product_table_nd(const lct::Signature& sig, ConventionPtr conv, const NdReadings& readings = {});

/// For each compact line, the zx readings under which it holds at every index pair.
struct ReadingSurvey {
    std::vector<CrossReading> squares;
    std::vector<CrossReading> brackets;
};
ReadingSurvey survey_cross_readings(const lct::Signature& sig, ConventionPtr conv);

/// Row action check: the quadruple rebuilt from first-order transformed
/// symbols (p' x') = (p x)(I + A) equals (quadruple)(I + X), exactly.
VerificationReport infinitesimal_consistency(const lct::LctParams& params, ConventionPtr conv);

/// Candidate conventions for the one-mode table, [p, x] = -i and [p, x] = +i.
std::vector<ConventionPtr> one_mode_candidates();

/// The unique candidate passing all seven one-mode lines. Throws
/// Error(NoConsistentConvention) or Error(AmbiguousConvention).
ConventionPtr determine_one_mode_convention();

}  // namespace lctspin::phase

#endif
