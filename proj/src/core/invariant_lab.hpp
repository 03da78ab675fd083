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

#ifndef LCTSPIN_CORE_INVARIANT_LAB_HPP
#define LCTSPIN_CORE_INVARIANT_LAB_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "core/clifford.hpp"
#include "core/phase_ops.hpp"
#include "core/report.hpp"
#include "core/spin_rep.hpp"

namespace lctspin::invariant {

using weyl::ConventionPtr;
using weyl::OperatorPoly;

/// Modes allowed in the quartic pipeline without an explicit override.
constexpr std::size_t kMaxQuarticModes = 2;

/// P = sum_mu (alpha+^mu (x) p+_mu + beta+^mu (x) x-_mu + beta-^mu (x) x+_mu + alpha-^mu (x) p-_mu),
/// as a (Clifford dim * 2)-square matrix of polynomials linear in the symbols.
struct POperator {
    OperatorPoly op;
    clifford::LctGenerators lg;
    ConventionPtr conv;
};

/// Throws Error(SizeLimit) when N > kMaxQuarticModes unless `unsafe_size`.
POperator build_P(const lct::Signature& sig, ConventionPtr conv, bool unsafe_size = false);

/// Gamma (x) I_2 and I (x) sigma3 on the Clifford (x) sigma factor.
GaussianMatrix with_sigma_identity(const GaussianMatrix& gamma);
GaussianMatrix identity_sigma3(std::size_t clifford_dim);

/// Constant operators of the one-mode square, each a bivector (x) sigma3:
///   U+ = (a+b+ + b-a-)/2, U- = (a+b- + b+a-)/2, Ux = (a+a- - b+b-)/2, U0 = (a+b+ - b-a-)/2.
struct UOperators {
    GaussianMatrix plus, minus, cross, zero;
    const GaussianMatrix& operator[](std::size_t k) const { return k == 0 ? plus : k == 1 ? minus : k == 2 ? cross : zero; }
};
UOperators build_U(const clifford::LctGenerators& lg);
const char* u_name(std::size_t k);

/// Indexed U families, entry mu * N + nu:
///   U+^mn = (a+^m b+^n + b-^n a-^m)/2 (x) s3      U-^mn = (a+^m b-^n + b+^n a-^m)/2 (x) s3
///   Ux^mn = (a+^m a-^n - b+^n b-^m)/2 (x) s3      Ul^mn = (a+^m a+^n + b+^m b+^n - b-^m b-^n - a-^m a-^n)/4 (x) s3
///   U0^mn = (a+^m b+^n - b-^n a-^m)/2 (x) s3
struct IndexedU {
    std::size_t modes = 0;
    std::vector<GaussianMatrix> plus, minus, cross, lambda, zero;
};
IndexedU build_indexed_U(const clifford::LctGenerators& lg);

/// The sixteen products U_a U_b (a, b in +, -, x, 0), each named by the
/// closed form it equals, and the stated relations checked against them.
struct UProductTable {
    std::array<std::array<std::string, 4>, 4> forms;
    VerificationReport stated;
};
UProductTable u_product_table(const clifford::LctGenerators& lg);

/// P^2 split by Weyl degree.
struct SquareSplit {
    OperatorPoly square;
    OperatorPoly quadratic;
    OperatorPoly linear;
    OperatorPoly constant;
};
SquareSplit split_square(const POperator& p);

/// One-mode decomposition of P^2 into D and its constant part, both stated
/// forms of each, and the full residual.
VerificationReport square_decomposition_1d(ConventionPtr conv);

/// Sign choices in the indexed square
///   P^2 = -8i sum_mn [U+ z+ - U- z- + Ux zx_sym + l Ul zx_anti] + c 2(I (x) s3)(N I (x) I_2 - i eta_mn U0^mn).
/// The defaults (l = c = -1) hold under the sign-reconciled convention.
struct NdSquareForm {
    int lambda_sign = -1;
    int constant_sign = -1;
};
VerificationReport square_decomposition_nd(const lct::Signature& sig, ConventionPtr conv, const NdSquareForm& form = {});
/// Q = P^4 + 4 (I (x) s3) P^2 at N = 1, with [theta (x) I_2, Q] checked for the
/// theta, phi, mu directions and `random_directions` seeded draws, plus the
/// negative control that some [theta (x) I_2, P^2] is nonzero.
VerificationReport invariant_commutator(ConventionPtr conv, const spin::SpinConvention& spin_conv,
                                        std::uint64_t seed = 1, int random_directions = 10);

/// Exploratory search at N = 2 (only) over Q_c = P^4 + c (I (x) s3) P^2.
struct ProbeCandidate {
    std::string form;
    bool annihilates_all = false;
};
struct NdInvariantReport {
    std::vector<std::string> directions;
    /// Whether [theta (x) I_2, P^k] is nonzero per direction, k = 2, 4.
    std::vector<std::array<bool, 2>> nonzero;
    std::vector<ProbeCandidate> candidates;
    Json to_json() const;
};
NdInvariantReport nd_invariant_probe(const lct::Signature& sig, ConventionPtr conv,
                                     const spin::SpinConvention& spin_conv, std::uint64_t seed = 1,
                                     bool unsafe_size = false);

}  // namespace lctspin::invariant

#endif
