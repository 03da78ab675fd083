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

#ifndef LCTSPIN_CORE_CLIFFORD_HPP
#define LCTSPIN_CORE_CLIFFORD_HPP

#include <array>
#include <string>
#include <vector>

#include "core/lct_core.hpp"
#include "core/matrix.hpp"
#include "core/report.hpp"

namespace lctspin::clifford {

constexpr int kMaxGenerators = 12;

/// Matrix generators of C(p, q): Gamma_a Gamma_b + Gamma_b Gamma_a = 2 metric_ab I.
/// Entries lie in {0, +-1, +-i}.
struct GeneratorSet {
    int p = 0;
    int q = 0;
    std::size_t dim = 0;
    std::vector<GaussianMatrix> gens;
    std::vector<int> metric;
};

/// Jordan-Wigner ladder of Pauli factors for C(p+q, 0) on ceil((p+q)/2)
/// qubits; the last q generators are then multiplied by i.
/// Throws Error(SizeLimit) unless 1 <= p+q <= 12.
GeneratorSet build_generators(int p, int q);

/// Max entry over all pairs of Gamma_a Gamma_b + Gamma_b Gamma_a - 2 metric_ab I.
Rational relation_defect(const GeneratorSet& set);

/// The four generator families, in the order of the reduced-operator basis
/// (p+, x-, x+, p-) they pair with: alpha+ <-> p+, beta+ <-> x-,
/// beta- <-> x+, alpha- <-> p-.
enum class Family { AlphaPlus = 0, BetaPlus = 1, BetaMinus = 2, AlphaMinus = 3 };
constexpr std::array<Family, 4> kFamilies = {Family::AlphaPlus, Family::BetaPlus, Family::BetaMinus,
                                             Family::AlphaMinus};

/// +1 for alpha+/beta+, -1 for beta-/alpha-.
constexpr int family_sign(Family f) { return f == Family::AlphaPlus || f == Family::BetaPlus ? 1 : -1; }
const char* family_name(Family f);

/// Generators of C(2N, 2N) labeled alpha+^mu, beta+^mu, beta-^mu, alpha-^mu.
/// Basis index b = family * N + mu; this is also the row/column order of the
/// pseudo-orthogonal generator X.
class LctGenerators {
   public:
    LctGenerators(lct::Signature sig, std::size_t dim, std::array<std::vector<GaussianMatrix>, 4> families);

    const lct::Signature& signature() const { return sig_; }
    std::size_t modes() const { return sig_.dimension(); }
    std::size_t dim() const { return dim_; }

    const GaussianMatrix& operator()(Family f, std::size_t mu) const {
        return families_[static_cast<std::size_t>(f)][mu];
    }

    std::size_t basis_size() const { return 4 * modes(); }
    const GaussianMatrix& basis(std::size_t b) const { return (*this)(kFamilies[b / modes()], b % modes()); }
    /// Gamma_b^2 = basis_square(b) I, i.e. family_sign * eta_mu_mu.
    int basis_square(std::size_t b) const;
    std::string basis_label(std::size_t b) const;

    /// Flat generator list in basis order with its metric.
    GeneratorSet as_set() const;

   private:
    lct::Signature sig_;
    std::size_t dim_;
    std::array<std::vector<GaussianMatrix>, 4> families_;
};

/// Builds C(2N, 2N) and assigns generators to families so that alpha+, beta+
/// realize +eta and beta-, alpha- realize -eta. Assignment is lexicographic:
/// for mu = 0..N-1 and family in basis order, take the next unused raw
/// generator whose square has the required sign.
LctGenerators label_lct_generators(const lct::Signature& sig);
LctGenerators label_lct_generators(std::size_t n, const lct::Signature& sig);

/// Product of all generators in basis order (alpha+ beta+ beta- alpha- at N = 1).
GaussianMatrix volume_element(const LctGenerators& lg);

/// Coefficients of m in the generator basis (trace inner product), and the
/// residual of m outside their span.
struct BasisDecomposition {
    std::vector<Gaussian> coefficients;
    bool in_span = false;
};
BasisDecomposition decompose(const GaussianMatrix& m, const LctGenerators& lg);
std::string describe(const BasisDecomposition& d, const LctGenerators& lg);

/// Bivector commutator tables. Each stated line "[A B, C] = rhs" is
/// evaluated by exact matrix arithmetic; `derived` lines use the general
/// identity [G_a G_b, G_c] = 2 g_bc G_a - 2 g_ac G_b instead of the stated rhs.
enum class TableForm { Stated, Derived };

/// Unindexed table for C(2,2); requires signature (1,0).
VerificationReport comm_table_1d(const LctGenerators& lg, TableForm form = TableForm::Stated);

/// Indexed table over every index triple (mu, nu, rho).
VerificationReport comm_table_check(const LctGenerators& lg, TableForm form = TableForm::Stated);

/// Rows of `tables` output: each stated line with its computed value.
Json comm_table_dump(const LctGenerators& lg);

}  // namespace lctspin::clifford

#endif
