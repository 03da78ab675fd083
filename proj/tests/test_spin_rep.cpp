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
#include <random>

#include "core/error.hpp"
#include "doctest.h"

using namespace lctspin;
using namespace lctspin::spin;
using clifford::Family;
using clifford::LctGenerators;

namespace {

const SpinConvention kSelected{1, MuVariant::A, Rational(1, 4)};

lct::LctParams one_mode(const char* which, const Rational& v) {
    RationalMatrix m(1, 1), z(1, 1);
    m(0, 0) = v;
    const std::string w = which;
    return lct::validate_params(w == "theta" ? m : z, w == "phi" ? m : z, w == "mu" ? m : z, z,
                                lct::Signature(1, 0));
}

ComplexMatrix gamma(const LctGenerators& lg, Family f) { return to_complex(lg(f, 0)); }

}  // namespace

TEST_CASE("convention labels") {
    CHECK(kSelected.label() == "+/A/lambda*1/4");
    CHECK(SpinConvention{-1, MuVariant::B, Rational(1, 2)}.label() == "-/B/lambda*1/2");
}

TEST_CASE("generator built from X is a bivector with zero first-order defect") {
    std::mt19937_64 rng(3);
    for (auto sig : {lct::Signature(1, 0), lct::Signature(0, 1), lct::Signature(2, 0), lct::Signature(1, 1),
                     lct::Signature(0, 2)}) {
        const LctGenerators lg = clifford::label_lct_generators(sig);
        for (int k = 0; k < 5; ++k) {
            const lct::LctParams p = lct::random_params(sig, rng);
            const SpinGenerator th = spin_generator_from_x(p, lg);
            CHECK(bivector_residual(th.mat, lg) == 0);
            CHECK(first_order_cover_defect(th.mat, p, lg) == 0);
        }
    }
}

TEST_CASE("selected stated form equals the generator built from X") {
    std::mt19937_64 rng(5);
    for (auto sig : {lct::Signature(1, 0), lct::Signature(2, 0), lct::Signature(1, 1), lct::Signature(0, 2)}) {
        const LctGenerators lg = clifford::label_lct_generators(sig);
        for (int k = 0; k < 5; ++k) {
            const lct::LctParams p = lct::random_params(sig, rng);
            CHECK(spin_generator(p, lg, kSelected).mat == spin_generator_from_x(p, lg).mat);
            CHECK(first_order_cover_defect(p, lg, kSelected) == 0);
        }
    }
}

TEST_CASE("stated lambda factor 1/2 misses the first-order identity") {
    const lct::Signature sig(2, 0);
    const LctGenerators lg = clifford::label_lct_generators(sig);
    std::mt19937_64 rng(8);
    const lct::LctParams p = lct::random_params(sig, rng, {4, false, false, false, true});
    REQUIRE_FALSE(p.lambda().is_zero());
    CHECK(first_order_cover_defect(p, lg, {1, MuVariant::A, Rational(1, 2)}) != 0);
    CHECK(first_order_cover_defect(p, lg, kSelected) == 0);
}

TEST_CASE("probe selects a unique convention") {
    for (auto sig : {lct::Signature(1, 0), lct::Signature(0, 1), lct::Signature(2, 0), lct::Signature(1, 1)}) {
        const ProbeOutcome out = convention_probe(sig);
        CHECK(out.convention == kSelected);
        CHECK(out.evidence.size() == (sig.dimension() == 1 ? 4u : 8u));
        int zero = 0;
        for (const auto& e : out.evidence) zero += e.max_defect == 0 ? 1 : 0;
        CHECK(zero == 1);
    }
}

TEST_CASE("probe without evidence is ambiguous") {
    const lct::Signature sig(1, 0);
    try {
        convention_probe(sig, std::vector<lct::LctParams>{lct::LctParams::zero(sig)});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::AmbiguousConvention);
    }
}

TEST_CASE("spin element matches closed forms for one-mode rotations and squeezes") {
    const LctGenerators lg = clifford::label_lct_generators(lct::Signature(1, 0));
    const ComplexMatrix id = ComplexMatrix::Identity(static_cast<Eigen::Index>(lg.dim()), static_cast<Eigen::Index>(lg.dim()));
    const ComplexMatrix ap = gamma(lg, Family::AlphaPlus), bp = gamma(lg, Family::BetaPlus);
    const ComplexMatrix bm = gamma(lg, Family::BetaMinus), am = gamma(lg, Family::AlphaMinus);

    // theta-only: generator t/2 (a+ b+ + b- a-), both terms square to -1 and commute.
    const double t = 0.75;
    const ComplexMatrix rot = (std::cos(t / 2) * id + std::sin(t / 2) * ap * bp) *
                              (std::cos(t / 2) * id + std::sin(t / 2) * bm * am);
    CHECK(max_abs_entry(ComplexMatrix(spin_element(spin_generator_from_x(one_mode("theta", Rational(3, 4)), lg)) - rot)) <
          1e-13);

    // mu-only: generator m/2 (b+ b- - a+ a-), both terms square to +1 and commute.
    const double m = 0.5;
    const ComplexMatrix sq = (std::cosh(m / 2) * id - std::sinh(m / 2) * ap * am) *
                             (std::cosh(m / 2) * id + std::sinh(m / 2) * bp * bm);
    CHECK(max_abs_entry(ComplexMatrix(spin_element(spin_generator_from_x(one_mode("mu", Rational(1, 2)), lg)) - sq)) <
          1e-13);
}

TEST_CASE("S and -S cover the same pseudo-orthogonal element") {
    std::mt19937_64 rng(13);
    for (auto sig : {lct::Signature(1, 0), lct::Signature(2, 0), lct::Signature(1, 1)}) {
        const LctGenerators lg = clifford::label_lct_generators(sig);
        const double tol = sig.dimension() == 1 ? 1e-8 : 1e-7;
        for (int k = 0; k < 4; ++k) {
            const SpinBundle b = rho(lct::random_params(sig, rng), lg, kSelected);
            CHECK(b.ortho_defect == 0);
            CHECK(b.first_order_defect == 0);
            CHECK(b.symplectic_defect < 1e-10);
            CHECK(b.pseudo_orthogonal_defect < 1e-8);
            CHECK(b.double_cover_defect < tol);
            CHECK(double_cover_defect(ComplexMatrix(-b.s), b.o, lg) < tol);
            CHECK(b.det_s_defect < 1e-8);
        }
    }
}

TEST_CASE("linearization defect is second order") {
    std::mt19937_64 rng(21);
    for (auto sig : {lct::Signature(1, 0), lct::Signature(2, 0)}) {
        const LctGenerators lg = clifford::label_lct_generators(sig);
        const double slope = scaling_slope(lct::random_params(sig, rng), lg, kSelected, {0.1, 0.05, 0.025, 0.0125});
        CHECK(slope >= 1.9);
        CHECK(slope <= 2.1);
    }
}

TEST_CASE("spin elements compose along one direction") {
    const LctGenerators lg = clifford::label_lct_generators(lct::Signature(1, 0));
    const CompositionCheck c = composition_check(one_mode("theta", 1), Rational(1, 3), Rational(1, 2), lg, kSelected);
    CHECK(std::abs(c.scalar - std::complex<double>(1, 0)) < 1e-12);
    CHECK(c.residual < 1e-12);
}
