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

#include "core/phase_ops.hpp"

#include <random>
#include <set>

#include "core/error.hpp"
#include "doctest.h"

using namespace lctspin;
using namespace lctspin::phase;
using weyl::WeylPoly;

namespace {

std::set<std::string> failing(const VerificationReport& r) {
    std::set<std::string> out;
    for (const auto& line : r.lines)
        if (!line.pass) out.insert(line.id);
    return out;
}

OperatorPoly with_sigma(const GaussianMatrix& s, const WeylPoly& f) { return weyl::kron(s, f); }

}  // namespace

TEST_CASE("pauli matrices") {
    const Pauli& s = pauli();
    const GaussianMatrix id = GaussianMatrix::identity(2);
    CHECK(s.s1 * s.s1 == id);
    CHECK(s.s2 * s.s2 == id);
    CHECK(s.s3 * s.s3 == id);
    CHECK(s.s1 * s.s2 == s.s3.scaled(Gaussian::i()));
}

TEST_CASE("reduced operator squares match a hand expansion") {
    // With [p, x] = -i and s1 s2 = i s3:
    //   (p+)^2 = (x-)^2 = (p^2 + x^2)/2 + s3/2,  (x+)^2 = (p-)^2 = (p^2 + x^2)/2 - s3/2.
    const auto conv = weyl::convention_minus_i(1);
    const ReducedQuadruple q = build_reduced(lct::Signature(1, 0), conv);
    const WeylPoly p = WeylPoly::p(conv, 0), x = WeylPoly::x(conv, 0);
    const WeylPoly half_sq = (p * p + x * x).scaled(ExactScalar(Rational(1, 2)));
    const GaussianMatrix id = GaussianMatrix::identity(2);
    const OperatorPoly up = with_sigma(id, half_sq) + with_sigma(pauli().s3, WeylPoly(Gaussian(Rational(1, 2))));
    const OperatorPoly down = with_sigma(id, half_sq) - with_sigma(pauli().s3, WeylPoly(Gaussian(Rational(1, 2))));
    CHECK(q(Reduced::PPlus, 0) * q(Reduced::PPlus, 0) == up);
    CHECK(q(Reduced::XMinus, 0) * q(Reduced::XMinus, 0) == up);
    CHECK(q(Reduced::XPlus, 0) * q(Reduced::XPlus, 0) == down);
    CHECK(q(Reduced::PMinus, 0) * q(Reduced::PMinus, 0) == down);
}

TEST_CASE("one-mode product table selects [p, x] = -i") {
    const auto candidates = one_mode_candidates();
    REQUIRE(candidates.size() == 2);
    const VerificationReport minus = product_table_1d(candidates[0]);
    CHECK(minus.lines.size() == 7);
    CHECK(minus.all_pass());
    CHECK(failing(product_table_1d(candidates[1])) ==
          std::set<std::string>{"p+^2+x-^2-x+^2-p-^2", "[p+,x-]", "[x+,p-]"});
    CHECK(determine_one_mode_convention()->name() == "minus_i");
}

TEST_CASE("last one-mode bracket fails in the reversed order under both candidates") {
    for (const auto& c : one_mode_candidates()) CHECK(failing(product_table_1d(c, true)).count("[x+,p-]") == 1);
}

TEST_CASE("indexed product table fails only the x- p- line as stated") {
    for (auto sig : {lct::Signature(1, 0), lct::Signature(2, 0), lct::Signature(1, 1)}) {
        const auto conv = weyl::convention_plus_i_eta(sig);
        const VerificationReport stated = product_table_nd(sig, conv);
        const std::size_t n = sig.dimension();
        CHECK(stated.lines.size() == 16 * n * n);
        for (const std::string& id : failing(stated)) CHECK(id.rfind("[x-_nu,p-_mu]", 0) == 0);
        CHECK(failing(stated).size() == n * n);

        NdReadings corrected;
        corrected.stated_xm_pm_sign = false;
        CHECK(product_table_nd(sig, conv, corrected).all_pass());
    }
}

TEST_CASE("indexed product table rejects -i eta on the squares") {
    const lct::Signature sig(2, 0);
    const auto fails = failing(product_table_nd(sig, weyl::convention_minus_i_eta(sig)));
    CHECK(fails.count("p+p+[0,0]/expanded") == 1);
    CHECK(fails.count("[p+_mu,x-_nu][0,0]") == 1);
}

TEST_CASE("cross readings are unique per line group") {
    for (auto sig : {lct::Signature(2, 0), lct::Signature(1, 1)}) {
        const ReadingSurvey s = survey_cross_readings(sig, weyl::convention_plus_i_eta(sig));
        CHECK(s.squares == std::vector<CrossReading>{CrossReading::Antisymmetric});
        CHECK(s.brackets == std::vector<CrossReading>{CrossReading::Symmetric});
    }
}

TEST_CASE("dispersion cross parts split zx") {
    const lct::Signature sig(2, 0);
    const DispersionOps z = build_dispersion(sig, weyl::convention_plus_i_eta(sig));
    for (std::size_t m = 0; m < 2; ++m)
        for (std::size_t n = 0; n < 2; ++n) {
            CHECK(z.zcross_sym(m, n) + z.zcross_anti(m, n) == z.zcross(m, n));
            CHECK(z.zcross_sym(m, n) == z.zcross_sym(n, m));
            CHECK(z.zcross_anti(m, n) == -z.zcross_anti(n, m));
        }
}

TEST_CASE("reduced operators transform by I + X on random parameters") {
    std::mt19937_64 rng(11);
    for (auto sig : {lct::Signature(1, 0), lct::Signature(0, 1), lct::Signature(2, 0), lct::Signature(1, 1)}) {
        const auto conv = weyl::convention_plus_i_eta(sig);
        for (int k = 0; k < 5; ++k) {
            const VerificationReport r = infinitesimal_consistency(lct::random_params(sig, rng), conv);
            CHECK(r.lines.size() == 4 * sig.dimension());
            CHECK(r.all_pass());
        }
    }
}

TEST_CASE("indexed table is capped at three modes") {
    const lct::Signature sig(4, 0);
    CHECK_THROWS_AS(product_table_nd(sig, weyl::convention_plus_i_eta(sig)), Error);
}
