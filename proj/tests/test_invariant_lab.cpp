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

#include "core/invariant_lab.hpp"

#include <chrono>
#include <random>

#include "core/error.hpp"
#include "doctest.h"

using namespace lctspin;
using namespace lctspin::invariant;

namespace {

const spin::SpinConvention kSpin{1, spin::MuVariant::A, Rational(1, 4)};

const clifford::LctGenerators& one_mode_generators() {
    static const clifford::LctGenerators lg = clifford::label_lct_generators(lct::Signature(1, 0));
    return lg;
}

unsigned top_degree(const OperatorPoly& m) {
    unsigned d = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) d = std::max(d, m(i, j).degree());
    return d;
}

}  // namespace

TEST_CASE("U product table is frozen") {
    const UProductTable t = u_product_table(one_mode_generators());
    const std::array<std::array<std::string, 4>, 4> expected = {{
        {"1/2(eps-I)xI2", "(Ixs3)Ux", "-(Ixs3)U-", "0"},
        {"-(Ixs3)Ux", "-1/2(eps-I)xI2", "-(Ixs3)U+", "0"},
        {"(Ixs3)U-", "(Ixs3)U+", "-1/2(eps-I)xI2", "0"},
        {"0", "0", "0", "-1/2(eps+I)xI2"},
    }};
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
            CHECK_MESSAGE(t.forms[a][b] == expected[a][b], u_name(a) << u_name(b));
    CHECK(t.stated.lines.size() == 14);
    CHECK(t.stated.all_pass());
}

TEST_CASE("volume element squares to one and commutes with every U") {
    const auto& lg = one_mode_generators();
    const GaussianMatrix eps = with_sigma_identity(clifford::volume_element(lg));
    const GaussianMatrix id = GaussianMatrix::identity(eps.rows());
    CHECK(eps * eps == id);
    const UOperators u = build_U(lg);
    for (std::size_t k = 0; k < 4; ++k) CHECK(eps * u[k] == u[k] * eps);
}

TEST_CASE("indexed U reduces to the one-mode U") {
    const auto& lg = one_mode_generators();
    const UOperators u = build_U(lg);
    const IndexedU iu = build_indexed_U(lg);
    CHECK(iu.plus[0] == u.plus);
    CHECK(iu.minus[0] == u.minus);
    CHECK(iu.cross[0] == u.cross);
    CHECK(iu.zero[0] == u.zero);
}

TEST_CASE("one-mode square decomposition holds under [p, x] = -i") {
    const VerificationReport r = square_decomposition_1d(weyl::convention_minus_i(1));
    for (const auto& line : r.lines) CHECK_MESSAGE(line.pass, line.id << " " << line.witness.value_or(""));
    CHECK(r.lines.size() == 5);
}

TEST_CASE("one-mode constant flips sign under [p, x] = +i") {
    const VerificationReport r = square_decomposition_1d(weyl::convention_plus_i_eta(lct::Signature(1, 0)));
    CHECK_FALSE(r.lines[0].pass);
    CHECK_FALSE(r.lines[1].pass);
    CHECK(r.find("top-degree part of P^2 = top-degree part of D")->pass);
}

TEST_CASE("indexed square holds with -2 constant and -Ul zx_anti") {
    for (auto sig : {lct::Signature(1, 0), lct::Signature(2, 0), lct::Signature(1, 1)}) {
        const auto conv = weyl::convention_plus_i_eta(sig);
        CHECK(square_decomposition_nd(sig, conv).all_pass());
        CHECK_FALSE(square_decomposition_nd(sig, conv, {-1, 1}).lines.front().pass);
        if (sig.dimension() > 1) CHECK_FALSE(square_decomposition_nd(sig, conv, {1, -1}).lines.front().pass);
    }
}

TEST_CASE("commutator with P^2 has top degree 2 and the quartic part of P^4 commutes") {
    const POperator p = build_P(lct::Signature(1, 0), weyl::convention_minus_i(1));
    const OperatorPoly p2 = p.op * p.op;
    const OperatorPoly p4 = p2 * p2;
    const OperatorPoly s3 = weyl::lift(identity_sigma3(p.lg.dim()));
    std::mt19937_64 rng(17);
    for (int k = 0; k < 3; ++k) {
        const lct::LctParams params = lct::random_params(lct::Signature(1, 0), rng);
        const OperatorPoly th = weyl::lift(with_sigma_identity(spin::spin_generator(params, p.lg, kSpin).mat));
        const OperatorPoly c2 = weyl::commutator(th, p2), c4 = weyl::commutator(th, p4);
        CHECK(top_degree(c2) == 2);
        CHECK(top_degree(c4) == 2);
        CHECK(c4 == (s3 * c2).scaled(ExactScalar(-4)));
    }
}

TEST_CASE("quartic invariant commutes with every one-mode generator") {
    const VerificationReport r = invariant_commutator(weyl::convention_minus_i(1), kSpin);
    for (const auto& line : r.lines) CHECK_MESSAGE(line.pass, line.id << " " << line.witness.value_or(""));
    CHECK(r.lines.size() == 18);
}

TEST_CASE("quartic invariant depends on the commutator sign") {
    const VerificationReport r = invariant_commutator(weyl::convention_plus_i_eta(lct::Signature(1, 0)), kSpin);
    CHECK_FALSE(r.all_pass());
}

TEST_CASE("indexed quartic probe reports within budget") {
    const lct::Signature sig(2, 0);
    const auto start = std::chrono::steady_clock::now();
    const NdInvariantReport r = nd_invariant_probe(sig, weyl::convention_plus_i_eta(sig), kSpin);
    CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() < 60);
    REQUIRE(r.directions.size() == r.nonzero.size());
    CHECK(r.directions.front() == "theta");
    CHECK(r.nonzero.front()[0]);
    CHECK(r.candidates.size() == 33);
    const Json j = r.to_json();
    CHECK(j.at("exploratory").get<bool>());
}

TEST_CASE("quartic pipeline size guards") {
    CHECK_THROWS_AS(build_P(lct::Signature(3, 0), weyl::convention_plus_i_eta(lct::Signature(3, 0))), Error);
    CHECK_THROWS_AS(nd_invariant_probe(lct::Signature(1, 0), weyl::convention_minus_i(1), kSpin), Error);
}
