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

#include <random>

#include "core/error.hpp"
#include "doctest.h"

using namespace lctspin;
using namespace lctspin::weyl;

namespace {

const ExactScalar I = ExactScalar::i();

ExactScalar random_scalar(std::mt19937_64& rng) {
    auto q = [&] { return Rational(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1); };
    return ExactScalar(Gaussian(q(), q()), Gaussian(q(), q()));
}

WeylPoly random_poly(std::mt19937_64& rng, const ConventionPtr& conv, int max_terms = 4, unsigned max_exp = 2) {
    WeylPoly f;
    const int terms = 1 + static_cast<int>(rng() % max_terms);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (std::size_t mu = 0; mu < conv->modes(); ++mu) {
            m = m.times_x(mu, static_cast<unsigned>(rng() % (max_exp + 1)));
            m = m.times_p(mu, static_cast<unsigned>(rng() % (max_exp + 1)));
        }
        f += WeylPoly::monomial(conv, m, random_scalar(rng));
    }
    return f;
}

OperatorPoly random_matrix(std::mt19937_64& rng, const ConventionPtr& conv, std::size_t n) {
    OperatorPoly m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (rng() % 3 != 0) m(i, j) = random_poly(rng, conv, 2, 1);
    return m;
}

}  // namespace

TEST_CASE("reordering rules under [p,x] = -i") {
    const ConventionPtr c = convention_minus_i(1);
    const WeylPoly x = WeylPoly::x(c, 0), p = WeylPoly::p(c, 0);
    CHECK(mul(x, p) == WeylPoly::monomial(c, Monomial::x(0).times_p(0)));
    CHECK(mul(p, x) == WeylPoly::monomial(c, Monomial::x(0).times_p(0)) - WeylPoly(I));
    const WeylPoly pxx = mul(mul(p, x), x);
    CHECK(pxx == WeylPoly::monomial(c, Monomial::x(0, 2).times_p(0)) - x.scaled(ExactScalar(2) * I));
    CHECK(commutator(x, x).is_zero());
    CHECK(commutator(x, p) == WeylPoly(I));
    CHECK(commutator(mul(p, p), x) == p.scaled(ExactScalar(-2) * I));
}

TEST_CASE("indefinite convention flips the sign on timelike modes") {
    const ConventionPtr c = convention_plus_i_eta(lct::Signature(1, 1));
    for (std::size_t mu = 0; mu < 2; ++mu)
        for (std::size_t nu = 0; nu < 2; ++nu) {
            const WeylPoly k = commutator(WeylPoly::p(c, mu), WeylPoly::x(c, nu));
            const long expect = mu != nu ? 0 : (mu == 0 ? 1 : -1);
            CHECK(k == WeylPoly(Gaussian(0, expect)));
        }
}

TEST_CASE("mixing conventions is an error") {
    const WeylPoly a = WeylPoly::x(convention_minus_i(1), 0);
    const WeylPoly b = WeylPoly::p(convention_plus_i_eta(lct::Signature(1, 0)), 0);
    CHECK_THROWS_AS(mul(a, b), Error);
    CHECK_THROWS_AS(a + b, Error);
    CHECK_NOTHROW(a + WeylPoly(3));
}

TEST_CASE("debug format") {
    const ConventionPtr c = convention_minus_i(2);
    const ExactScalar coef(Gaussian(Rational(3, 2)), Gaussian(0, Rational(1, 2)));
    CHECK(to_string(WeylPoly::monomial(c, Monomial::x(0, 2).times_p(1), coef)) == "(3/2 + 1/2√2 i)·x0^2 p1");
    CHECK(to_string(WeylPoly()) == "0");
    CHECK(to_string(WeylPoly::x(c, 1)) == "x1");
}

TEST_CASE("exponent overflow is a size error") {
    CHECK_THROWS_AS(Monomial::x(0, 15).times_x(0), Error);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(11);
    for (const ConventionPtr& c : {convention_minus_i(1), convention_plus_i_eta(lct::Signature(1, 1))}) {
        for (int k = 0; k < 40; ++k) {
            const WeylPoly f = random_poly(rng, c), g = random_poly(rng, c), h = random_poly(rng, c);
            CHECK(mul(mul(f, g), h) == mul(f, mul(g, h)));
            CHECK(mul(f, g + h) == mul(f, g) + mul(f, h));
            CHECK(mul(f + g, h) == mul(f, h) + mul(g, h));
            CHECK(commutator(f, g) == -commutator(g, f));
            CHECK((f - f).is_zero());
        }
    }
}

TEST_CASE("leading degree is additive") {
    std::mt19937_64 rng(5);
    const ConventionPtr c = convention_minus_i(2);
    for (int k = 0; k < 40; ++k) {
        const WeylPoly f = random_poly(rng, c), g = random_poly(rng, c);
        const WeylPoly fg = mul(f, g);
        CHECK(fg.degree() == f.degree() + g.degree());
        // top-degree part is the commutative product of the top parts
        const WeylPoly commuted = mul(g, f);
        CHECK(fg.homogeneous_part(fg.degree()) == commuted.homogeneous_part(commuted.degree()));
    }
}

TEST_CASE("scalar ring identities") {
    std::mt19937_64 rng(2);
    for (int k = 0; k < 30; ++k) {
        const Gaussian a(Rational(static_cast<long>(rng() % 9) - 4, 3)), b(Rational(static_cast<long>(rng() % 9) - 4, 5));
        const ExactScalar s(a, b);
        CHECK(s * s.galois_conjugate() == ExactScalar(a * a - Gaussian(2) * b * b));
    }
}

TEST_CASE("operator matrices") {
    std::mt19937_64 rng(17);
    const ConventionPtr c = convention_minus_i(1);
    const OperatorPoly id = OperatorPoly::identity(2);
    for (int k = 0; k < 10; ++k) {
        const OperatorPoly f = random_matrix(rng, c, 2), g = random_matrix(rng, c, 2), h = random_matrix(rng, c, 2);
        CHECK(mat_mul(f, id) == f);
        CHECK(mat_mul(mat_mul(f, g), h) == mat_mul(f, mat_mul(g, h)));
        CHECK(is_zero(f - f));
    }
    GaussianMatrix s1(2, 2), s2(2, 2);
    s1(0, 1) = 1;
    s1(1, 0) = 1;
    s2(0, 1) = Gaussian(0, -1);
    s2(1, 0) = Gaussian(0, 1);
    const WeylPoly p = WeylPoly::p(c, 0), x = WeylPoly::x(c, 0);
    CHECK(mat_mul(kron(s1, p), kron(s2, x)) == kron(s1 * s2, mul(p, x)));
    CHECK_THROWS_AS(mat_mul(OperatorPoly(2, 3), OperatorPoly(2, 3)), Error);
    CHECK(is_zero(lift(s1) - kron(s1, WeylPoly(1))));
}

TEST_CASE("[p,x] minus c vanishes exactly") {
    const ConventionPtr c = convention_minus_i(1);
    const WeylPoly p = WeylPoly::p(c, 0), x = WeylPoly::x(c, 0);
    CHECK(is_zero(lift(GaussianMatrix::identity(1)).scaled(mul(p, x) - mul(x, p) - WeylPoly(Gaussian(0, -1)))));
}
