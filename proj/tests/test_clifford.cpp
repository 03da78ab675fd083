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

#include "core/clifford.hpp"

#include <set>

#include "core/error.hpp"
#include "doctest.h"

using namespace lctspin;
using namespace lctspin::clifford;

TEST_CASE("generator relations hold exactly for small signatures") {
    for (auto [p, q] : {std::pair{1, 0}, {0, 1}, {2, 0}, {1, 1}, {2, 2}, {3, 2}, {4, 4}}) {
        const GeneratorSet set = build_generators(p, q);
        CHECK(set.gens.size() == static_cast<std::size_t>(p + q));
        CHECK(set.dim == (std::size_t{1} << ((p + q + 1) / 2)));
        CHECK(relation_defect(set) == 0);
    }
}

TEST_CASE("generator count outside 1..12 is a size error") {
    CHECK_THROWS_AS(build_generators(0, 0), Error);
    CHECK_THROWS_AS(build_generators(7, 6), Error);
    CHECK_NOTHROW(build_generators(6, 6));
}

TEST_CASE("labeled generators square to the family metric") {
    for (auto sig : {lct::Signature(1, 0), lct::Signature(0, 1), lct::Signature(1, 1), lct::Signature(2, 0)}) {
        const LctGenerators lg = label_lct_generators(sig);
        const GeneratorSet set = lg.as_set();
        CHECK(relation_defect(set) == 0);
        CHECK(set.p == set.q);
    }
}

TEST_CASE("decompose recovers a generator") {
    const LctGenerators lg = label_lct_generators(lct::Signature(1, 1));
    for (std::size_t b = 0; b < lg.basis_size(); ++b) {
        const BasisDecomposition d = decompose(lg.basis(b), lg);
        CHECK(d.in_span);
        for (std::size_t c = 0; c < lg.basis_size(); ++c) CHECK(d.coefficients[c] == Gaussian(c == b ? 1 : 0));
    }
    CHECK_FALSE(decompose(volume_element(lg), lg).in_span);
}

TEST_CASE("unindexed bivector table holds line by line") {
    const LctGenerators lg = label_lct_generators(lct::Signature(1, 0));
    const VerificationReport r = comm_table_1d(lg);
    CHECK(r.lines.size() == 24);
    for (const auto& line : r.lines) CHECK_MESSAGE(line.pass, line.id << " " << line.witness.value_or(""));
}

TEST_CASE("general bivector identity holds over every index triple") {
    for (auto sig : {lct::Signature(1, 0), lct::Signature(1, 1), lct::Signature(0, 2)}) {
        const LctGenerators lg = label_lct_generators(sig);
        CHECK(comm_table_check(lg, TableForm::Derived).all_pass());
    }
}

TEST_CASE("stated indexed table fails exactly the seven recorded lines") {
    const VerificationReport r = comm_table_check(label_lct_generators(lct::Signature(1, 0)), TableForm::Stated);
    CHECK(r.lines.size() == 40);
    std::set<std::string> failing;
    for (const auto& line : r.lines)
        if (!line.pass) failing.insert(line.id.substr(line.id.find('/') + 1));
    CHECK(failing == std::set<std::string>{"[alpha+0 alpha+0,alpha+0]", "[beta+0 beta+0,beta+0]",
                                           "[beta-0 beta-0,beta-0]", "[alpha-0 alpha-0,alpha-0]",
                                           "[alpha+0 alpha-0,alpha-0]", "[beta+0 beta-0,beta+0]",
                                           "[beta+0 alpha-0,beta+0]"});
}
