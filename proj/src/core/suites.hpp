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

#ifndef LCTSPIN_CORE_SUITES_HPP
#define LCTSPIN_CORE_SUITES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/lct_core.hpp"
#include "core/report.hpp"

namespace lctspin::suites {

struct SuiteConfig {
    lct::Signature sig{1, 0};
    std::uint64_t seed = 1;
    /// Overrides every numeric tolerance when set.
    std::optional<double> tol;
    bool unsafe_size = false;
    /// Random parameter draws per randomized suite.
    int draws = 20;
};

/// Modes allowed without `unsafe_size`: symbolic suites, matrix-only suites.
constexpr std::size_t kSymbolicModeCap = 2;
constexpr std::size_t kMatrixModeCap = 3;

const std::vector<std::string>& suite_names();

/// Splits "a,b,..." and expands "all". Throws Error(UnknownSuite) on any
/// unrecognized name and Error(SizeLimit) if a selected suite exceeds its cap.
std::vector<std::string> resolve_suites(const std::string& list, const SuiteConfig& cfg);

VerificationReport run_suite(const std::string& name, const SuiteConfig& cfg);

/// {"signature", "seed", "pass", "suites": [report...]}, in the given order.
Json run_suites(const std::vector<std::string>& names, const SuiteConfig& cfg);

/// Every oracle-resolved convention with the residuals of all candidates.
/// Throws Error(NoConsistentConvention) or Error(AmbiguousConvention).
Json conventions_ledger(const SuiteConfig& cfg);

/// Evaluated commutator tables and the generator matrices for cfg.sig.
Json tables(const SuiteConfig& cfg);

}  // namespace lctspin::suites

#endif
