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

#ifndef LCTSPIN_CORE_REPORT_HPP
#define LCTSPIN_CORE_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace lctspin {

using Json = nlohmann::ordered_json;

struct ReportLine {
    std::string id;
    bool pass = false;
    /// Failure evidence for exact lines (null on pass); residual summary for numeric lines.
    std::optional<std::string> witness;
};

/// Serialized as {"suite": name, "lines": [{"id", "pass", "witness"}]}.
struct VerificationReport {
    std::string suite;
    std::vector<ReportLine> lines;

    void add_exact(std::string id, bool pass, std::string witness_on_fail) {
        lines.push_back({std::move(id), pass, pass ? std::nullopt : std::optional<std::string>(std::move(witness_on_fail))});
    }
    void add_numeric(std::string id, double residual, double tolerance);
    void add(std::string id, bool pass, std::optional<std::string> witness) {
        lines.push_back({std::move(id), pass, std::move(witness)});
    }

    /// Appends other's lines with ids prefixed "other.suite/".
    void absorb(const VerificationReport& other);

    bool all_pass() const;
    std::size_t passed() const;
    const ReportLine* find(const std::string& id) const;

    Json to_json() const;
};

}  // namespace lctspin

#endif
