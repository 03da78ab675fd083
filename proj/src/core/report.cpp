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

#include "core/report.hpp"

#include <algorithm>

#include "core/numeric.hpp"

namespace lctspin {

void VerificationReport::add_numeric(std::string id, double residual, double tolerance) {
    const bool pass = residual < tolerance;
    lines.push_back({std::move(id), pass,
                     "residual " + format_double(residual) + (pass ? " < " : " >= ") + "tol " + format_double(tolerance)});
}

void VerificationReport::absorb(const VerificationReport& other) {
    for (const auto& line : other.lines) lines.push_back({other.suite + "/" + line.id, line.pass, line.witness});
}

bool VerificationReport::all_pass() const {
    return std::all_of(lines.begin(), lines.end(), [](const ReportLine& l) { return l.pass; });
}

std::size_t VerificationReport::passed() const {
    return static_cast<std::size_t>(std::count_if(lines.begin(), lines.end(), [](const ReportLine& l) { return l.pass; }));
}

const ReportLine* VerificationReport::find(const std::string& id) const {
    for (const auto& line : lines)
        if (line.id == id) return &line;
    return nullptr;
}

Json VerificationReport::to_json() const {
    Json out;
    out["suite"] = suite;
    Json arr = Json::array();
    for (const auto& line : lines) {
        Json l;
        l["id"] = line.id;
        l["pass"] = line.pass;
        l["witness"] = line.witness ? Json(*line.witness) : Json(nullptr);
        arr.push_back(std::move(l));
    }
    out["lines"] = std::move(arr);
    return out;
}

}  // namespace lctspin
