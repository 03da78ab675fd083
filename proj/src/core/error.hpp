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

#ifndef LCTSPIN_CORE_ERROR_HPP
#define LCTSPIN_CORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lctspin {

enum class ErrorKind {
    ConstraintViolation,
    DimensionMismatch,
    ExpDivergence,
    SizeLimit,
    ConventionMismatch,
    NoConsistentConvention,
    AmbiguousConvention,
    ParseError,
    UnknownSuite,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

/// A parameter constraint failed. `constraint` is the stable name of the
/// relation that should hold ("trace(lambda) = 0"); what() carries the
/// negated form ("trace(lambda) != 0") and the max-entry witness.
class ConstraintViolation : public Error {
   public:
    ConstraintViolation(std::string constraint, const std::string& failure, std::string witness)
        : Error(ErrorKind::ConstraintViolation, failure + " (max entry defect " + witness + ")"),
          constraint_(std::move(constraint)),
          witness_(std::move(witness)) {}
    const std::string& constraint() const noexcept { return constraint_; }
    const std::string& witness() const noexcept { return witness_; }

   private:
    std::string constraint_;
    std::string witness_;
};

}  // namespace lctspin

#endif
