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

#ifndef LCTSPIN_CORE_IO_HPP
#define LCTSPIN_CORE_IO_HPP

#include <string>

#include "core/clifford.hpp"
#include "core/lct_core.hpp"
#include "core/numeric.hpp"
#include "core/report.hpp"
#include "core/spin_rep.hpp"

namespace lctspin::io {

/// Reads {"signature": {"plus", "minus"}, "theta"|"phi"|"mu"|"lambda": N x N
/// arrays of "num/den"}. Absent matrices are zero. Throws Error(ParseError),
/// Error(DimensionMismatch) or ConstraintViolation.
lct::LctParams parse_params(const std::string& text);
Json params_to_json(const lct::LctParams& params);

Json signature_json(const lct::Signature& sig);

/// Row-major arrays of 17-significant-digit decimal strings; complex entries
/// as [re, im] pairs of such strings.
Json matrix_json(const RationalMatrix& m);
Json matrix_json(const RealMatrix& m);
Json matrix_json(const ComplexMatrix& m);
Json matrix_json(const GaussianMatrix& m);

/// Generators as nested [re, im] integer pairs, with their metric.
Json generators_json(const clifford::GeneratorSet& set);

/// {A, g, X, O, theta, S} with the convention tag and residuals.
Json bundle_json(const spin::SpinBundle& bundle);

}  // namespace lctspin::io

#endif
