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

#ifndef LCTSPIN_CORE_NUMERIC_HPP
#define LCTSPIN_CORE_NUMERIC_HPP

#include <Eigen/Dense>

#include "core/matrix.hpp"

namespace lctspin {

using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;

/// exp(A) by scaling and squaring around a truncated Taylor series.
/// Throws Error(ExpDivergence) if the result is not finite.
RealMatrix expm(const RealMatrix& a);
ComplexMatrix expm(const ComplexMatrix& a);

RealMatrix to_real(const RationalMatrix& m);
ComplexMatrix to_complex(const GaussianMatrix& m);

double max_abs_entry(const RealMatrix& m);
double max_abs_entry(const ComplexMatrix& m);

/// Decimal string with 17 significant digits.
std::string format_double(double v);

}  // namespace lctspin

#endif
