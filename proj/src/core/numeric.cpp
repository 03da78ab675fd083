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

#include "core/numeric.hpp"

#include <cmath>
#include <cstdio>

#include "core/error.hpp"

namespace lctspin {

namespace {

template <class M>
M expm_impl(const M& a) {
    if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "expm of a non-square matrix");
    const Eigen::Index n = a.rows();
    if (!a.allFinite()) throw Error(ErrorKind::ExpDivergence, "expm input is not finite");

    // Scale so that ||A/2^s||_1 <= 1/4; 24 Taylor terms then reach ~1e-30.
    double norm = a.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (norm > 0.25) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.25)));
    if (squarings > 1000) throw Error(ErrorKind::ExpDivergence, "expm scaling exponent out of range");
    const M scaled = a / std::ldexp(1.0, squarings);

    M result = M::Identity(n, n);
    M term = M::Identity(n, n);
    for (int k = 1; k <= 30; ++k) {
        term = (term * scaled) / static_cast<double>(k);
        result += term;
        if (term.cwiseAbs().maxCoeff() <= 1e-18 * result.cwiseAbs().maxCoeff()) break;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;

    if (!result.allFinite()) throw Error(ErrorKind::ExpDivergence, "expm produced non-finite entries");
    return result;
}

}  // namespace

RealMatrix expm(const RealMatrix& a) { return expm_impl(a); }
ComplexMatrix expm(const ComplexMatrix& a) { return expm_impl(a); }

RealMatrix to_real(const RationalMatrix& m) {
    RealMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
    return out;
}

ComplexMatrix to_complex(const GaussianMatrix& m) {
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_complex();
    return out;
}

double max_abs_entry(const RealMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }
double max_abs_entry(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace lctspin
