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

#ifndef LCTSPIN_CORE_EXACT_HPP
#define LCTSPIN_CORE_EXACT_HPP

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace lctspin {

using Rational = mpq_class;

/// Parses "num/den" or "num" (optional sign, no spaces). Throws Error(ParseError).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Gaussian rational re + im*i.
class Gaussian {
   public:
    Gaussian() = default;
    Gaussian(long re) : re_(re) {}
    Gaussian(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
    Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Gaussian i() { return Gaussian(0, 1); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Gaussian conj() const { return Gaussian(re_, -im_); }
    Gaussian operator-() const { return Gaussian(-re_, -im_); }

    Gaussian& operator+=(const Gaussian& o);
    Gaussian& operator-=(const Gaussian& o);
    Gaussian& operator*=(const Gaussian& o);

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b);
    friend Gaussian operator/(const Gaussian& a, const Gaussian& b);
    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Max of |re|, |im|; the entry norm used by exact defect reports.
    Rational abs_max() const;
    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

   private:
    Rational re_{0};
    Rational im_{0};
};

std::string to_string(const Gaussian& z);

/// Element a + b*sqrt(2) of Q(i)[sqrt 2].
class ExactScalar {
   public:
    ExactScalar() = default;
    ExactScalar(long v) : a_(v) {}
    ExactScalar(Rational v) : a_(std::move(v)) {}
    ExactScalar(Gaussian a) : a_(std::move(a)) {}
    ExactScalar(Gaussian a, Gaussian b) : a_(std::move(a)), b_(std::move(b)) {}

    static ExactScalar sqrt2() { return ExactScalar(Gaussian(0), Gaussian(1)); }
    static ExactScalar inv_sqrt2() { return ExactScalar(Gaussian(0), Gaussian(Rational(1, 2))); }
    static ExactScalar i() { return ExactScalar(Gaussian::i()); }

    const Gaussian& rational_part() const { return a_; }
    const Gaussian& sqrt2_part() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return b_.is_zero() && a_ == Gaussian(1); }

    ExactScalar operator-() const { return ExactScalar(-a_, -b_); }
    ExactScalar& operator+=(const ExactScalar& o);
    ExactScalar& operator-=(const ExactScalar& o);
    ExactScalar& operator*=(const ExactScalar& o);

    friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) { return x += y; }
    friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) { return x -= y; }
    friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y);
    friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    /// a - b*sqrt(2).
    ExactScalar galois_conjugate() const { return ExactScalar(a_, -b_); }
    std::complex<double> to_complex() const;

   private:
    Gaussian a_;
    Gaussian b_;
};

/// Debug form, e.g. "3/2", "-i", "(3/2 + 1/2√2 i)".
std::string to_string(const ExactScalar& s);

}  // namespace lctspin

#endif
