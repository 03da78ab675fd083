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

#include "core/exact.hpp"

#include <cctype>
#include <vector>

#include "core/error.hpp"

namespace lctspin {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ConstraintViolation: return "ConstraintViolation";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::ExpDivergence: return "ExpDivergence";
        case ErrorKind::SizeLimit: return "SizeLimit";
        case ErrorKind::ConventionMismatch: return "ConventionMismatch";
        case ErrorKind::NoConsistentConvention: return "NoConsistentConvention";
        case ErrorKind::AmbiguousConvention: return "AmbiguousConvention";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::UnknownSuite: return "UnknownSuite";
    }
    return "Unknown";
}

namespace {

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!valid_integer(s)) throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(s) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    mpz_class num = parse_integer(text.substr(0, slash));
    mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// Zero checks are cheap for GMP rationals and most entries in this library
// are sparse (pure real, pure imaginary, or without a sqrt(2) part).

Gaussian& Gaussian::operator+=(const Gaussian& o) {
    if (sgn(o.re_) != 0) re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
    if (sgn(o.re_) != 0) re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
}

Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    const bool ar = sgn(a.re_) != 0, ai = sgn(a.im_) != 0;
    const bool br = sgn(b.re_) != 0, bi = sgn(b.im_) != 0;
    Gaussian out;
    if (ar && br) out.re_ = a.re_ * b.re_;
    if (ai && bi) out.re_ -= a.im_ * b.im_;
    if (ar && bi) out.im_ = a.re_ * b.im_;
    if (ai && br) out.im_ += a.im_ * b.re_;
    return out;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) { return *this = *this * o; }

Gaussian operator/(const Gaussian& a, const Gaussian& b) {
    Rational norm = b.re_ * b.re_ + b.im_ * b.im_;
    if (sgn(norm) == 0) throw Error(ErrorKind::DimensionMismatch, "division by zero Gaussian rational");
    Gaussian num = a * b.conj();
    return Gaussian(num.re_ / norm, num.im_ / norm);
}

Rational Gaussian::abs_max() const {
    Rational r = abs(re_), i = abs(im_);
    return r > i ? r : i;
}

namespace {

// Appends "coef·unit" with sign handling; unit may be empty.
void append_term(std::vector<std::string>& parts, const Rational& coef, const std::string& unit) {
    if (sgn(coef) == 0) return;
    std::string body;
    Rational mag = abs(coef);
    if (unit.empty()) {
        body = mag.get_str();
    } else if (mag == 1) {
        body = unit;
    } else {
        body = mag.get_str() + unit;
    }
    parts.push_back((sgn(coef) < 0 ? "-" : "+") + body);
}

std::string join_terms(const std::vector<std::string>& parts) {
    if (parts.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const std::string& p = parts[k];
        if (k == 0) {
            out += p.front() == '-' ? "-" + p.substr(1) : p.substr(1);
        } else {
            out += (p.front() == '-' ? " - " : " + ") + p.substr(1);
        }
    }
    return parts.size() > 1 ? "(" + out + ")" : out;
}

}  // namespace

std::string to_string(const Gaussian& z) {
    std::vector<std::string> parts;
    append_term(parts, z.re(), "");
    append_term(parts, z.im(), "i");
    return join_terms(parts);
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
    // (a + b r)(c + d r) = (ac + 2bd) + (ad + bc) r, r = sqrt(2)
    ExactScalar out;
    const bool xb = !x.b_.is_zero(), yb = !y.b_.is_zero();
    out.a_ = x.a_ * y.a_;
    if (xb && yb) {
        Gaussian bd = x.b_ * y.b_;
        out.a_ += bd;
        out.a_ += bd;
    }
    if (yb) out.b_ = x.a_ * y.b_;
    if (xb) out.b_ += x.b_ * y.a_;
    return out;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) { return *this = *this * o; }

std::complex<double> ExactScalar::to_complex() const {
    static const double kSqrt2 = 1.4142135623730950488;
    return a_.to_complex() + kSqrt2 * b_.to_complex();
}

std::string to_string(const ExactScalar& s) {
    std::vector<std::string> parts;
    append_term(parts, s.rational_part().re(), "");
    append_term(parts, s.sqrt2_part().re(), "√2");
    append_term(parts, s.rational_part().im(), "i");
    append_term(parts, s.sqrt2_part().im(), "√2 i");
    return join_terms(parts);
}

}  // namespace lctspin
