/*
   Copyright 2026 The stripcheck Authors

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

#include "strip/real_param.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace strip {

RealParam RealParam::pi_multiple(const Rational& r) {
    RealParam p;
    p.pi_coeff_ = r;
    p.value_ = r.get_d() * std::numbers::pi;
    return p;
}

RealParam RealParam::numeric(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite parameter");
    RealParam p;
    p.pi_coeff_.reset();
    p.value_ = v;
    return p;
}

const Rational& RealParam::pi_coefficient() const {
    if (!pi_coeff_) throw std::logic_error("parameter is not an exact multiple of pi");
    return *pi_coeff_;
}

std::string RealParam::to_string() const {
    if (pi_coeff_) return strip::to_string(*pi_coeff_) + "*pi";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, value_);
    return std::string(buf, res.ptr);
}

RealParam operator+(const RealParam& a, const RealParam& b) {
    if (a.is_exact() && b.is_exact()) return RealParam::pi_multiple(*a.pi_coeff_ + *b.pi_coeff_);
    return RealParam::numeric(a.value_ + b.value_);
}

RealParam operator-(const RealParam& a, const RealParam& b) { return a + (-b); }

RealParam operator*(long n, const RealParam& a) {
    if (a.is_exact()) return RealParam::pi_multiple(Rational(n) * *a.pi_coeff_);
    return RealParam::numeric(static_cast<double>(n) * a.value_);
}

RealParam RealParam::operator-() const {
    if (pi_coeff_) return pi_multiple(-*pi_coeff_);
    return numeric(-value_);
}

bool operator==(const RealParam& a, const RealParam& b) {
    if (a.is_exact() != b.is_exact()) return false;
    if (a.is_exact()) return *a.pi_coeff_ == *b.pi_coeff_;
    return a.value_ == b.value_;
}

RealParam parse_real_param(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty parameter");

    auto pos = s.find("pi");
    if (pos != std::string::npos) {
        std::string before = s.substr(0, pos);
        std::string after = s.substr(pos + 2);
        if (!before.empty() && before.back() == '*') before.pop_back();
        Rational coeff(1);
        if (before == "-") coeff = -1;
        else if (before == "+" || before.empty()) coeff = 1;
        else coeff = parse_rational(before);
        if (!after.empty()) {
            if (after.front() != '/') throw std::invalid_argument("bad parameter '" + s + "'");
            Rational den = parse_rational(after.substr(1));
            if (sgn(den) == 0) throw std::invalid_argument("zero divisor in '" + s + "'");
            coeff /= den;
        }
        return RealParam::pi_multiple(coeff);
    }

    if (s.find('/') != std::string::npos) {
        Rational r = parse_rational(s);
        if (sgn(r) == 0) return RealParam::pi_multiple(Rational(0));
        return RealParam::numeric(r.get_d());
    }
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw std::invalid_argument("bad parameter '" + s + "'");
    if (v == 0.0) return RealParam::pi_multiple(Rational(0));
    return RealParam::numeric(v);
}

}  // namespace strip
