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

#include "strip/poly.hpp"

#include <numbers>
#include <sstream>

namespace strip {

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(const Rational& c, int degree) {
    if (degree < 0) throw IndexOutOfRange("negative monomial degree");
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

Poly Poly::linear(const Rational& c0, const Rational& c1) { return Poly({c0, c1}); }

void Poly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Poly::coefficient(int i) const {
    if (i < 0 || i > degree()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational Poly::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

int Poly::valuation() const noexcept {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0) return static_cast<int>(i);
    return -1;
}

Poly& Poly::operator+=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& other) {
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& scalar) {
    if (sgn(scalar) == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Poly::evaluate(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

Poly Poly::compose_affine(const Rational& a, const Rational& b) const {
    const Poly inner = Poly::linear(b, a);
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= inner;
        acc += Poly::constant(*it);
    }
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(out));
}

Poly Poly::shift_degree(int k) const {
    if (is_zero() || k == 0) return *this;
    if (k > 0) {
        std::vector<Rational> out(static_cast<std::size_t>(k));
        out.insert(out.end(), coeffs_.begin(), coeffs_.end());
        return Poly(std::move(out));
    }
    const auto drop = std::min(static_cast<std::size_t>(-k), coeffs_.size());
    Poly low(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(drop)));
    if (!low.is_zero()) throw InexactDivision(std::move(low));
    if (drop == coeffs_.size()) return {};
    return Poly(std::vector<Rational>(coeffs_.begin() + static_cast<long>(drop), coeffs_.end()));
}

std::string Poly::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1;
        if (i == 0 || !unit) os << mag.get_str();
        if (i >= 1) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

PolyDivision divide(const Poly& dividend, const Poly& divisor) {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = dividend.coefficients();
    const int dd = divisor.degree();
    const Rational lead = divisor.leading();
    if (dividend.degree() < dd) return {Poly(), dividend};
    std::vector<Rational> quot(static_cast<std::size_t>(dividend.degree() - dd + 1));
    for (int i = dividend.degree(); i >= dd; --i) {
        const Rational& top = rem[static_cast<std::size_t>(i)];
        if (sgn(top) == 0) continue;
        Rational q = top / lead;
        quot[static_cast<std::size_t>(i - dd)] = q;
        for (int k = 0; k <= dd; ++k)
            rem[static_cast<std::size_t>(i - dd + k)] -= q * divisor.coefficients()[static_cast<std::size_t>(k)];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly divide_exact(const Poly& dividend, const Poly& divisor) {
    auto [q, r] = divide(dividend, divisor);
    if (!r.is_zero()) throw InexactDivision(std::move(r));
    return q;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divide(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    Rational inv = 1 / a.leading();
    return a * inv;
}

double pi_value(const Poly& pi_poly) { return pi_poly.evaluate(std::numbers::pi); }

}  // namespace strip
