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

#include "strip/linalg.hpp"

#include "strip/errors.hpp"

#include <algorithm>
#include <cmath>

namespace strip {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(Rational(1))) {}

RatFunc::RatFunc(Poly num, Poly den) {
    if (den.is_zero()) throw InvariantViolation("zero denominator");
    if (num.is_zero()) {
        den_ = Poly::constant(Rational(1));
        return;
    }
    const Poly g = gcd(num, den);
    num = divide_exact(num, g);
    den = divide_exact(den, g);
    const Rational lead = den.leading();
    num_ = num * Rational(1 / lead);
    den_ = den * Rational(1 / lead);
}

double RatFunc::value() const { return pi_value(num_) / pi_value(den_); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw InvariantViolation("division by zero in Q(pi)");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::vector<std::vector<RatFunc>> nullspace_exact(Matrix<RatFunc> a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t p = rank;
        while (p < a.size() && a[p][c].is_zero()) ++p;
        if (p == a.size()) continue;
        std::swap(a[rank], a[p]);
        const RatFunc inv = RatFunc(Poly::constant(Rational(1))) / a[rank][c];
        for (auto& v : a[rank]) v = v * inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == rank || a[r][c].is_zero()) continue;
            const RatFunc f = a[r][c];
            for (std::size_t k = 0; k < cols; ++k) a[r][k] = a[r][k] - f * a[rank][k];
        }
        pivots.push_back(c);
        ++rank;
    }
    std::vector<std::vector<RatFunc>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
        std::vector<RatFunc> v(cols);
        v[free] = RatFunc(Poly::constant(Rational(1)));
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<double>> nullspace_numeric(Matrix<double> a, std::size_t cols, double tol) {
    std::vector<double> scale(cols, 1.0);
    for (std::size_t c = 0; c < cols; ++c) {
        double m = 0.0;
        for (const auto& row : a) m = std::max(m, std::abs(row[c]));
        if (m > 0.0) scale[c] = m;
        for (auto& row : a) row[c] /= scale[c];
    }
    double amax = 0.0;
    for (const auto& row : a)
        for (double v : row) amax = std::max(amax, std::abs(v));
    const double threshold = tol * amax;

    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t p = rank;
        for (std::size_t r = rank; r < a.size(); ++r)
            if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
        if (std::abs(a[p][c]) <= threshold) {
            for (std::size_t r = rank; r < a.size(); ++r) a[r][c] = 0.0;
            continue;
        }
        std::swap(a[rank], a[p]);
        const double piv = a[rank][c];
        for (auto& v : a[rank]) v /= piv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == rank) continue;
            const double f = a[r][c];
            if (f == 0.0) continue;
            for (std::size_t k = 0; k < cols; ++k) a[r][k] -= f * a[rank][k];
        }
        pivots.push_back(c);
        ++rank;
    }
    std::vector<std::vector<double>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
        std::vector<double> v(cols, 0.0);
        v[free] = 1.0;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
        double m = 0.0, lead = 0.0;
        for (std::size_t i = 0; i < cols; ++i) {
            v[i] /= scale[i];
            m = std::max(m, std::abs(v[i]));
        }
        for (double x : v)
            if (std::abs(x) > 1e-12 * m) {
                lead = x;
                break;
            }
        const double s = (lead < 0.0 ? -1.0 : 1.0) / m;
        for (auto& x : v) x *= s;
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Poly> clear_denominators(const std::vector<RatFunc>& v) {
    Poly l = Poly::constant(Rational(1));
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        l = divide_exact(l * x.den(), gcd(l, x.den()));
    }
    std::vector<Poly> out;
    for (const auto& x : v) out.push_back(x.is_zero() ? Poly() : x.num() * divide_exact(l, x.den()));
    return out;
}

}  // namespace strip
