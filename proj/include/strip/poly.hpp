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

#ifndef STRIP_POLY_HPP
#define STRIP_POLY_HPP

#include "strip/errors.hpp"
#include "strip/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace strip {

/// Dense univariate polynomial over Q. coefficients()[i] multiplies x^i.
/// The zero polynomial has no coefficients; otherwise the leading coefficient is nonzero.
///
/// The same type serves two variables: the normalized axial variable τ = t/π in the
/// deflation identities, and π itself for exact Q[π] mode coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coefficients);
    Poly(std::initializer_list<Rational> coefficients);

    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, int degree);
    /// c0 + c1·x
    static Poly linear(const Rational& c0, const Rational& c1);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    Rational coefficient(int i) const;
    Rational leading() const;
    /// Lowest power with a nonzero coefficient; -1 for zero.
    int valuation() const noexcept;

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    Poly& operator*=(const Rational& scalar);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    Rational operator()(const Rational& x) const;
    double evaluate(double x) const;

    /// p(a·x + b), exact.
    Poly compose_affine(const Rational& a, const Rational& b) const;
    Poly derivative() const;
    /// Multiplies by x^k (k ≥ 0) or divides by x^{-k} when every dropped coefficient is zero.
    Poly shift_degree(int k) const;

    std::string to_string(std::string_view var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division over Q; divisor must be nonzero.
PolyDivision divide(const Poly& dividend, const Poly& divisor);

/// Thrown when an exact division leaves a remainder.
class InexactDivision : public Error {
public:
    explicit InexactDivision(Poly remainder)
        : Error("inexact polynomial division, remainder " + remainder.to_string()),
          remainder_(std::move(remainder)) {}
    const Poly& remainder() const noexcept { return remainder_; }

private:
    Poly remainder_;
};

/// Returns r with dividend = divisor·r; throws InexactDivision otherwise.
Poly divide_exact(const Poly& dividend, const Poly& divisor);

/// Monic gcd (zero if both are zero).
Poly gcd(Poly a, Poly b);

/// Evaluates a Q[π] element at π.
double pi_value(const Poly& pi_poly);

}  // namespace strip

#endif
