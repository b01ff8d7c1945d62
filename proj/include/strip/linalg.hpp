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

#ifndef STRIP_LINALG_HPP
#define STRIP_LINALG_HPP

#include "strip/poly.hpp"

#include <vector>

namespace strip {

/// Element of Q(π): num/den with gcd(num, den) = 1 and den monic.
class RatFunc {
public:
    RatFunc() : den_(Poly::constant(Rational(1))) {}
    RatFunc(Poly num);  // NOLINT(google-explicit-constructor)
    RatFunc(Poly num, Poly den);

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    double value() const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const { return RatFunc(-num_, den_); }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

private:
    Poly num_;
    Poly den_;
};

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Basis of {x : A x = 0} by Gauss–Jordan elimination over Q(π). One vector per
/// free column, with a 1 in that column.
std::vector<std::vector<RatFunc>> nullspace_exact(Matrix<RatFunc> a, std::size_t cols);

/// Same over doubles: columns are equilibrated, pivots below tol·max|entry| count as zero.
/// Vectors are scaled to unit max-norm with a positive leading entry.
std::vector<std::vector<double>> nullspace_numeric(Matrix<double> a, std::size_t cols, double tol = 1e-10);

/// Clears denominators: returns Q[π] multiples of the vector.
std::vector<Poly> clear_denominators(const std::vector<RatFunc>& v);

}  // namespace strip

#endif
