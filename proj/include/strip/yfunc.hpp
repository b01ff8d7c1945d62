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

#ifndef STRIP_YFUNC_HPP
#define STRIP_YFUNC_HPP

#include "strip/series.hpp"

#include <span>
#include <string>
#include <vector>

namespace strip {

/// Basis element y^exps · exp(⟨kappa, y⟩) of the transverse function class.
struct YKey {
    std::vector<Rational> kappa;
    std::vector<int> exps;
};
bool operator<(const YKey& a, const YKey& b);
bool operator==(const YKey& a, const YKey& b);

/// Exponential-polynomial function of y ∈ R^d: Σ c·y^α·e^{⟨κ,y⟩} with Q[π] (or floating) c.
/// Carries Fourier coefficients a_k(y), hyperplane restrictions u(t0, ·), and the
/// inputs of the Helmholtz-kernel decision.
class YFunc {
public:
    explicit YFunc(int dim = 1) : dim_(dim) {}

    int dim() const noexcept { return dim_; }
    bool is_zero() const noexcept { return series_.empty(); }
    bool is_exact() const noexcept { return series_.is_exact(); }
    const Series<YKey>& series() const noexcept { return series_; }
    Series<YKey>& series() noexcept { return series_; }

    void add_exponential(const std::vector<Rational>& kappa, const PiPoly& c);
    void add_monomial(const std::vector<int>& exps, const PiPoly& c);

    double evaluate(std::span<const double> y) const;

    /// (Δ_y − k²) applied once, exactly when the series is exact.
    YFunc helmholtz(const Rational& k) const;

    /// Largest |κ|² over nonzero terms (0 when only polynomials remain).
    Rational max_rate_squared() const;

    YFunc& operator+=(const YFunc& other);
    std::string to_string() const;

private:
    int dim_;
    Series<YKey> series_;
};

}  // namespace strip

#endif
