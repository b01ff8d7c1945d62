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

#ifndef STRIP_MODE_SUM_HPP
#define STRIP_MODE_SUM_HPP

#include "strip/series.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace strip {

enum class ModeKind { TrigExp, PolyHarm };
enum class Trig { Sin, Cos };

/// Transverse frequency κ ∈ Q^d.
struct FrequencyVector {
    std::vector<Rational> components;

    int dim() const noexcept { return static_cast<int>(components.size()); }
    Rational norm2() const;
};

/// Polynomial in y with rational coefficients, keyed by exponent vector.
using YPoly = std::map<std::vector<int>, Rational>;

YPoly laplacian(const YPoly& h);
bool is_harmonic(const YPoly& h);

/// One separated solution as written in a modespec document:
///   TrigExp:  coefficient · t^m · trig(k t) · exp(⟨κ, y⟩),  |κ| = k > 0
///   PolyHarm: coefficient · t^m · h(y),                     Δ_y h = 0
struct Mode {
    ModeKind kind = ModeKind::TrigExp;
    PiPoly coefficient;
    int m = 0;
    Trig trig = Trig::Sin;
    Rational k;
    FrequencyVector kappa;
    YPoly h;

    /// Validates k > 0 and |κ|² = k²; throws InvariantViolation.
    static Mode trig_exp(PiPoly coefficient, int m, Trig trig, Rational k, std::vector<Rational> kappa);
    /// Derives k = |κ|; |κ|² must be the square of a rational.
    static Mode trig_exp(PiPoly coefficient, int m, Trig trig, std::vector<Rational> kappa);
    /// Validates harmonicity and dimension; throws InvariantViolation.
    static Mode poly_harm(PiPoly coefficient, int m, YPoly h, int dim);

    /// Polyharmonic order: m+1 for TrigExp, ⌊m/2⌋+1 for PolyHarm.
    int order() const noexcept;
    int dim() const;
    void validate(int dim) const;

    bool operator==(const Mode& other) const;
};

/// Canonical basis element of a mode sum. PolyHarm parts are stored per y-monomial
/// so that harmonic polynomials of the same t-power combine and cancel exactly.
struct TermKey {
    ModeKind kind = ModeKind::TrigExp;
    int m = 0;
    Trig trig = Trig::Sin;
    std::vector<Rational> kappa;  ///< TrigExp only
    Rational k;                   ///< |κ|, derived, not part of the ordering
    std::vector<int> yexp;        ///< PolyHarm only
};
bool operator<(const TermKey& a, const TermKey& b);
bool operator==(const TermKey& a, const TermKey& b);

/// A finite sum of separated polyharmonic solutions on the strip (a, b) × R^d.
/// Immutable in spirit: every operation returns a new value.
class ModeSum {
public:
    explicit ModeSum(int dim = 1);

    static ModeSum from_modes(int dim, std::span<const Mode> modes);

    int dim() const noexcept { return dim_; }
    bool is_exact() const noexcept { return terms_.is_exact(); }
    /// True for the zero function (no surviving terms).
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    const Series<TermKey>& terms() const noexcept { return terms_; }
    Series<TermKey>& terms() noexcept { return terms_; }

    void add(const Mode& mode);

    ModeSum to_numeric() const;
    ModeSum scaled(const Rational& r) const;
    ModeSum scaled(double v) const;
    ModeSum& operator+=(const ModeSum& other);
    ModeSum& operator-=(const ModeSum& other);
    friend ModeSum operator+(ModeSum a, const ModeSum& b) { return a += b; }
    friend ModeSum operator-(ModeSum a, const ModeSum& b) { return a -= b; }
    bool operator==(const ModeSum& other) const { return dim_ == other.dim_ && terms_ == other.terms_; }

    /// Back to document-level modes. PolyHarm terms are regrouped per (m, power of π),
    /// each group being harmonic. Throws InexactInput for numeric overlays.
    std::vector<Mode> to_modes() const;

    std::string to_string() const;

private:
    int dim_;
    Series<TermKey> terms_;
};

/// Fast floating evaluator compiled from a mode sum. Safe to share between threads.
class Evaluator {
public:
    explicit Evaluator(const ModeSum& u);

    int dim() const noexcept { return dim_; }
    double operator()(double t, std::span<const double> y) const;
    /// Σ |term(t, y)|: the scale against which cancellation residuals are measured.
    double magnitude(double t, std::span<const double> y) const;

private:
    struct Term {
        bool trig_exp;
        int m;
        bool sine;
        double k;
        double coef;
        std::vector<double> kappa;
        std::vector<int> yexp;
    };
    double term_value(const Term& term, double t, std::span<const double> y) const;

    int dim_;
    std::vector<Term> terms_;
};

}  // namespace strip

#endif
