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

#ifndef STRIP_MODE_OPS_HPP
#define STRIP_MODE_OPS_HPP

#include "strip/grid.hpp"
#include "strip/mode_sum.hpp"
#include "strip/real_param.hpp"
#include "strip/yfunc.hpp"

#include <optional>
#include <span>

namespace strip {

/// Floating evaluation at one point. Throws DimensionMismatch.
double evaluate(const ModeSum& u, double t, std::span<const double> y);

/// One application of ∂_t² + Δ_y. Throws InexactInput for numeric overlays.
ModeSum apply_laplacian(const ModeSum& u);

/// Least N ≥ 0 with L^N u = 0, certified exactly. Throws InexactInput.
int polyharmonic_order(const ModeSum& u);

/// Max per-term order (m+1 or ⌊m/2⌋+1); an upper bound that also applies to overlays.
int order_bound(const ModeSum& u);

/// ∂_t, exact or on the overlay.
ModeSum dt(const ModeSum& u);

/// u(t0 ± t, y). Exact when u is exact, t0 is a rational multiple of π and every
/// frequency k satisfies 2·k·t0/π ∈ Z; otherwise a numeric overlay.
ModeSum shift_reflect(const ModeSum& u, const RealParam& t0, bool reflect);

/// u(t1 + s·t, s·y) with s = c/π. c must be a positive rational multiple of π
/// (UnsupportedScale otherwise).
ModeSum normalize(const ModeSum& u, const RealParam& t1, const RealParam& c);

struct Growth {
    Rational rate;          ///< max |κ| over TrigExp terms, 0 if none
    bool subcritical = true;
    bool critical = false;  ///< rate·c = π (exactly, or within 1e−12 relative for floating c)
};

/// Compares rate·c with π. Throws InvariantViolation unless c > 0.
Growth growth(const ModeSum& u, const RealParam& c);

/// y ↦ u(t0, y).
YFunc restrict_to_hyperplane(const ModeSum& u, const RealParam& t0);

enum class Vanishing { ExactZero, NumericZero, Nonzero };

struct VanishingResult {
    Vanishing status = Vanishing::Nonzero;
    double residual = 0.0;  ///< relative to the reference scale
    bool vanishes() const noexcept { return status != Vanishing::Nonzero; }
};

inline constexpr double kHyperplaneTol = 1e-9;

/// max |u| on grid; the denominator of relative residuals.
double reference_scale(const ModeSum& u, const GridSpec& grid);

/// Default reference: max |u| over t ∈ [t0 − π, t0 + π] and the default y axes.
double reference_scale(const ModeSum& u, const RealParam& t0);

VanishingResult vanishes_at(const ModeSum& u, const RealParam& t0, double scale);
VanishingResult vanishes_at(const ModeSum& u, const RealParam& t0);

struct OddnessReport {
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    std::optional<bool> exact_odd;  ///< set when the shifted sum stayed exact
    bool odd(double tol = kHyperplaneTol) const {
        return exact_odd ? *exact_odd : rel_residual < tol;
    }
};

/// max over grid of |u(t0+t, y) + u(t0−t, y)|, the grid's t-values being offsets.
OddnessReport is_odd_at(const ModeSum& u, const RealParam& t0, const GridSpec& grid);

/// u/t when every term carries t^m with m ≥ 1; nullopt otherwise.
std::optional<ModeSum> divide_by_t(const ModeSum& u);

}  // namespace strip

#endif
