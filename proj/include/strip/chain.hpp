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

#ifndef STRIP_CHAIN_HPP
#define STRIP_CHAIN_HPP

#include "strip/grid.hpp"
#include "strip/mode_ops.hpp"
#include "strip/poly.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace strip {

/// w(t, y) = u(t0 + t, y) + u(t0 − t, y); even in t.
ModeSum even_part(const ModeSum& u, const RealParam& t0);

inline constexpr double kTaylorThreshold = 1e-3;

/// One member of the deflation chain. Either a mode sum (the exact path) or a
/// floating evaluator for a quotient W(t, y)/t with W even and W(0, ·) = 0.
class HFunction {
public:
    static HFunction symbolic(ModeSum h);
    /// w/t; for |t| < 1e−3 uses t·∂_t²w(0, y)/2 from the symbolic second derivative, and 0 at t = 0.
    static HFunction quotient(const ModeSum& w);
    /// [g(π+t) + g(π−t)]/t for a non-symbolic g; the small-|t| branch uses a
    /// second difference of the even numerator.
    static HFunction next_of(const HFunction& g);

    bool is_symbolic() const noexcept { return symbolic_.has_value(); }
    /// Mode-sum form, present on the exact path.
    const std::optional<ModeSum>& mode_sum() const noexcept { return symbolic_; }
    int dim() const noexcept { return dim_; }

    double operator()(double t, std::span<const double> y) const { return eval_(t, y); }

private:
    HFunction() = default;
    int dim_ = 1;
    std::optional<ModeSum> symbolic_;
    PointFn eval_;
};

/// Evaluator for w/t. Throws NotEven when w(t) ≠ w(−t), NotVanishingAtZero when w(0, ·) ≠ 0
/// (exactly, or beyond 1e−9 relative for overlays).
HFunction deflate_once(const ModeSum& w);

/// The deflation chain of u with order N: levels[i] = H_{N−1−i} for i = 0..N−2 and
/// the terminal H_0, which vanishes identically under the chain hypotheses.
struct HChain {
    int order = 0;
    ModeSum w;  ///< w_N = u(t) + u(−t)
    std::vector<HFunction> levels;
    std::optional<HFunction> terminal;

    /// H_index for 0 ≤ index ≤ N−1.
    const HFunction& level(int index) const;
};

/// Alternates even_part at π and deflate_once. N ≥ 1. Errors propagate from deflate_once.
HChain h_chain_direct(const ModeSum& u, int N);

struct LevelAudit {
    int index = 0;                   ///< H_index
    double oddness = 0.0;            ///< relative oddness residual at t = 0
    std::vector<double> vanishing;   ///< relative |H(iπ, ·)| for i = 0..index
};

/// Oddness and hyperplane vanishing of every chain member H_{N−1}..H_1, measured
/// against max |H| over t ∈ [−Nπ, Nπ].
std::vector<LevelAudit> audit_chain(const HChain& chain);

/// Closed-form evaluation of the chain from the shifted copies of w_N:
///   t·∏_{i=1..j}(i²π² − t²)·H_{N−1−j}(t, y) = Σ_l p_{j,l}(t)·w_N((j − 2l)π + t, y),
/// with p_{j,l}(t) = π^j·P_{j,l}(t/π).
class ClosedForm {
public:
    ClosedForm(const ModeSum& u, int N);

    int order() const noexcept { return order_; }
    /// Numerator Σ_l p_{j,l}(t)·w_N((j − 2l)π + t, y); j = 0 gives w_N itself.
    /// When scale is given it receives Σ_l |term|.
    double numerator(int j, double t, std::span<const double> y, double* scale = nullptr) const;
    /// t·∏(i²π² − t²)
    double denominator(int j, double t) const;
    /// Σ_l |p_{j,l}(t)·w_N(…)| / |denominator|: the cancellation scale at (t, y).
    double term_scale(int j, double t, std::span<const double> y) const;

    /// H_{N−1−j}(t, y) for 1 ≤ j ≤ N−1. Within 1e−12 of a denominator zero applies
    /// one L'Hôpital step; throws SingularityNotRemovable when the numerator
    /// does not vanish there (1e−8 relative).
    double value(int j, double t, std::span<const double> y) const;

    /// Relative residual of the consecutive-level recursion
    ///   t·S_j(t) = −(jπ−t)((j−1)π−t)·S_{j−1}(π+t) + (jπ+t)((j−1)π+t)·S_{j−1}(t−π)
    /// for the numerators S_j; 1 ≤ j.
    double recursion_residual(int j, double t, std::span<const double> y) const;

    /// Denominator zeros of level j: iπ for |i| ≤ j.
    static std::vector<double> singular_set(int j);

private:
    struct Level {
        std::vector<Poly> p;   // P_{j,l}(τ)
        std::vector<Poly> dp;  // P'_{j,l}(τ)
        Poly q;                // τ·∏(i² − τ²)
        Poly dq;
    };
    const Level& level(int j) const;
    double numerator_derivative(int j, double t, std::span<const double> y, double* scale = nullptr) const;

    int order_;
    int dim_;
    std::shared_ptr<const Evaluator> w_;
    std::shared_ptr<const Evaluator> dw_;
    std::vector<Level> levels_;
};

/// Convenience wrapper: ClosedForm(u, N).value(j, t, y).
double h_chain_closed_form(const ModeSum& u, int N, int j, double t, std::span<const double> y);

struct ChainComparison {
    int index = 0;          ///< H_index
    double residual = 0.0;  ///< max |direct − closed| / max(max |direct|, max term scale)
    double abs_residual = 0.0;
};

/// Direct chain vs closed form for every level H_{N−2}..H_0 on the grid.
std::vector<ChainComparison> compare_chain(const HChain& chain, const ClosedForm& cf, const GridSpec& grid);

/// Grid t ∈ [−3.1, 3.1] (n_t points) with the singular set of level N−1 excluded by 0.05.
GridSpec chain_grid(int dim, int N, double t_lo = -3.1, double t_hi = 3.1, int n_t = 63);

}  // namespace strip

#endif
