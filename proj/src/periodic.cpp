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

#include "strip/periodic.hpp"

#include "strip/errors.hpp"
#include "strip/mode_ops.hpp"

#include <algorithm>
#include <cmath>

namespace strip {

ExtendedFunction::ExtendedFunction(ModeSum core, RealParam t1, RealParam t2)
    : core_(std::move(core)), t1_(std::move(t1)), t2_(std::move(t2)) {
    delta_ = t2_.value() - t1_.value();
    if (!(delta_ > 0.0)) throw InvariantViolation("extension needs t1 < t2");
    lo_ = t1_.value() - delta_;
    hi_ = t2_.value() + delta_;
    eval_ = std::make_shared<const Evaluator>(core_);
}

long ExtendedFunction::tile(double t) const {
    if (t >= lo_ && t < hi_) return 0;
    return static_cast<long>(std::floor((t - lo_) / (2.0 * delta_)));
}

double ExtendedFunction::piece(long k, double t, std::span<const double> y) const {
    const auto it = overrides_.find(k);
    const Evaluator& ev = it == overrides_.end() ? *eval_ : *it->second;
    return ev(t - 2.0 * static_cast<double>(k) * delta_, y);
}

double ExtendedFunction::operator()(double t, std::span<const double> y) const { return piece(tile(t), t, y); }

std::vector<double> ExtendedFunction::seams(double lo, double hi) const {
    std::vector<double> out;
    const double p = 2.0 * delta_;
    const long k0 = static_cast<long>(std::ceil((lo - lo_) / p));
    const long k1 = static_cast<long>(std::floor((hi - lo_) / p));
    for (long k = k0; k <= k1; ++k)
        if (k != 1) out.push_back(lo_ + static_cast<double>(k) * p);
    if (hi_ >= lo && hi_ <= hi) out.push_back(hi_);
    std::sort(out.begin(), out.end());
    return out;
}

long ExtendedFunction::tile_right_of(double seam) const { return tile(seam + 0.25 * delta_); }

ExtendedFunction ExtendedFunction::with_tile_override(long k, const ModeSum& replacement) const {
    if (replacement.dim() != core_.dim()) throw DimensionMismatch("override dimension differs from core");
    ExtendedFunction e = *this;
    e.overrides_[k] = std::make_shared<const Evaluator>(replacement);
    return e;
}

ExtendedFunction build_extension(const ModeSum& u, const RealParam& t1, const RealParam& t2, const Domain& domain) {
    const double delta = t2.value() - t1.value();
    if (!(delta > 0.0)) throw InvariantViolation("extension needs t1 < t2");
    if (!(domain.a < t1.value() - delta) || !(t2.value() + delta < domain.b))
        throw InsufficientMargin("need a < t1 - delta and t2 + delta < b with delta = " + std::to_string(delta));
    const GridSpec offsets = default_grid(u.dim(), 0.0, delta);
    for (const RealParam* p : {&t1, &t2}) {
        const OddnessReport r = is_odd_at(u, *p, offsets);
        if (!r.odd()) throw NotOddAtPoint(p->value(), r.rel_residual);
    }
    return ExtendedFunction(u, t1, t2);
}

double ExtensionReport::max_seam_jump() const {
    double m = 0.0;
    for (const auto& s : seam_jumps) m = std::max(m, s.jump);
    return m;
}

bool ExtensionReport::seam_defect() const {
    return std::any_of(seam_jumps.begin(), seam_jumps.end(), [](const SeamJump& s) { return s.significant(); });
}

GridSpec extension_grid(const ExtendedFunction& e, int n_t) {
    const double reach = 4.0 * e.period();
    return default_grid(e.core().dim(), e.window_lo() - reach, e.window_hi() + reach, n_t);
}

namespace {

// Centered n-th difference with step h; odd orders use half-step nodes.
double centered_difference(const std::function<double(double)>& f, double s, int n, double h) {
    double sum = 0.0, binom = 1.0;
    for (int i = 0; i <= n; ++i) {
        const double node = s + (0.5 * n - i) * h;
        sum += ((i % 2) ? -binom : binom) * f(node);
        binom = binom * (n - i) / (i + 1);
    }
    return sum / std::pow(h, n);
}

}  // namespace

ExtensionReport verify_extension(const ExtendedFunction& e, const GridSpec& grid) {
    ExtensionReport rep;
    const Evaluator core(e.core());

    GridSpec window = default_grid(e.core().dim(), e.window_lo(), e.window_hi(), 97);
    window.y = grid.y;
    rep.scale = kernels::max_abs(window, [&](double t, std::span<const double> y) { return core(t, y); });

    const double p = e.period();
    const double per = kernels::max_abs(grid, [&](double t, std::span<const double> y) { return e(t + p, y) - e(t, y); });
    rep.periodicity = relative(per, rep.scale);

    rep.core_agreement = kernels::max_abs(window, [&](double t, std::span<const double> y) {
        return t < e.window_hi() ? e(t, y) - core(t, y) : 0.0;
    });

    constexpr double eps = std::numeric_limits<double>::epsilon();
    const auto ys = grid.y_points();
    for (double s : e.seams(grid.t.lo, grid.t.hi)) {
        const long left = e.tile(s - 0.25 * e.delta());
        const long right = e.tile_right_of(s);
        for (int n = 0; n <= 4; ++n) {
            SeamJump j;
            j.seam = s;
            j.order = n;
            j.floor = 1e3 * eps * std::pow(2.0 / kSeamStep, n);
            double worst = 0.0;
            for (const auto& y : ys) {
                const auto fl = [&](double t) { return e.piece(left, t, y); };
                const auto fr = [&](double t) { return e.piece(right, t, y); };
                const double d = centered_difference(fl, s, n, kSeamStep) - centered_difference(fr, s, n, kSeamStep);
                worst = std::max(worst, std::abs(d));
            }
            j.jump = relative(worst, rep.scale);
            rep.seam_jumps.push_back(j);
        }
    }
    return rep;
}

ExtensionReport verify_extension(const ExtendedFunction& e) { return verify_extension(e, extension_grid(e)); }

}  // namespace strip
