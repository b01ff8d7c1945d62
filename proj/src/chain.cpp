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

#include "strip/chain.hpp"

#include "strip/deflation_polys.hpp"
#include "strip/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace strip {

namespace {

constexpr double kPi = std::numbers::pi;

HFunction next_level(const HFunction& g) {
    if (g.is_symbolic()) return deflate_once(even_part(*g.mode_sum(), RealParam::pi_multiple(Rational(1))));
    return HFunction::next_of(g);
}

double max_over_y(int dim, const std::function<double(std::span<const double>)>& f) {
    GridSpec g;
    g.y = default_y_axes(dim);
    double best = 0.0;
    for (const auto& y : g.y_points()) best = std::max(best, std::abs(f(y)));
    return best;
}

}  // namespace

ModeSum even_part(const ModeSum& u, const RealParam& t0) {
    return shift_reflect(u, t0, false) + shift_reflect(u, t0, true);
}

HFunction HFunction::symbolic(ModeSum h) {
    HFunction f;
    f.dim_ = h.dim();
    auto ev = std::make_shared<const Evaluator>(h);
    f.eval_ = [ev](double t, std::span<const double> y) { return (*ev)(t, y); };
    f.symbolic_ = std::move(h);
    return f;
}

HFunction HFunction::quotient(const ModeSum& w) {
    HFunction f;
    f.dim_ = w.dim();
    auto ew = std::make_shared<const Evaluator>(w);
    auto ew2 = std::make_shared<const Evaluator>(dt(dt(w)));
    f.eval_ = [ew, ew2](double t, std::span<const double> y) {
        if (t == 0.0) return 0.0;
        if (std::abs(t) < kTaylorThreshold) return t * (*ew2)(0.0, y) / 2.0;
        return (*ew)(t, y) / t;
    };
    return f;
}

HFunction HFunction::next_of(const HFunction& g) {
    HFunction f;
    f.dim_ = g.dim_;
    auto src = std::make_shared<const HFunction>(g);
    f.eval_ = [src](double t, std::span<const double> y) {
        auto W = [&](double s) { return (*src)(kPi + s, y) + (*src)(kPi - s, y); };
        if (t == 0.0) return 0.0;
        if (std::abs(t) < kTaylorThreshold) {
            constexpr double h = 1e-2;
            return t * (W(h) - W(0.0)) / (h * h);
        }
        return W(t) / t;
    };
    return f;
}

HFunction deflate_once(const ModeSum& w) {
    const ModeSum odd_part = shift_reflect(w, RealParam(), true) - w;
    if (odd_part.is_exact()) {
        if (!odd_part.is_zero()) throw NotEven("w(t, y) - w(-t, y) = " + odd_part.to_string());
    } else {
        const Evaluator ew(w);
        const MaxPair m = kernels::max_abs2(
            default_grid(w.dim(), 0.0, kPi),
            [&](double t, std::span<const double> y) { return ew(t, y) - ew(-t, y); },
            [&](double t, std::span<const double> y) { return ew(t, y); });
        const double r = relative(m.first, m.second);
        if (r >= kHyperplaneTol) throw NotEven("relative evenness residual " + std::to_string(r));
    }
    const VanishingResult v = vanishes_at(w, RealParam());
    if (!v.vanishes()) throw NotVanishingAtZero("relative residual " + std::to_string(v.residual));
    if (auto h = divide_by_t(w)) return HFunction::symbolic(std::move(*h));
    return HFunction::quotient(w);
}

const HFunction& HChain::level(int index) const {
    if (index < 0 || index > order - 1) throw IndexOutOfRange("chain level " + std::to_string(index));
    if (index == 0) return *terminal;
    return levels[static_cast<std::size_t>(order - 1 - index)];
}

HChain h_chain_direct(const ModeSum& u, int N) {
    if (N < 1) throw InvariantViolation("order N must be at least 1");
    HChain chain;
    chain.order = N;
    chain.w = even_part(u, RealParam());
    HFunction h = deflate_once(chain.w);
    for (int i = 0; i + 1 < N; ++i) {
        chain.levels.push_back(h);
        h = next_level(h);
    }
    chain.terminal = std::move(h);
    return chain;
}

std::vector<LevelAudit> audit_chain(const HChain& chain) {
    std::vector<LevelAudit> out;
    const int N = chain.order;
    const int dim = chain.w.dim();
    const GridSpec grid = default_grid(dim, -N * kPi, N * kPi);
    for (int index = N - 1; index >= 1; --index) {
        const HFunction& H = chain.level(index);
        const MaxPair m = kernels::max_abs2(
            grid, [&](double t, std::span<const double> y) { return H(t, y) + H(-t, y); },
            [&](double t, std::span<const double> y) { return H(t, y); });
        LevelAudit a;
        a.index = index;
        a.oddness = relative(m.first, m.second);
        for (int i = 0; i <= index; ++i) {
            const double v = max_over_y(dim, [&](std::span<const double> y) { return H(i * kPi, y); });
            a.vanishing.push_back(relative(v, m.second));
        }
        out.push_back(std::move(a));
    }
    return out;
}

ClosedForm::ClosedForm(const ModeSum& u, int N) : order_(N), dim_(u.dim()) {
    if (N < 1) throw InvariantViolation("order N must be at least 1");
    const ModeSum w = even_part(u, RealParam());
    w_ = std::make_shared<const Evaluator>(w);
    dw_ = std::make_shared<const Evaluator>(dt(w));
    const Poly tau = Poly::monomial(Rational(1), 1);
    for (int j = 0; j < N; ++j) {
        Level lv;
        Poly q = tau;
        for (int i = 1; i <= j; ++i) q *= Poly{Rational(i * i), Rational(0), Rational(-1)};
        if (j == 0) {
            lv.p.push_back(Poly::constant(Rational(1)));
        } else {
            for (int l = 0; l <= j; ++l) lv.p.push_back(build_p(j, l));
        }
        for (const auto& p : lv.p) lv.dp.push_back(p.derivative());
        lv.dq = q.derivative();
        lv.q = std::move(q);
        levels_.push_back(std::move(lv));
    }
}

const ClosedForm::Level& ClosedForm::level(int j) const {
    if (j < 0 || j >= order_) throw IndexOutOfRange("closed-form level j = " + std::to_string(j));
    return levels_[static_cast<std::size_t>(j)];
}

double ClosedForm::numerator(int j, double t, std::span<const double> y, double* scale) const {
    const Level& lv = level(j);
    const double tau = t / kPi;
    const double pj = std::pow(kPi, j);
    double acc = 0.0, mag = 0.0;
    for (int l = 0; l <= j; ++l) {
        const double v = pj * lv.p[static_cast<std::size_t>(l)].evaluate(tau) * (*w_)((j - 2 * l) * kPi + t, y);
        acc += v;
        mag += std::abs(v);
    }
    if (scale) *scale = mag;
    return acc;
}

double ClosedForm::denominator(int j, double t) const {
    return std::pow(kPi, 2 * j + 1) * level(j).q.evaluate(t / kPi);
}

double ClosedForm::term_scale(int j, double t, std::span<const double> y) const {
    double mag = 0.0;
    numerator(j, t, y, &mag);
    const double d = std::abs(denominator(j, t));
    return d > 0.0 ? mag / d : mag;
}

double ClosedForm::numerator_derivative(int j, double t, std::span<const double> y, double* scale) const {
    const Level& lv = level(j);
    const double tau = t / kPi;
    const double pj = std::pow(kPi, j);
    double acc = 0.0, mag = 0.0;
    for (int l = 0; l <= j; ++l) {
        const auto ul = static_cast<std::size_t>(l);
        const double s = (j - 2 * l) * kPi + t;
        const double a = pj / kPi * lv.dp[ul].evaluate(tau) * (*w_)(s, y);
        const double b = pj * lv.p[ul].evaluate(tau) * (*dw_)(s, y);
        acc += a + b;
        mag += std::abs(a) + std::abs(b);
    }
    if (scale) *scale = mag;
    return acc;
}

double ClosedForm::value(int j, double t, std::span<const double> y) const {
    if (j < 1 || j >= order_)
        throw IndexOutOfRange("closed form needs 1 <= j <= N-1, got j = " + std::to_string(j));
    if (static_cast<int>(y.size()) != dim_) throw DimensionMismatch("y has wrong dimension");
    const double i = std::nearbyint(t / kPi);
    if (std::abs(i) <= j && std::abs(t - i * kPi) <= 1e-12 * std::max(1.0, std::abs(t))) {
        const double t0 = i * kPi;
        double nscale = 0.0, dscale = 0.0;
        const double s = numerator(j, t0, y, &nscale);
        const double ds = numerator_derivative(j, t0, y, &dscale);
        // Rounding in S(t0) is governed by the size of the terms of S and of π·S'.
        const double scale = nscale + kPi * dscale;
        if (std::abs(s) > 1e-8 * scale)
            throw SingularityNotRemovable("numerator " + std::to_string(s) + " at t = " + std::to_string(t0));
        return ds / (std::pow(kPi, 2 * j) * level(j).dq.evaluate(i));
    }
    return numerator(j, t, y) / denominator(j, t);
}

double ClosedForm::recursion_residual(int j, double t, std::span<const double> y) const {
    if (j < 1) throw IndexOutOfRange("recursion needs j >= 1");
    double m0 = 0.0, m1 = 0.0, m2 = 0.0;
    const double ca = -(j * kPi - t) * ((j - 1) * kPi - t);
    const double cb = (j * kPi + t) * ((j - 1) * kPi + t);
    const double lhs = t * numerator(j, t, y, &m0);
    const double a = ca * numerator(j - 1, kPi + t, y, &m1);
    const double b = cb * numerator(j - 1, t - kPi, y, &m2);
    // Measured against the sizes of the individual terms, so that levels which vanish
    // identically do not turn rounding noise into an O(1) ratio.
    const double scale = std::abs(t) * m0 + std::abs(ca) * m1 + std::abs(cb) * m2;
    return relative(std::abs(lhs - a - b), scale);
}

std::vector<double> ClosedForm::singular_set(int j) {
    std::vector<double> out;
    for (int i = -j; i <= j; ++i) out.push_back(i * kPi);
    return out;
}

double h_chain_closed_form(const ModeSum& u, int N, int j, double t, std::span<const double> y) {
    return ClosedForm(u, N).value(j, t, y);
}

std::vector<ChainComparison> compare_chain(const HChain& chain, const ClosedForm& cf, const GridSpec& grid) {
    std::vector<ChainComparison> out;
    for (int j = 1; j < chain.order; ++j) {
        const int index = chain.order - 1 - j;
        const HFunction& H = chain.level(index);
        const MaxPair m = kernels::max_abs2(
            grid, [&](double t, std::span<const double> y) { return H(t, y) - cf.value(j, t, y); },
            [&](double t, std::span<const double> y) { return H(t, y); });
        const double ts = kernels::max_abs(grid, [&](double t, std::span<const double> y) { return cf.term_scale(j, t, y); });
        ChainComparison c;
        c.index = index;
        c.abs_residual = m.first;
        c.residual = relative(m.first, std::max(m.second, ts));
        out.push_back(c);
    }
    return out;
}

GridSpec chain_grid(int dim, int N, double t_lo, double t_hi, int n_t) {
    GridSpec g = default_grid(dim, t_lo, t_hi, n_t);
    g.singular_t = ClosedForm::singular_set(std::max(N - 1, 0));
    g.margin = 0.05;
    return g;
}

}  // namespace strip
