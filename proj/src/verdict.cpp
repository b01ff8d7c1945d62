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

#include "strip/verdict.hpp"

#include "strip/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace strip {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr const char* kClassNote = "certified on finite mode sums only; the general polyharmonic class is not covered";

RealParam pi_times(long j) { return RealParam::pi_multiple(Rational(j)); }

CheckItem order_item(const ModeSum& v, int N) {
    CheckItem it;
    it.name = "polyharmonic order <= " + std::to_string(N);
    if (v.is_exact()) {
        const int ord = polyharmonic_order(v);
        it.exact = true;
        it.passed = ord <= N;
        it.detail = "order " + std::to_string(ord);
    } else {
        const int ord = order_bound(v);
        it.passed = ord <= N;
        it.detail = "structural bound " + std::to_string(ord);
    }
    return it;
}

double max_over_y(const YFunc& f) {
    GridSpec g;
    g.y = default_y_axes(f.dim());
    double best = 0.0;
    for (const auto& y : g.y_points()) best = std::max(best, std::abs(f.evaluate(y)));
    return best;
}

// f ≡ 0 on the hyperplane data, exactly when f is exact.
CheckItem zero_item(std::string name, const YFunc& f, double scale) {
    CheckItem it;
    it.name = std::move(name);
    it.exact = f.is_exact();
    it.residual = f.is_zero() ? 0.0 : relative(max_over_y(f), scale);
    it.passed = it.exact ? f.is_zero() : it.residual < kHyperplaneTol;
    return it;
}

CheckItem oddness_item(std::string name, const ModeSum& v, const RealParam& at, double reach) {
    GridSpec g = default_grid(v.dim(), 0.0, reach);
    const OddnessReport r = is_odd_at(v, at, g);
    CheckItem it;
    it.name = std::move(name);
    it.exact = r.exact_odd.has_value();
    it.residual = r.rel_residual;
    it.passed = r.odd();
    return it;
}

Conclusion decide(const Verdict& v) {
    for (const auto& c : v.preconditions)
        if (!c.passed) return Conclusion::PreconditionViolated;
    if (!v.growth.subcritical) return Conclusion::GrowthViolated;
    for (const auto& c : v.conclusion_checks)
        if (!c.passed) return Conclusion::ConclusionFailed;
    return Conclusion::Confirmed;
}

std::string growth_note(const Growth& g) {
    return "growth rate " + g.rate.get_str() + " against spacing-adjusted bound 1 (normalized): " +
           (g.subcritical ? "subcritical" : (g.critical ? "critical" : "supercritical"));
}

}  // namespace

std::string to_string(Conclusion c) {
    switch (c) {
        case Conclusion::Confirmed: return "Confirmed";
        case Conclusion::GrowthViolated: return "GrowthViolated";
        case Conclusion::PreconditionViolated: return "PreconditionViolated";
        case Conclusion::ConclusionFailed: return "ConclusionFailed";
    }
    return "?";
}

std::string theorem_tag(Theorem t) {
    switch (t) {
        case Theorem::BiharmonicSymmetry: return "biharmonic-symmetry";
        case Theorem::PolyharmonicOddness: return "polyharmonic-oddness";
        case Theorem::BiharmonicUniqueness: return "biharmonic-uniqueness";
        case Theorem::PolyharmonicUniqueness: return "polyharmonic-uniqueness";
    }
    return "?";
}

double Verdict::max_residual() const {
    double m = 0.0;
    for (const auto& c : preconditions) m = std::max(m, c.residual);
    for (const auto& c : conclusion_checks) m = std::max(m, c.residual);
    return m;
}

Verdict symmetry_verdict(const ModeSum& u, const RealParam& t1, const RealParam& c, int N) {
    if (N < 1) throw InvariantViolation("order N must be at least 1");
    const ModeSum v = normalize(u, t1, c);
    Verdict out;
    out.theorem = N == 2 ? Theorem::BiharmonicSymmetry : Theorem::PolyharmonicOddness;
    out.order = N;
    out.preconditions.push_back(order_item(v, N));

    const double scale = reference_scale(v, default_grid(v.dim(), -N * kPi, N * kPi));
    for (int j = 0; j < N; ++j) {
        YFunc f = restrict_to_hyperplane(v, pi_times(j));
        f += restrict_to_hyperplane(v, pi_times(-j));
        const std::string name = j == 0 ? "u(t1, y) = 0"
                                        : "u(t1 + " + std::to_string(j) + "c, y) = -u(t1 - " + std::to_string(j) + "c, y)";
        out.preconditions.push_back(zero_item(name, f, scale));
    }

    out.growth = growth(v, pi_times(1));
    out.conclusion_checks.push_back(oddness_item("odd at t1", v, RealParam(), N * kPi));
    out.conclusion = decide(out);
    out.notes.push_back(growth_note(out.growth));
    out.notes.push_back(kClassNote);
    return out;
}

Verdict uniqueness_verdict(const ModeSum& u, const RealParam& t0, const RealParam& c, int N) {
    if (N < 1) throw InvariantViolation("order N must be at least 1");
    const ModeSum v = normalize(u, t0, c);
    Verdict out;
    out.theorem = N == 2 ? Theorem::BiharmonicUniqueness : Theorem::PolyharmonicUniqueness;
    out.order = N;
    out.preconditions.push_back(order_item(v, N));

    const GridSpec grid = default_grid(v.dim(), -kPi, 2 * N * kPi);
    const double scale = reference_scale(v, grid);
    for (int j = 0; j < 2 * N; ++j) {
        const YFunc f = restrict_to_hyperplane(v, pi_times(j));
        out.preconditions.push_back(zero_item("u(t0 + " + std::to_string(j) + "c, y) = 0", f, scale));
    }
    out.growth = growth(v, pi_times(1));

    if (N == 2) {
        out.conclusion_checks.push_back(oddness_item("odd at t0 + c", v, pi_times(1), kPi));
        out.conclusion_checks.push_back(oddness_item("odd at t0 + 2c", v, pi_times(2), kPi));
        out.notes.push_back(
            "order 2: oddness about t0 + c (from t0, t0 + c, t0 + 2c) and about t0 + 2c (from t0 + c .. t0 + 3c) "
            "combine into period 2c; both points are checked separately");
    }
    if (v.is_exact()) {
        CheckItem sym;
        sym.name = "u = 0 (all combined coefficients)";
        sym.exact = true;
        sym.passed = v.is_zero();
        sym.detail = v.is_zero() ? "" : v.to_string();
        out.conclusion_checks.push_back(sym);
    } else {
        out.notes.push_back("symbolic zero test unavailable on a numeric overlay");
    }
    const Evaluator ev(v);
    const MaxPair m = kernels::max_abs2(
        grid, [&](double t, std::span<const double> y) { return ev(t, y); },
        [&](double t, std::span<const double> y) { return ev.magnitude(t, y); });
    CheckItem num;
    num.name = "max |u| on grid";
    num.residual = relative(m.first, m.second);
    num.passed = num.residual < kHyperplaneTol;
    out.conclusion_checks.push_back(num);

    out.conclusion = decide(out);
    out.notes.push_back(growth_note(out.growth));
    if (out.conclusion == Conclusion::GrowthViolated && !v.is_zero())
        out.notes.push_back("u vanishes on all hyperplanes but is not identically zero");
    out.notes.push_back(kClassNote);
    return out;
}

}  // namespace strip
