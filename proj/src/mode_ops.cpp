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

#include "strip/mode_ops.hpp"

#include "strip/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <type_traits>
#include <utility>

namespace strip {

namespace {

using NumericTerms = Series<TermKey>::NumericMap;

TermKey trig_key(int m, Trig trig, std::vector<Rational> kappa, Rational k) {
    return TermKey{ModeKind::TrigExp, m, trig, std::move(kappa), std::move(k), {}};
}

TermKey harm_key(int m, std::vector<int> yexp) {
    return TermKey{ModeKind::PolyHarm, m, Trig::Sin, {}, Rational(0), std::move(yexp)};
}

// Calls f(key, coefficient, emit) for every term; emit(key, value) adds to the result,
// which stays exact iff u is.
template <class F>
ModeSum map_terms(const ModeSum& u, F&& f) {
    ModeSum out(u.dim());
    if (u.is_exact()) {
        auto emit = [&](const TermKey& k, const PiPoly& v) { out.terms().add(k, v); };
        for (const auto& [key, c] : u.terms().exact()) f(key, c, emit);
    } else {
        out.terms() = Series<TermKey>::from(NumericTerms{});
        auto emit = [&](const TermKey& k, double v) { out.terms().add(k, v); };
        for (const auto& [key, c] : u.terms().numeric()) f(key, c, emit);
    }
    return out;
}

// Converts an exact scalar to the coefficient type in use. Only the exact→exact,
// exact→double and double→double directions occur.
template <class C, class X>
C as(const X& x) {
    if constexpr (std::is_same_v<C, X>) return x;
    else if constexpr (std::is_same_v<C, double>) return pi_value(x);
    else throw std::logic_error("floating scalar in exact expansion");
}

// sin(nπ/2), cos(nπ/2)
std::pair<int, int> quarter_turn(const mpz_class& n) {
    mpz_class r = n % 4;
    if (r < 0) r += 4;
    switch (r.get_si()) {
        case 0: return {0, 1};
        case 1: return {1, 0};
        case 2: return {0, -1};
        default: return {-1, 0};
    }
}

// True when u(t0 + ·) can be expanded exactly: t0 = rπ with 2·k·r ∈ Z for every frequency.
bool exact_shift_possible(const ModeSum& u, const RealParam& t0) {
    if (!u.is_exact() || !t0.is_exact()) return false;
    const Rational& r = t0.pi_coefficient();
    for (const auto& [key, c] : u.terms().exact())
        if (key.kind == ModeKind::TrigExp && !is_integer(Rational(2 * key.k * r))) return false;
    return true;
}

struct ExactPoint {
    Rational r;  // t0 = rπ
    PiPoly power(int n) const { return PiPoly::monomial(pow(r, static_cast<unsigned long>(n)), n); }
    std::pair<PiPoly, PiPoly> trig(const Rational& k) const {
        Rational n = 2 * k * r;
        auto [s, c] = quarter_turn(n.get_num());
        return {PiPoly::constant(Rational(s)), PiPoly::constant(Rational(c))};
    }
};

struct NumericPoint {
    double t0;
    double power(int n) const { return n == 0 ? 1.0 : std::pow(t0, n); }
    std::pair<double, double> trig(const Rational& k) const {
        const double th = k.get_d() * t0;
        return {std::sin(th), std::cos(th)};
    }
};

// u(t0 + a·t, ys·y) with |ys| = |a| ≠ 0.
template <class Point>
ModeSum affine(const ModeSum& u, const Point& p, const Rational& a, const Rational& ys) {
    const int sigma = sgn(a);
    const Rational abs_a = abs(a);
    return map_terms(u, [&](const TermKey& key, const auto& c, auto&& emit) {
        using C = std::decay_t<decltype(c)>;
        for (int n = 0; n <= key.m; ++n) {
            const Rational scale = binomial(key.m, n) * pow(a, static_cast<unsigned long>(n));
            const C base = coeff_scale(c, scale) * as<C>(p.power(key.m - n));
            if (key.kind == ModeKind::PolyHarm) {
                int total = 0;
                for (int e : key.yexp) total += e;
                emit(harm_key(n, key.yexp), coeff_scale(base, pow(ys, static_cast<unsigned long>(total))));
                continue;
            }
            std::vector<Rational> kappa = key.kappa;
            for (auto& v : kappa) v *= ys;
            const Rational k = key.k * abs_a;
            const auto [s, co] = p.trig(key.k);
            const Rational sig(sigma);
            if (key.trig == Trig::Sin) {
                emit(trig_key(n, Trig::Cos, kappa, k), base * as<C>(s));
                emit(trig_key(n, Trig::Sin, kappa, k), coeff_scale(base * as<C>(co), sig));
            } else {
                emit(trig_key(n, Trig::Cos, kappa, k), base * as<C>(co));
                emit(trig_key(n, Trig::Sin, kappa, k), coeff_scale(base * as<C>(s), -sig));
            }
        }
    });
}

ModeSum affine_dispatch(const ModeSum& u, const RealParam& t0, const Rational& a, const Rational& ys) {
    if (exact_shift_possible(u, t0)) return affine(u, ExactPoint{t0.pi_coefficient()}, a, ys);
    return affine(u.to_numeric(), NumericPoint{t0.value()}, a, ys);
}

template <class Point>
YFunc restrict_impl(const ModeSum& u, const Point& p) {
    YFunc out(u.dim());
    const auto zeros_k = std::vector<Rational>(static_cast<std::size_t>(u.dim()), Rational(0));
    const auto zeros_e = std::vector<int>(static_cast<std::size_t>(u.dim()), 0);
    auto run = [&](const auto& terms) {
        for (const auto& [key, c] : terms) {
            using C = std::decay_t<decltype(c)>;
            const C base = c * as<C>(p.power(key.m));
            if (key.kind == ModeKind::PolyHarm) {
                out.series().add(YKey{zeros_k, key.yexp}, base);
                continue;
            }
            const auto [s, co] = p.trig(key.k);
            out.series().add(YKey{key.kappa, zeros_e}, base * as<C>(key.trig == Trig::Sin ? s : co));
        }
    };
    if constexpr (std::is_same_v<Point, ExactPoint>) {
        run(u.terms().exact());
    } else {
        out.series() = Series<YKey>::from(Series<YKey>::NumericMap{});
        run(u.terms().numeric());
    }
    return out;
}

double max_over_y(const YFunc& f) {
    GridSpec g;
    g.y = default_y_axes(f.dim());
    double best = 0.0;
    for (const auto& y : g.y_points()) best = std::max(best, std::abs(f.evaluate(y)));
    return best;
}

}  // namespace

double evaluate(const ModeSum& u, double t, std::span<const double> y) { return Evaluator(u)(t, y); }

ModeSum apply_laplacian(const ModeSum& u) {
    if (!u.is_exact()) throw InexactInput("the strip Laplacian needs exact coefficients");
    return map_terms(u, [](const TermKey& key, const auto& c, auto&& emit) {
        const int m = key.m;
        if (key.kind == ModeKind::PolyHarm) {
            if (m >= 2) emit(harm_key(m - 2, key.yexp), coeff_scale(c, Rational(m * (m - 1))));
            // Δ_y of the monomial; cancels across a harmonic group.
            for (std::size_t i = 0; i < key.yexp.size(); ++i) {
                const int e = key.yexp[i];
                if (e < 2) continue;
                auto lowered = key.yexp;
                lowered[i] -= 2;
                emit(harm_key(m, lowered), coeff_scale(c, Rational(e * (e - 1))));
            }
            return;
        }
        const Trig co = key.trig == Trig::Sin ? Trig::Cos : Trig::Sin;
        const Rational sign(key.trig == Trig::Sin ? 1 : -1);
        if (m >= 2) emit(trig_key(m - 2, key.trig, key.kappa, key.k), coeff_scale(c, Rational(m * (m - 1))));
        if (m >= 1) emit(trig_key(m - 1, co, key.kappa, key.k), coeff_scale(c, Rational(sign * 2 * m * key.k)));
    });
}

int polyharmonic_order(const ModeSum& u) {
    if (!u.is_exact()) throw InexactInput("order certification needs exact coefficients");
    const int bound = order_bound(u);
    ModeSum v = u;
    for (int n = 0; n <= bound; ++n) {
        if (v.is_zero()) return n;
        v = apply_laplacian(v);
    }
    throw InvariantViolation("Laplacian iteration exceeded the structural order bound");
}

int order_bound(const ModeSum& u) {
    int best = 0;
    u.terms().for_each_value([&](const TermKey& key, double) {
        best = std::max(best, key.kind == ModeKind::TrigExp ? key.m + 1 : key.m / 2 + 1);
    });
    return best;
}

ModeSum dt(const ModeSum& u) {
    return map_terms(u, [](const TermKey& key, const auto& c, auto&& emit) {
        const int m = key.m;
        if (key.kind == ModeKind::PolyHarm) {
            if (m >= 1) emit(harm_key(m - 1, key.yexp), coeff_scale(c, Rational(m)));
            return;
        }
        if (m >= 1) emit(trig_key(m - 1, key.trig, key.kappa, key.k), coeff_scale(c, Rational(m)));
        const bool sine = key.trig == Trig::Sin;
        emit(trig_key(m, sine ? Trig::Cos : Trig::Sin, key.kappa, key.k),
             coeff_scale(c, sine ? key.k : Rational(-key.k)));
    });
}

ModeSum shift_reflect(const ModeSum& u, const RealParam& t0, bool reflect) {
    return affine_dispatch(u, t0, Rational(reflect ? -1 : 1), Rational(1));
}

ModeSum normalize(const ModeSum& u, const RealParam& t1, const RealParam& c) {
    if (!c.is_exact())
        throw UnsupportedScale("scale c = " + c.to_string() + " is not a rational multiple of pi");
    const Rational s = c.pi_coefficient();
    if (sgn(s) <= 0) throw InvariantViolation("scale c must be positive");
    return affine_dispatch(u, t1, s, s);
}

Growth growth(const ModeSum& u, const RealParam& c) {
    if (!(c.value() > 0.0)) throw InvariantViolation("hyperplane spacing c must be positive");
    Growth g;
    g.rate = Rational(0);
    u.terms().for_each_value([&](const TermKey& key, double) {
        if (key.kind == ModeKind::TrigExp && key.k > g.rate) g.rate = key.k;
    });
    if (c.is_exact()) {
        const Rational prod = g.rate * c.pi_coefficient();
        g.critical = prod == 1;
        g.subcritical = prod < 1;
    } else {
        const double v = g.rate.get_d() * c.value() / std::numbers::pi;
        g.critical = std::abs(v - 1.0) <= 1e-12;
        g.subcritical = v < 1.0 && !g.critical;
    }
    return g;
}

YFunc restrict_to_hyperplane(const ModeSum& u, const RealParam& t0) {
    if (exact_shift_possible(u, t0)) return restrict_impl(u, ExactPoint{t0.pi_coefficient()});
    return restrict_impl(u.to_numeric(), NumericPoint{t0.value()});
}

double reference_scale(const ModeSum& u, const GridSpec& grid) {
    const Evaluator ev(u);
    return kernels::max_abs(grid, [&](double t, std::span<const double> y) { return ev(t, y); });
}

double reference_scale(const ModeSum& u, const RealParam& t0) {
    const double c = t0.value();
    return reference_scale(u, default_grid(u.dim(), c - std::numbers::pi, c + std::numbers::pi));
}

VanishingResult vanishes_at(const ModeSum& u, const RealParam& t0, double scale) {
    const YFunc f = restrict_to_hyperplane(u, t0);
    VanishingResult r;
    if (f.is_zero()) {
        r.status = f.is_exact() ? Vanishing::ExactZero : Vanishing::NumericZero;
        return r;
    }
    r.residual = relative(max_over_y(f), scale);
    if (f.is_exact()) r.status = Vanishing::Nonzero;
    else r.status = r.residual < kHyperplaneTol ? Vanishing::NumericZero : Vanishing::Nonzero;
    return r;
}

VanishingResult vanishes_at(const ModeSum& u, const RealParam& t0) {
    return vanishes_at(u, t0, reference_scale(u, t0));
}

OddnessReport is_odd_at(const ModeSum& u, const RealParam& t0, const GridSpec& grid) {
    OddnessReport rep;
    const ModeSum even = shift_reflect(u, t0, false) + shift_reflect(u, t0, true);
    if (even.is_exact()) rep.exact_odd = even.is_zero();
    const Evaluator ev(u);
    const double c = t0.value();
    const MaxPair m = kernels::max_abs2(
        grid, [&](double t, std::span<const double> y) { return ev(c + t, y) + ev(c - t, y); },
        [&](double t, std::span<const double> y) { return std::max(std::abs(ev(c + t, y)), std::abs(ev(c - t, y))); });
    rep.abs_residual = m.first;
    rep.rel_residual = relative(m.first, m.second);
    return rep;
}

std::optional<ModeSum> divide_by_t(const ModeSum& u) {
    bool ok = true;
    u.terms().for_each_value([&](const TermKey& key, double) { ok = ok && key.m >= 1; });
    if (!ok) return std::nullopt;
    return map_terms(u, [](const TermKey& key, const auto& c, auto&& emit) {
        TermKey k = key;
        k.m -= 1;
        emit(k, c);
    });
}

}  // namespace strip
