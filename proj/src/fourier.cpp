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

#include "strip/fourier.hpp"

#include "strip/errors.hpp"

#include <cmath>
#include <numbers>

namespace strip {

namespace {

constexpr double kPi = std::numbers::pi;

// π^p as a Q[π] element.
PiPoly pi_pow(int p, const Rational& c = Rational(1)) { return PiPoly::monomial(c, p); }

const GaussLegendre& rule64() {
    static const GaussLegendre rule = gauss_legendre(64);
    return rule;
}

}  // namespace

GaussLegendre gauss_legendre(int n) {
    if (n < 1) throw InvariantViolation("Gauss-Legendre rule needs n >= 1");
    GaussLegendre g;
    g.nodes.resize(static_cast<std::size_t>(n));
    g.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        const auto a = static_cast<std::size_t>(i), b = static_cast<std::size_t>(n - 1 - i);
        g.nodes[a] = -x;
        g.nodes[b] = x;
        g.weights[a] = w;
        g.weights[b] = w;
    }
    return g;
}

double integrate_panels(const std::function<double(double)>& f, double a, double b, int panels) {
    const GaussLegendre& g = rule64();
    const double width = (b - a) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * width;
        const double mid = lo + width / 2.0, half = width / 2.0;
        double s = 0.0;
        for (std::size_t i = 0; i < g.nodes.size(); ++i) s += g.weights[i] * f(mid + half * g.nodes[i]);
        total += half * s;
    }
    return total;
}

PiPoly integral_t_cos(int m, long n) {
    if (m < 0) throw InvariantViolation("negative power of t");
    n = std::abs(n);
    if (m % 2 == 1) return {};
    if (n == 0) return pi_pow(m + 1, ratio(2, m + 1));
    if (m == 0) return {};
    return integral_t_sin(m - 1, n) * ratio(-m, n);
}

PiPoly integral_t_sin(int m, long n) {
    if (m < 0) throw InvariantViolation("negative power of t");
    if (n == 0 || m % 2 == 0) return {};
    if (n < 0) return -integral_t_sin(m, -n);
    // [−t^m cos(nt)/n] over [−π, π] plus (m/n)∫ t^{m−1} cos(nt)
    const Rational sign(n % 2 == 0 ? 1 : -1);
    return pi_pow(m, Rational(-2 * sign / n)) + integral_t_cos(m - 1, n) * ratio(m, n);
}

YFunc fourier_sine_coefficient(const ModeSum& h, long k) {
    if (k < 1) throw InvariantViolation("Fourier index k must be positive");
    if (!h.is_exact()) throw ClosedFormUnavailable("closed form needs exact coefficients");
    YFunc out(h.dim());
    for (const auto& [key, c] : h.terms().exact()) {
        PiPoly integral;
        if (key.kind == ModeKind::PolyHarm) {
            integral = integral_t_sin(key.m, k);
        } else {
            if (!is_integer(key.k))
                throw ClosedFormUnavailable("frequency " + key.k.get_str() + " is not an integer");
            const long n = key.k.get_num().get_si();
            if (key.trig == Trig::Sin)
                integral = (integral_t_cos(key.m, n - k) - integral_t_cos(key.m, n + k)) * ratio(1, 2);
            else
                integral = (integral_t_sin(key.m, k + n) + integral_t_sin(key.m, k - n)) * ratio(1, 2);
        }
        const PiPoly value = c * integral.shift_degree(-1);
        if (key.kind == ModeKind::PolyHarm) out.add_monomial(key.yexp, value);
        else out.add_exponential(key.kappa, value);
    }
    return out;
}

double fourier_coeff(const ModeSum& h, long k, std::span<const double> y, FourierMethod method) {
    if (k < 1) throw InvariantViolation("Fourier index k must be positive");
    if (static_cast<int>(y.size()) != h.dim()) throw DimensionMismatch("y has wrong dimension");
    if (method == FourierMethod::ClosedForm) return fourier_sine_coefficient(h, k).evaluate(y);
    const Evaluator ev(h);
    const double kd = static_cast<double>(k);
    return integrate_panels([&](double t) { return ev(t, y) * std::sin(kd * t); }, -kPi, kPi) / kPi;
}

HelmholtzReport helmholtz_annihilation_check(const ModeSum& h, long k, int N) {
    if (!h.is_exact()) throw InexactInput("Helmholtz check needs exact coefficients");
    if (N < 0) throw InvariantViolation("N must be non-negative");
    HelmholtzReport rep;
    rep.coefficient = fourier_sine_coefficient(h, k);
    YFunc g = rep.coefficient;
    for (int i = 0; i < N; ++i) g = g.helmholtz(Rational(k));
    rep.passed = g.is_zero();
    rep.survivors = std::move(g);
    return rep;
}

KernelVerdict vekua_rellich_decide(const YFunc& f, const Rational& k, int N) {
    if (!f.is_exact()) throw InexactInput("kernel decision needs exact coefficients");
    if (sgn(k) <= 0) throw InvariantViolation("k must be positive");
    YFunc g = f;
    for (int i = 0; i < N; ++i) g = g.helmholtz(k);
    if (!g.is_zero()) throw NotInKernel("(Delta - k^2)^N f = " + g.to_string());
    KernelVerdict v;
    v.rate_squared = f.max_rate_squared();
    v.decision = f.is_zero() ? KernelDecision::IdenticallyZero : KernelDecision::GrowthViolated;
    return v;
}

}  // namespace strip
