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

#include "doctest.h"

#include "strip/chain.hpp"
#include "strip/errors.hpp"
#include "strip/fourier.hpp"
#include "strip/linalg.hpp"
#include "strip/nullspace.hpp"
#include "strip/verdict.hpp"
#include "support.hpp"

#include <cmath>

using namespace strip;
using namespace strip::test;

namespace {

ModeSum sin_exp(int m = 0, const Rational& k = Rational(1), const PiPoly& c = one()) {
    return sum1({te(c, m, Trig::Sin, k)});
}

double max_abs_diff(const HFunction& h, const ModeSum& expect) {
    const Evaluator e(expect);
    double m = 0.0;
    for (double t = -3.0; t <= 3.0; t += 0.25)
        for (double y : {-1.0, 0.0, 1.0}) {
            const double yy[1] = {y};
            m = std::max(m, std::abs(h(t, yy) - e(t, yy)));
        }
    return m;
}

}  // namespace

TEST_CASE("even part examples") {
    CHECK(even_part(sin_exp(1), RealParam()) == sin_exp(1, Rational(1), rat(2)));
    CHECK(even_part(sin_exp(), RealParam()).is_zero());
    CHECK(even_part(sum1({te(one(), 0, Trig::Cos, Rational(1))}), pi_times(1, 2)).is_zero());
}

TEST_CASE("deflate_once examples") {
    const HFunction a = deflate_once(sin_exp(1, Rational(1), rat(2)));
    REQUIRE(a.is_symbolic());
    CHECK(*a.mode_sum() == sin_exp(0, Rational(1), rat(2)));
    const ModeSum cos2 = sum1({te(rat(2), 2, Trig::Cos, Rational(1))});
    CHECK(*deflate_once(cos2).mode_sum() == sum1({te(rat(2), 1, Trig::Cos, Rational(1))}));
    // 2t^2 sin t is odd in t, so it is rejected rather than divided.
    CHECK_THROWS_AS(deflate_once(sin_exp(2, Rational(1), rat(2))), NotEven);
    const HFunction z = deflate_once(ModeSum(1));
    CHECK(z.mode_sum()->is_zero());
    CHECK_THROWS_AS(deflate_once(sin_exp()), NotEven);
    CHECK_THROWS_AS(deflate_once(sum1({te(one(), 0, Trig::Cos, Rational(1))})), NotVanishingAtZero);
}

TEST_CASE("quotient path with the small-t Taylor branch") {
    const ModeSum w = sin_exp(1, Rational(1), rat(2)).to_numeric();
    const HFunction h = HFunction::quotient(w);
    CHECK_FALSE(h.is_symbolic());
    const double y[1] = {0.5};
    CHECK(h(0.0, y) == 0.0);
    for (double t : {-2.0, -1e-4, 3e-4, 0.7})
        CHECK(h(t, y) == doctest::Approx(2.0 * std::sin(t) * std::exp(0.5)).epsilon(1e-9));
}

TEST_CASE("direct chain examples") {
    SUBCASE("t^2 sin t e^y, N = 3: even part vanishes") {
        const HChain c = h_chain_direct(sin_exp(2), 3);
        CHECK(c.w.is_zero());
        CHECK(c.level(2).mode_sum()->is_zero());
        CHECK(c.level(1).mode_sum()->is_zero());
    }
    SUBCASE("t^3 sin t e^y, N = 4") {
        const HChain c = h_chain_direct(sin_exp(3), 4);
        CHECK(*c.level(3).mode_sum() == sin_exp(2, Rational(1), rat(2)));
        CHECK(*c.level(2).mode_sum() == sin_exp(0, Rational(1), PiPoly::monomial(Rational(-8), 1)));
        CHECK(c.level(1).mode_sum()->is_zero());
        CHECK(c.level(0).mode_sum()->is_zero());
    }
    SUBCASE("t sin t e^y, N = 2") {
        const HChain c = h_chain_direct(sin_exp(1), 2);
        CHECK(*c.level(1).mode_sum() == sin_exp(0, Rational(1), rat(2)));
        CHECK(c.level(0).mode_sum()->is_zero());
    }
    SUBCASE("sin t e^y, N = 1: nothing to deflate") {
        const HChain c = h_chain_direct(sin_exp(), 1);
        CHECK(c.levels.empty());
        CHECK(c.w.is_zero());
    }
    CHECK_THROWS_AS(h_chain_direct(sin_exp(), 2).level(5), IndexOutOfRange);
}

TEST_CASE("closed form examples") {
    const ModeSum u = sin_exp(3);
    const ClosedForm cf(u, 4);
    const ModeSum h2 = sin_exp(0, Rational(1), PiPoly::monomial(Rational(-8), 1));
    const Evaluator e2(h2);
    for (double t : {-2.9, -1.1, 0.4, 2.2})
        for (double y : {-1.0, 0.3}) {
            const double yy[1] = {y};
            CAPTURE(t);
            CHECK(cf.value(1, t, yy) == doctest::Approx(e2(t, yy)).epsilon(1e-10));
            double scale = 0.0;
            const double num = cf.numerator(2, t, yy, &scale);
            CHECK(std::abs(num) <= 1e-12 * scale);
        }
    const double y0[1] = {0.2};
    CHECK(std::abs(cf.value(1, 0.0, y0)) < 1e-9);
    CHECK(cf.value(1, kPi, y0) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(h_chain_closed_form(u, 4, 1, 0.4, y0) == doctest::Approx(-8 * kPi * std::sin(0.4) * std::exp(0.2)));
    CHECK(ClosedForm::singular_set(2).size() == 5);
}

TEST_CASE("closed form detects a non-removable singularity") {
    // t^2 cos t e^y is even, so w(0) ≠ 0 and w/t blows up at the origin.
    const ModeSum u = sum1({te(one(), 2, Trig::Cos, Rational(1))}) + sum1({te(one(), 0, Trig::Cos, Rational(1))});
    const ClosedForm cf(u, 3);
    const double y[1] = {0.0};
    CHECK_THROWS_AS(cf.value(1, 0.0, y), SingularityNotRemovable);
}

TEST_CASE("chain consistency: direct equals closed form") {
    for (int N = 2; N <= 4; ++N) {
        const ModeSum u = sin_exp(N - 1);
        const HChain c = h_chain_direct(u, N);
        const ClosedForm cf(u, N);
        for (const auto& r : compare_chain(c, cf, chain_grid(1, N))) {
            CAPTURE(N);
            CAPTURE(r.index);
            CHECK(r.residual < 1e-9);
        }
        const double y[1] = {0.4};
        for (int j = 1; j < N; ++j)
            for (double t : {-2.3, 0.7, 1.9}) CHECK(cf.recursion_residual(j, t, y) < 1e-12);
    }
}

TEST_CASE("chain members are odd and vanish at multiples of pi") {
    for (int N = 2; N <= 4; ++N) {
        const HChain c = h_chain_direct(sin_exp(N - 1) + sin_exp(N - 1, Rational(2), rat(-3, 4)), N);
        for (const auto& a : audit_chain(c)) {
            CHECK(a.oddness < 1e-9);
            for (double v : a.vanishing) CHECK(v < 1e-9);
        }
    }
}

TEST_CASE("numeric overlay chain agrees with the exact chain") {
    const ModeSum u = sin_exp(3);
    const HChain exact = h_chain_direct(u, 4);
    const HChain numeric = h_chain_direct(u.to_numeric(), 4);
    for (int i = 1; i <= 3; ++i) {
        CAPTURE(i);
        CHECK(max_abs_diff(numeric.level(i), *exact.level(i).mode_sum()) < 1e-6);
    }
}

TEST_CASE("Gauss-Legendre rule") {
    const GaussLegendre g = gauss_legendre(64);
    double w = 0.0;
    for (double x : g.weights) w += x;
    CHECK(w == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(integrate_panels([](double t) { return t * t; }, -1.0, 2.0) == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("Fourier coefficient examples") {
    const double y[1] = {0.7};
    for (long k = 1; k <= 10; ++k) {
        const YFunc a = fourier_sine_coefficient(t_pow_y(1), k);
        YFunc expect(1);
        expect.add_monomial({1}, rat(k % 2 ? 2 : -2, k));
        CHECK(a.to_string() == expect.to_string());
        CHECK(std::abs(fourier_coeff(t_pow_y(1), k, y, FourierMethod::Quadrature) - a.evaluate(y)) < 1e-10);
    }
    CHECK(fourier_coeff(sin_exp(), 1, y, FourierMethod::ClosedForm) == doctest::Approx(std::exp(0.7)));
    CHECK(fourier_sine_coefficient(sin_exp(), 2).is_zero());
    const YFunc a3 = fourier_sine_coefficient(t_pow_y(3), 1);
    CHECK(a3.evaluate(y) == doctest::Approx((2 * kPi * kPi - 12) * 0.7).epsilon(1e-14));
    CHECK_THROWS_AS(fourier_sine_coefficient(sin_exp(0, ratio(1, 2)), 1), ClosedFormUnavailable);
    CHECK_THROWS_AS(fourier_sine_coefficient(sin_exp().to_numeric(), 1), ClosedFormUnavailable);
}

TEST_CASE("Fourier: closed form and quadrature agree for m <= 3") {
    for (int m = 0; m <= 3; ++m)
        for (long k = 1; k <= 4; ++k) {
            const ModeSum h = sin_exp(m, Rational(2)) + sum1({te(rat(-1, 3), m, Trig::Cos, Rational(3))}) + t_pow_y(m);
            for (double y : {-1.0, 0.0, 1.0}) {
                const double yy[1] = {y};
                CHECK(std::abs(fourier_coeff(h, k, yy, FourierMethod::ClosedForm) -
                               fourier_coeff(h, k, yy, FourierMethod::Quadrature)) < 1e-10);
            }
        }
}

TEST_CASE("Helmholtz annihilation examples") {
    CHECK(helmholtz_annihilation_check(sin_exp(), 1, 1).passed);
    const HelmholtzReport r = helmholtz_annihilation_check(t_pow_y(1), 1, 1);
    CHECK_FALSE(r.passed);
    CHECK(r.survivors.evaluate(std::vector<double>{1.0}) == doctest::Approx(-2.0));
    CHECK(helmholtz_annihilation_check(ModeSum(1), 3, 2).passed);
    CHECK_THROWS_AS(helmholtz_annihilation_check(sin_exp().to_numeric(), 1, 1), InexactInput);
}

TEST_CASE("Vekua-Rellich decision examples") {
    CHECK(vekua_rellich_decide(YFunc(1), Rational(1), 1).decision == KernelDecision::IdenticallyZero);
    YFunc e(1);
    e.add_exponential({Rational(1)}, one());
    const KernelVerdict v = vekua_rellich_decide(e, Rational(1), 1);
    CHECK(v.decision == KernelDecision::GrowthViolated);
    CHECK(v.rate_squared == 1);
    YFunc half(1);
    half.add_exponential({ratio(1, 2)}, one());
    CHECK_THROWS_AS(vekua_rellich_decide(half, Rational(1), 1), NotInKernel);
}

TEST_CASE("symmetry verdict examples") {
    const Verdict a = symmetry_verdict(sin_exp(0, ratio(1, 2)), RealParam(), pi_times(1), 2);
    CHECK(a.conclusion == Conclusion::Confirmed);
    CHECK(a.max_residual() < 1e-9);
    CHECK(a.theorem == Theorem::BiharmonicSymmetry);
    const Verdict b = symmetry_verdict(sin_exp(), RealParam(), pi_times(1), 2);
    CHECK(b.conclusion == Conclusion::GrowthViolated);
    CHECK(b.growth.critical);
    const Verdict c = symmetry_verdict(sin_exp(1, ratio(1, 2)), RealParam(), pi_times(1), 2);
    CHECK(c.conclusion == Conclusion::PreconditionViolated);
    const Verdict d = symmetry_verdict(sin_exp(3, ratio(1, 2)), RealParam(), pi_times(1), 2);
    CHECK(d.conclusion == Conclusion::PreconditionViolated);  // order 4 > 2
    CHECK_THROWS_AS(symmetry_verdict(sin_exp(), RealParam(), pi_times(1), 0), InvariantViolation);
}

TEST_CASE("symmetry verdict with shifted and rescaled data") {
    // sin((t - t1)/(2c/pi)) style: u(t) = sin(k (t - pi/3)) with k c < pi.
    const ModeSum u = shift_reflect(sin_exp(0, ratio(1, 4)), pi_times(-1, 3), false);
    const Verdict v = symmetry_verdict(u, pi_times(1, 3), pi_times(2), 3);
    CHECK(v.conclusion == Conclusion::Confirmed);
    CHECK(v.theorem == Theorem::PolyharmonicOddness);
}

TEST_CASE("uniqueness verdict examples") {
    const Verdict z = uniqueness_verdict(ModeSum(1), RealParam(), pi_times(1), 2);
    CHECK(z.conclusion == Conclusion::Confirmed);
    const Verdict s = uniqueness_verdict(sin_exp(), RealParam(), pi_times(1), 1);
    CHECK(s.conclusion == Conclusion::GrowthViolated);
    CHECK(s.theorem == Theorem::PolyharmonicUniqueness);
    const Verdict t = uniqueness_verdict(sin_exp(1), RealParam(), pi_times(1), 2);
    CHECK(t.conclusion == Conclusion::GrowthViolated);
    CHECK(t.theorem == Theorem::BiharmonicUniqueness);
    for (const auto& p : t.preconditions) CHECK(p.passed);
    const Verdict n = uniqueness_verdict(sin_exp(0, ratio(1, 2)), RealParam(), pi_times(1), 1);
    CHECK(n.conclusion == Conclusion::PreconditionViolated);
}

TEST_CASE("verdict monotonicity under scaling") {
    const std::vector<ModeSum> inputs{sin_exp(0, ratio(1, 2)), sin_exp(), sin_exp(1, ratio(1, 2)), sin_exp(1),
                                      t_pow_y(1) + sin_exp(0, ratio(1, 3))};
    for (const auto& u : inputs)
        for (const Rational s : {ratio(-7, 3), ratio(1, 1000), Rational(1000000)}) {
            CHECK(symmetry_verdict(u.scaled(s), RealParam(), pi_times(1), 2).conclusion ==
                  symmetry_verdict(u, RealParam(), pi_times(1), 2).conclusion);
            CHECK(uniqueness_verdict(u.scaled(s), RealParam(), pi_times(1), 2).conclusion ==
                  uniqueness_verdict(u, RealParam(), pi_times(1), 2).conclusion);
        }
}

TEST_CASE("exact null space over Q(pi)") {
    // [[1, pi], [pi, pi^2]] has kernel spanned by (-pi, 1).
    Matrix<RatFunc> a{{RatFunc(PiPoly::constant(Rational(1))), RatFunc(PiPoly::monomial(Rational(1), 1))},
                      {RatFunc(PiPoly::monomial(Rational(1), 1)), RatFunc(PiPoly::monomial(Rational(1), 2))}};
    const auto ns = nullspace_exact(a, 2);
    REQUIRE(ns.size() == 1);
    const auto v = clear_denominators(ns[0]);
    CHECK(v[0] == PiPoly::monomial(Rational(-1), 1));
    CHECK(v[1] == PiPoly::constant(Rational(1)));
}

TEST_CASE("numeric null space") {
    Matrix<double> a{{1.0, 2.0, 3.0}, {2.0, 4.0, 6.0}};
    const auto ns = nullspace_numeric(a, 3);
    CHECK(ns.size() == 2);
    for (const auto& v : ns) CHECK(std::abs(v[0] + 2 * v[1] + 3 * v[2]) < 1e-14);
    CHECK(nullspace_numeric(Matrix<double>{{1.0, 0.0}, {0.0, 1e-3}}, 2).empty());
}

TEST_CASE("vanishing null space examples") {
    const auto a = vanishing_nullspace(1, {te(one(), 0, Trig::Sin, Rational(1))}, {RealParam(), pi_times(1, 2)});
    CHECK(a.exact);
    CHECK(a.dimension() == 0);
    const auto pts = equidistant(RealParam(), pi_times(1), 4);
    const auto b = vanishing_nullspace(1, {te(one(), 0, Trig::Sin, Rational(1)), te(one(), 1, Trig::Sin, Rational(1))}, pts);
    CHECK(b.dimension() == 2);
    const Rational h = ratio(1, 2);
    const auto c = vanishing_nullspace(
        1, {te(one(), 0, Trig::Sin, h), te(one(), 1, Trig::Sin, h), te(one(), 0, Trig::Cos, h), te(one(), 1, Trig::Cos, h)}, pts);
    CHECK(c.exact);
    CHECK(c.dimension() == 0);
    CHECK_THROWS_AS(vanishing_nullspace(1, {te(one(), 0, Trig::Sin, h), te(rat(2), 0, Trig::Sin, h)}, pts), InvariantViolation);
}

TEST_CASE("oddness pairs select the odd subspace") {
    const Rational k = ratio(1, 2);
    std::vector<Mode> templ;
    for (int m = 0; m < 3; ++m)
        for (Trig tr : {Trig::Sin, Trig::Cos}) templ.push_back(te(one(), m, tr, k));
    std::vector<OddnessPair> pairs;
    for (int j = 0; j < 3; ++j) pairs.push_back({pi_times(j), pi_times(-j)});
    const auto r = vanishing_nullspace(1, templ, {}, pairs);
    REQUIRE(r.exact);
    CHECK(r.dimension() == 3);
    for (const auto& b : r.exact_basis) {
        const ModeSum u = assemble(1, templ, b);
        CHECK(symmetry_verdict(u, RealParam(), pi_times(1), 3).conclusion == Conclusion::Confirmed);
    }
}
