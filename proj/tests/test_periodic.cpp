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

#include "strip/errors.hpp"
#include "strip/periodic.hpp"
#include "support.hpp"

#include <cmath>

using namespace strip;
using namespace strip::test;

namespace {

const Domain kDomain{-1.5 * kPi, 2.5 * kPi};

ModeSum sin_exp(long k = 1, const PiPoly& c = one()) { return sum1({te(c, 0, Trig::Sin, Rational(k))}); }

}  // namespace

TEST_CASE("build_extension examples") {
    const ExtendedFunction e = build_extension(sin_exp(), RealParam(), pi_times(1), kDomain);
    CHECK(e.delta() == doctest::Approx(kPi));
    CHECK(e.period() == doctest::Approx(2 * kPi));
    const double y[1] = {0.4};
    for (double t = -20.0; t <= 20.0; t += 0.37)
        CHECK(e(t, y) == doctest::Approx(std::sin(t) * std::exp(0.4)).epsilon(1e-12).scale(1.0));

    const ModeSum two = sin_exp(1, rat(3, 2)) + sin_exp(2, rat(-1, 5));
    const ExtendedFunction f = build_extension(two, RealParam(), pi_times(1), kDomain);
    const Evaluator ev(two);
    for (double t = -15.0; t <= 15.0; t += 0.41) CHECK(f(t, y) == doctest::Approx(ev(t, y)).scale(1.0));

    try {
        build_extension(t_pow_y(1), RealParam(), RealParam::numeric(1.0), Domain{-10.0, 10.0});
        FAIL("expected NotOddAtPoint");
    } catch (const NotOddAtPoint& err) {
        CHECK(err.point() == 1.0);
    }
}

TEST_CASE("build_extension errors") {
    CHECK_THROWS_AS(build_extension(sin_exp(), RealParam(), pi_times(1), Domain{-kPi, 3 * kPi}), InsufficientMargin);
    CHECK_THROWS_AS(build_extension(sin_exp(), RealParam(), pi_times(1), Domain{-2 * kPi, 2 * kPi}), InsufficientMargin);
    CHECK_THROWS_AS(build_extension(sin_exp(), pi_times(1), RealParam(), kDomain), InvariantViolation);
    CHECK_NOTHROW(build_extension(sin_exp(), RealParam(), pi_times(1), Domain{}));
}

TEST_CASE("tile index") {
    const ExtendedFunction e = build_extension(sin_exp(), RealParam(), pi_times(1), kDomain);
    CHECK(e.tile(-kPi) == 0);
    CHECK(e.tile(2 * kPi - 1e-9) == 0);
    CHECK(e.tile(2 * kPi + 1e-9) == 1);
    CHECK(e.tile(-kPi - 1e-9) == -1);
    CHECK(e.tile(100.0) == static_cast<long>(std::floor((100.0 + kPi) / (2 * kPi))));
    const auto s = e.seams(-10.0, 10.0);
    CHECK(std::is_sorted(s.begin(), s.end()));
    CHECK(std::find_if(s.begin(), s.end(), [](double x) { return std::abs(x - 2 * kPi) < 1e-12; }) != s.end());
    CHECK(std::find_if(s.begin(), s.end(), [](double x) { return std::abs(x - kPi) < 1e-12; }) == s.end());
}

TEST_CASE("core agreement is exact on the window") {
    const ModeSum u = sin_exp(1) + sin_exp(3, rat(1, 7));
    const ExtendedFunction e = build_extension(u, RealParam(), pi_times(1), kDomain);
    const Evaluator ev(u);
    const double y[1] = {-0.6};
    for (double t = e.window_lo(); t < e.window_hi(); t += 0.05) CHECK(e(t, y) == ev(t, y));
}

TEST_CASE("verify_extension on integer sine sums") {
    const ExtensionReport a = verify_extension(build_extension(sin_exp(), RealParam(), pi_times(1), kDomain));
    CHECK(a.periodicity < 1e-13);
    CHECK(a.core_agreement == 0.0);
    CHECK_FALSE(a.seam_defect());
    const ModeSum two = sin_exp(1) + sin_exp(2, rat(-3, 7));
    const ExtensionReport b = verify_extension(build_extension(two, RealParam(), pi_times(1), kDomain));
    CHECK(b.periodicity < 1e-12);
    CHECK_FALSE(b.seam_defect());
}

TEST_CASE("verify_extension with a numeric anchor") {
    const ExtendedFunction e =
        build_extension(sin_exp(2), RealParam::numeric(kPi / 2), RealParam::numeric(kPi), Domain{-10.0, 10.0});
    const ExtensionReport r = verify_extension(e);
    CHECK(r.periodicity < 1e-12);
    CHECK_FALSE(r.seam_defect());
}

TEST_CASE("corrupted tile is detected") {
    const ExtendedFunction e = build_extension(sin_exp(), RealParam(), pi_times(1), kDomain);
    const ExtendedFunction bad = e.with_tile_override(2, sin_exp(1, rat(11, 10)));
    const ExtensionReport r = verify_extension(bad);
    CHECK(r.seam_defect());
    CHECK(r.max_seam_jump() > 0.05);
    CHECK(r.periodicity > 0.05);
    // A tiny perturbation in a derivative only: still caught at order >= 1.
    const ModeSum nudged = sin_exp() + sum1({te(rat(1, 100000), 0, Trig::Sin, Rational(2))});
    const ExtensionReport s = verify_extension(e.with_tile_override(-1, nudged));
    CHECK(s.seam_defect());
    CHECK_THROWS_AS(e.with_tile_override(1, ModeSum(2)), DimensionMismatch);
}
