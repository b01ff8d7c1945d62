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

#ifndef STRIP_TESTS_SUPPORT_HPP
#define STRIP_TESTS_SUPPORT_HPP

#include "strip/mode_ops.hpp"
#include "strip/mode_sum.hpp"
#include "strip/real_param.hpp"

#include <numbers>
#include <random>
#include <vector>

namespace strip::test {

inline constexpr double kPi = std::numbers::pi;

inline PiPoly one() { return PiPoly::constant(Rational(1)); }
inline PiPoly rat(long p, long q = 1) { return PiPoly::constant(ratio(p, q)); }

inline RealParam pi_times(long p, long q = 1) { return RealParam::pi_multiple(ratio(p, q)); }

/// coef · t^m · trig(k t) · e^{k y}, d = 1.
inline Mode te(const PiPoly& coef, int m, Trig trig, const Rational& k) {
    return Mode::trig_exp(coef, m, trig, k, {k});
}

inline ModeSum sum1(std::initializer_list<Mode> modes) {
    ModeSum u(1);
    for (const auto& m : modes) u.add(m);
    return u;
}

/// t^m · y (harmonic in y for d = 1).
inline ModeSum t_pow_y(int m, const PiPoly& coef = one()) {
    YPoly h;
    h[{1}] = Rational(1);
    ModeSum u(1);
    u.add(Mode::poly_harm(coef, m, h, 1));
    return u;
}

inline double eval1(const ModeSum& u, double t, double y) {
    const double yy[1] = {y};
    return evaluate(u, t, yy);
}

/// Fixed-seed source for the randomized property tests.
inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240611);
    return gen;
}

inline long uniform_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

}  // namespace strip::test

#endif
