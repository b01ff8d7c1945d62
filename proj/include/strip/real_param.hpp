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

#ifndef STRIP_REAL_PARAM_HPP
#define STRIP_REAL_PARAM_HPP

#include "strip/rational.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace strip {

/// A real-valued input (t0, t1, c, a hyperplane position) that is either an exact
/// rational multiple of π or a plain floating value. Only the exact form keeps
/// shifts and trig values inside exact arithmetic.
class RealParam {
public:
    RealParam() : pi_coeff_(Rational(0)) {}

    static RealParam pi_multiple(const Rational& r);
    static RealParam numeric(double v);

    bool is_exact() const noexcept { return pi_coeff_.has_value(); }
    /// r for a value r·π; throws std::logic_error for numeric params.
    const Rational& pi_coefficient() const;
    double value() const noexcept { return value_; }

    /// Canonical text: "r*pi" (r as p/q) for exact values, shortest round-trip decimal otherwise.
    std::string to_string() const;

    friend RealParam operator+(const RealParam& a, const RealParam& b);
    friend RealParam operator-(const RealParam& a, const RealParam& b);
    friend RealParam operator*(long n, const RealParam& a);
    RealParam operator-() const;

    friend bool operator==(const RealParam& a, const RealParam& b);

private:
    std::optional<Rational> pi_coeff_;
    double value_ = 0.0;
};

/// Accepts "pi", "-pi", "<rational>*pi", "<rational>pi", "pi/<int>", or a plain number.
/// A plain number equal to zero is exact (0·π). Throws std::invalid_argument.
RealParam parse_real_param(std::string_view text);

}  // namespace strip

#endif
