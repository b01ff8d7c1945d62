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

#ifndef STRIP_RATIONAL_HPP
#define STRIP_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace strip {

/// Arbitrary-precision rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// Parses "p/q", "p" or a terminating decimal such as "-0.25". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Always "num/den", also for integers ("3/1").
std::string to_string(const Rational& r);

Rational binomial(long n, long k);
Rational factorial(long n);
Rational pow(const Rational& base, unsigned long exponent);

/// a/b in lowest terms; b ≠ 0.
inline Rational ratio(long a, long b) {
    Rational r{mpz_class(a), mpz_class(b)};
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace strip

#endif
