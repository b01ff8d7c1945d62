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

#include "strip/deflation_polys.hpp"

namespace strip {

namespace {

void check_indices(int j, int l) {
    if (j < 0) throw IndexOutOfRange("j must be non-negative, got " + std::to_string(j));
    if (l < 0 || l > j)
        throw IndexOutOfRange("l must lie in [0," + std::to_string(j) + "], got " + std::to_string(l));
}

Poly reflect(const Poly& p) { return p.compose_affine(Rational(-1), Rational(0)); }

// (a − τ) and (a + τ)
Poly minus_tau(long a) { return Poly::linear(Rational(a), Rational(-1)); }
Poly plus_tau(long a) { return Poly::linear(Rational(a), Rational(1)); }

Poly binomial_product(int j, int l) {
    Poly out = Poly::constant(binomial(j, l));
    for (int s = 0; s <= l - 1; ++s) out *= minus_tau(j - s) * plus_tau(j - s);
    for (int s = 0; s <= j - 1 - 2 * l; ++s) out *= minus_tau(j - l - s);
    return out;
}

Poly p_or_zero(int j, int l) {
    if (l < 0 || l > j) return {};
    return build_p(j, l);
}

IdentityEntry check_entry(int j, int l) {
    IdentityEntry e;
    e.l = l;
    const Poly tau = Poly::monomial(Rational(1), 1);
    const Poly p = build_p(j, l);
    const Poly tilde = build_p_tilde(j, l);
    e.difference = tilde - tau * p;
    e.passed = e.difference.is_zero();
    try {
        e.divisible_by_tau = divide_exact(tilde, tau) == p;
    } catch (const InexactDivision&) {
        e.divisible_by_tau = false;
    }
    e.literal_product_matches = build_p_literal(j, l) == p;
    e.symmetric = p == reflect(build_p(j, j - l));

    if (l >= 1 && l <= j - 1) {
        e.has_factors = true;
        const Poly a = minus_tau(j) * minus_tau(j - 1) * p_or_zero(j - 1, l).compose_affine(1, 1);
        const Poly b = plus_tau(j) * plus_tau(j - 1) * p_or_zero(j - 1, l - 1).compose_affine(1, -1);
        const Rational jl(j - l), jj(j), ll(l);
        e.factors.a_matches_over_l = a == p * (jl / ll) * minus_tau(l);
        e.factors.a_matches_over_j = a == p * (jl / jj) * minus_tau(l);
        e.factors.b_matches = b == p * (ll / jj) * plus_tau(j - l);
        e.factors.bracket_is_tau = (b - a) == tau * p;
    }
    return e;
}

std::string describe_factors(const IdentityReport& r) {
    bool any = false, over_l = true, over_j = true, b_ok = true;
    for (const auto& e : r.entries) {
        if (!e.has_factors) continue;
        any = true;
        over_l = over_l && e.factors.a_matches_over_l;
        over_j = over_j && e.factors.a_matches_over_j;
        b_ok = b_ok && e.factors.b_matches;
    }
    if (!any) return "no middle indices";
    std::string note = "A with (j-l)/l: ";
    note += over_l ? "holds" : "fails";
    note += "; A with (j-l)/j: ";
    note += over_j ? "holds" : "fails";
    note += "; B with l/j: ";
    note += b_ok ? "holds" : "fails";
    return note;
}

IdentityReport check_level(int j) {
    IdentityReport r;
    r.j = j;
    for (int l = 0; l <= j; ++l) r.entries.push_back(check_entry(j, l));
    r.factor_note = describe_factors(r);
    return r;
}

}  // namespace

Poly build_A(int j) {
    if (j < 0) throw IndexOutOfRange("build_A needs j >= 0");
    Poly out = Poly::constant(Rational(1));
    for (int i = 1; i <= j; ++i) out *= plus_tau(i);
    return out;
}

Poly build_p(int j, int l) {
    check_indices(j, l);
    if (l == j) return build_A(j);
    if (l == 0) return reflect(build_A(j));
    if (2 * l <= j) return binomial_product(j, l);
    return reflect(binomial_product(j, j - l));
}

Poly build_p_literal(int j, int l) {
    check_indices(j, l);
    if (l == j) return build_A(j);
    if (l == 0) return reflect(build_A(j));
    return binomial_product(j, l);
}

Poly build_p_tilde(int j, int l) {
    if (j < 1) throw IndexOutOfRange("build_p_tilde needs j >= 1");
    check_indices(j, l);
    Poly out = -(minus_tau(j) * minus_tau(j - 1) * p_or_zero(j - 1, l).compose_affine(1, 1));
    out += plus_tau(j) * plus_tau(j - 1) * p_or_zero(j - 1, l - 1).compose_affine(1, -1);
    return out;
}

bool IdentityReport::all_passed() const {
    for (const auto& e : entries)
        if (!e.passed) return false;
    return true;
}

std::vector<IdentityReport> verify_deflation_identity_serial(int j_max) {
    if (j_max < 1) throw IndexOutOfRange("j_max must be >= 1");
    std::vector<IdentityReport> out;
    for (int j = 1; j <= j_max; ++j) out.push_back(check_level(j));
    return out;
}

std::vector<IdentityReport> verify_deflation_identity(int j_max) {
    if (j_max < 1) throw IndexOutOfRange("j_max must be >= 1");
    std::vector<IdentityReport> out(static_cast<std::size_t>(j_max));
    // Levels are independent; GMP objects are never shared between iterations.
#pragma omp parallel for schedule(dynamic)
    for (int j = 1; j <= j_max; ++j) out[static_cast<std::size_t>(j - 1)] = check_level(j);
    return out;
}

}  // namespace strip
