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

#ifndef STRIP_DEFLATION_POLYS_HPP
#define STRIP_DEFLATION_POLYS_HPP

#include "strip/poly.hpp"

#include <string>
#include <vector>

namespace strip {

// All polynomials here are in the normalized variable τ = t/π. A degree-j
// polynomial P(τ) stands for π^j·P(t/π) in physical units.

/// A_j(τ) = (1+τ)(2+τ)…(j+τ), j ≥ 1.
Poly build_A(int j);

/// Coefficient polynomials of the closed-form chain representation.
/// p_{j,0} = A_j(−τ), p_{j,j} = A_j(τ), and p_{0,0} = 1. For 1 ≤ l ≤ j/2 the
/// binomial product form is used; for l > j/2 the mirror p_{j,j−l}(−τ).
Poly build_p(int j, int l);

/// The binomial product form taken literally for every 1 ≤ l ≤ j−1 (boundary l uses
/// A_j). Exposed so the identity report can record where the literal form breaks.
Poly build_p_literal(int j, int l);

/// p̃_{j,l} = −(j−τ)(j−1−τ)·p_{j−1,l}(τ+1) + (j+τ)(j−1+τ)·p_{j−1,l−1}(τ−1),
/// with p_{j−1,−1} = p_{j−1,j} = 0.
Poly build_p_tilde(int j, int l);

struct FactorBookkeeping {
    /// A = (j−τ)(j−1−τ)·p_{j−1,l}(τ+1) compared with p_{j,l}·(j−l)/l·(l−τ).
    bool a_matches_over_l = false;
    /// ... and with p_{j,l}·(j−l)/j·(l−τ).
    bool a_matches_over_j = false;
    /// B = (j+τ)(j−1+τ)·p_{j−1,l−1}(τ−1) compared with p_{j,l}·l/j·(j−l+τ).
    bool b_matches = false;
    /// −A + B == τ·p_{j,l}.
    bool bracket_is_tau = false;
};

struct IdentityEntry {
    int l = 0;
    bool passed = false;
    /// p̃_{j,l} − τ·p_{j,l}; zero when passed.
    Poly difference;
    /// p̃_{j,l} divided exactly by τ.
    bool divisible_by_tau = false;
    bool literal_product_matches = false;
    bool symmetric = false;  ///< p_{j,l}(τ) == p_{j,j−l}(−τ)
    bool has_factors = false;  ///< only for 1 ≤ l ≤ j−1
    FactorBookkeeping factors;
};

struct IdentityReport {
    int j = 0;
    std::vector<IdentityEntry> entries;  ///< l = 0..j
    std::string factor_note;

    bool all_passed() const;
};

/// Checks p̃_{j,l} = τ·p_{j,l} exactly for 1 ≤ j ≤ j_max, 0 ≤ l ≤ j.
/// Failures are recorded, never thrown.
std::vector<IdentityReport> verify_deflation_identity(int j_max);

/// Same result computed on one thread; kept as the reference for the parallel sweep.
std::vector<IdentityReport> verify_deflation_identity_serial(int j_max);

}  // namespace strip

#endif
