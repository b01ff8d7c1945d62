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

#ifndef STRIP_NULLSPACE_HPP
#define STRIP_NULLSPACE_HPP

#include "strip/mode_sum.hpp"
#include "strip/real_param.hpp"

#include <vector>

namespace strip {

/// Constraint u(plus, y) = −u(minus, y) for all y.
struct OddnessPair {
    RealParam plus;
    RealParam minus;
};

struct NullspaceResult {
    bool exact = false;
    std::size_t rows = 0;
    std::size_t unknowns = 0;
    /// Q[π] basis (exact route only).
    std::vector<std::vector<PiPoly>> exact_basis;
    /// Floating basis, unit max-norm; filled on both routes.
    std::vector<std::vector<double>> basis;

    std::size_t dimension() const noexcept { return basis.size(); }
};

/// Coefficient vectors c such that Σ c_i·template_i vanishes on every hyperplane
/// t = t_j and satisfies every oddness pair. Each template mode contributes one
/// unknown; constraints are split per y-basis function (e^{⟨κ,y⟩} or y^α).
/// Exact elimination over Q(π) when all trig values are exact, floating with
/// pivot tolerance 1e−10 otherwise. Throws InvariantViolation for duplicate modes.
NullspaceResult vanishing_nullspace(int dim, const std::vector<Mode>& templ, const std::vector<RealParam>& t_values,
                                    const std::vector<OddnessPair>& pairs = {});

/// Σ c_i·template_i.
ModeSum assemble(int dim, const std::vector<Mode>& templ, const std::vector<PiPoly>& coeffs);
ModeSum assemble(int dim, const std::vector<Mode>& templ, const std::vector<double>& coeffs);

/// t0, t0 + c, …, t0 + (n−1)c.
std::vector<RealParam> equidistant(const RealParam& t0, const RealParam& c, int n);

}  // namespace strip

#endif
