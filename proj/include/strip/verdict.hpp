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

#ifndef STRIP_VERDICT_HPP
#define STRIP_VERDICT_HPP

#include "strip/mode_ops.hpp"

#include <string>
#include <vector>

namespace strip {

enum class Conclusion {
    Confirmed,             ///< hypotheses hold, growth subcritical, conclusion verified
    GrowthViolated,        ///< hypotheses hold but growth is critical or worse
    PreconditionViolated,  ///< an order, hyperplane or antisymmetry hypothesis fails
    ConclusionFailed,      ///< hypotheses and growth hold but the conclusion check fails
};

enum class Theorem {
    BiharmonicSymmetry,      ///< order 2, two hyperplanes around t1
    PolyharmonicOddness,     ///< order N, antisymmetry on N hyperplane pairs
    BiharmonicUniqueness,    ///< order 2, four equidistant hyperplanes
    PolyharmonicUniqueness,  ///< order N, 2N equidistant hyperplanes
};

std::string to_string(Conclusion c);
/// Stable tag used in reports, e.g. "biharmonic-symmetry".
std::string theorem_tag(Theorem t);

struct CheckItem {
    std::string name;
    bool passed = false;
    double residual = 0.0;  ///< relative
    bool exact = false;     ///< decided in exact arithmetic
    std::string detail;
};

struct Verdict {
    Theorem theorem = Theorem::PolyharmonicOddness;
    int order = 0;
    std::vector<CheckItem> preconditions;
    Growth growth;
    std::vector<CheckItem> conclusion_checks;
    Conclusion conclusion = Conclusion::PreconditionViolated;
    std::vector<std::string> notes;

    double max_residual() const;
};

/// Oddness at t1 from antisymmetry about t1 at the N hyperplane pairs t1 ± j·c,
/// j = 0..N−1, after normalizing c to π. c must be a rational multiple of π.
Verdict symmetry_verdict(const ModeSum& u, const RealParam& t1, const RealParam& c, int N);

/// u ≡ 0 from vanishing on t0 + j·c, j = 0..2N−1. For N = 2 the intermediate
/// oddness at t0 + c and t0 + 2c is reported as separate line items.
Verdict uniqueness_verdict(const ModeSum& u, const RealParam& t0, const RealParam& c, int N);

}  // namespace strip

#endif
