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

#ifndef STRIP_MODESPEC_HPP
#define STRIP_MODESPEC_HPP

#include "strip/mode_sum.hpp"
#include "strip/periodic.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace strip {

/// A modespec document: a named, exact mode sum on a declared strip (a, b) × R^d.
/// Grammar in docs/modespec.md.
struct ModeSpec {
    std::string name;
    int dim = 1;
    /// Canonical end-point texts ("-inf", "inf", "r*pi" or a decimal).
    std::array<std::string, 2> domain{"-inf", "inf"};
    std::vector<Mode> modes;

    ModeSum to_mode_sum() const;
    Domain domain_values() const;

    bool operator==(const ModeSpec& other) const;
};

/// Throws ParseError (malformed text, unknown or missing field) and
/// InvariantViolation (a mode that fails validation, e.g. |κ|² ≠ k²).
ModeSpec parse_modespec(std::string_view text);
ModeSpec load_modespec(const std::string& path);

/// Canonical JSON text, two-space indent, fixed field order.
std::string serialize_modespec(const ModeSpec& spec);

/// Spec of an exact mode sum; modes with several powers of π are split per power.
ModeSpec to_modespec(const ModeSum& u, std::string name = {});

}  // namespace strip

#endif
