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

#ifndef STRIP_CLI_HPP
#define STRIP_CLI_HPP

#include "strip/report.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace strip {

/// Runs one stripcheck subcommand. `args` excludes the program name.
/// Exit codes: 0 all checks pass, 1 a check or conclusion failed, 2 a precondition
/// or input error. With `last_report` set, the report is also returned to the caller.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                std::optional<RunReport>* last_report = nullptr);

/// The sin t·e^y demonstration used by the `counterexample` subcommand.
RunReport counterexample_report();

}  // namespace strip

#endif
