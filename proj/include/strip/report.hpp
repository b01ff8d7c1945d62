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

#ifndef STRIP_REPORT_HPP
#define STRIP_REPORT_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace strip {

enum class Status { Pass, Fail, Info };
std::string to_string(Status s);

struct CheckRecord {
    std::string name;
    Status status = Status::Info;
    double residual = 0.0;
    std::string ref;  ///< theorem or identity tag the check exercises
    bool exact = false;
    std::string detail;
};

/// Residual grid exported with --table.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    std::string to_csv() const;
};

struct RunReport {
    std::string command;
    /// Canonical (key, value) inputs, in insertion order; the digest covers exactly these.
    std::vector<std::pair<std::string, std::string>> inputs;
    std::string verdict;  ///< empty when the command has none
    std::vector<CheckRecord> checks;
    std::vector<std::string> notes;
    std::string error;
    int exit_code = 0;
    std::string timestamp;  ///< never part of the digest
    Table table;

    void add(CheckRecord c) { checks.push_back(std::move(c)); }
    bool any_failed() const;
    std::string inputs_digest() const;
    std::string to_json(bool with_timestamp = true) const;
};

/// Lower-case hex SHA-256.
std::string sha256_hex(std::string_view data);

/// Shortest text that round-trips the double.
std::string format_double(double v);

}  // namespace strip

#endif
