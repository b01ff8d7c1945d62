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

#include "strip/report.hpp"

#include "json.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace strip {

namespace {

using json = nlohmann::ordered_json;

json inputs_json(const RunReport& r) {
    json in = json::object();
    for (const auto& [k, v] : r.inputs) in[k] = v;
    return in;
}

}  // namespace

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Info: return "info";
    }
    return "?";
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::string Table::to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + header[i];
    out += "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + format_double(row[i]);
        out += "\n";
    }
    return out;
}

bool RunReport::any_failed() const {
    return std::any_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.status == Status::Fail; });
}

std::string sha256_hex(std::string_view data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

std::string RunReport::inputs_digest() const { return sha256_hex(json{{"command", command}, {"inputs", inputs_json(*this)}}.dump()); }

std::string RunReport::to_json(bool with_timestamp) const {
    json doc;
    doc["command"] = command;
    doc["inputs"] = inputs_json(*this);
    doc["inputs_digest"] = inputs_digest();
    if (!verdict.empty()) doc["verdict"] = verdict;
    json checks_j = json::array();
    for (const auto& c : checks) {
        json j;
        j["name"] = c.name;
        j["status"] = to_string(c.status);
        // Residuals are written as text so that inf and nan survive.
        j["residual"] = std::isfinite(c.residual) ? json(c.residual) : json(format_double(c.residual));
        j["paper_ref"] = c.ref;
        j["exact"] = c.exact;
        if (!c.detail.empty()) j["detail"] = c.detail;
        checks_j.push_back(j);
    }
    doc["checks"] = checks_j;
    doc["notes"] = notes;
    if (!error.empty()) doc["error"] = error;
    doc["exit"] = exit_code;
    if (with_timestamp) doc["timestamp"] = timestamp;
    return doc.dump(2) + "\n";
}

}  // namespace strip
