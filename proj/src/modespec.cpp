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

#include "strip/modespec.hpp"

#include "strip/errors.hpp"

#include "json.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace strip {

namespace {

using json = nlohmann::ordered_json;

void only_fields(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) throw ParseError(path, "expected an object");
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, value] : obj.items())
        if (!ok.count(key)) throw ParseError(path + "." + key, "unknown field");
}

const json& required(const json& obj, const std::string& path, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(path + "." + key, "missing field");
    return *it;
}

Rational rational_field(const json& v, const std::string& path) {
    if (!v.is_string()) throw ParseError(path, "rationals are written as \"num/den\" strings");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(path, e.what());
    }
}

int int_field(const json& v, const std::string& path, int lo) {
    if (!v.is_number_integer()) throw ParseError(path, "expected an integer");
    const auto x = v.get<long long>();
    if (x < lo || x > std::numeric_limits<int>::max()) throw ParseError(path, "integer out of range");
    return static_cast<int>(x);
}

std::string domain_end(const json& v, const std::string& path) {
    if (!v.is_string()) throw ParseError(path, "domain ends are strings such as \"-3/2*pi\" or \"-inf\"");
    const auto s = v.get<std::string>();
    if (s == "inf" || s == "+inf") return "inf";
    if (s == "-inf") return "-inf";
    try {
        return parse_real_param(s).to_string();
    } catch (const std::invalid_argument& e) {
        throw ParseError(path, e.what());
    }
}

double domain_value(const std::string& s) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    return parse_real_param(s).value();
}

Mode parse_mode(const json& j, const std::string& path, int dim) {
    const auto kind = required(j, path, "kind");
    if (!kind.is_string()) throw ParseError(path + ".kind", "expected a string");
    const std::string kind_s = kind.get<std::string>();
    const Rational c = rational_field(required(j, path, "coefficient"), path + ".coefficient");
    const int pi_power = j.contains("pi_power") ? int_field(j["pi_power"], path + ".pi_power", 0) : 0;
    const PiPoly coef = PiPoly::monomial(c, pi_power);
    const int m = int_field(required(j, path, "m"), path + ".m", 0);

    if (kind_s == "trig_exp") {
        only_fields(j, path, {"kind", "coefficient", "pi_power", "m", "trig", "k", "kappa"});
        const auto& trig = required(j, path, "trig");
        if (trig != "sin" && trig != "cos") throw ParseError(path + ".trig", "expected \"sin\" or \"cos\"");
        const auto& kj = required(j, path, "kappa");
        if (!kj.is_array()) throw ParseError(path + ".kappa", "expected an array");
        if (static_cast<int>(kj.size()) != dim)
            throw ParseError(path + ".kappa", "expected " + std::to_string(dim) + " components");
        std::vector<Rational> kappa;
        for (std::size_t i = 0; i < kj.size(); ++i)
            kappa.push_back(rational_field(kj[i], path + ".kappa[" + std::to_string(i) + "]"));
        const Trig t = trig == "sin" ? Trig::Sin : Trig::Cos;
        if (j.contains("k")) return Mode::trig_exp(coef, m, t, rational_field(j["k"], path + ".k"), std::move(kappa));
        return Mode::trig_exp(coef, m, t, std::move(kappa));
    }
    if (kind_s == "poly_harm") {
        only_fields(j, path, {"kind", "coefficient", "pi_power", "m", "h"});
        const auto& hj = required(j, path, "h");
        if (!hj.is_array() || hj.empty()) throw ParseError(path + ".h", "expected a nonempty array of monomials");
        YPoly h;
        for (std::size_t i = 0; i < hj.size(); ++i) {
            const std::string mp = path + ".h[" + std::to_string(i) + "]";
            only_fields(hj[i], mp, {"exponent", "coefficient"});
            const auto& ej = required(hj[i], mp, "exponent");
            if (!ej.is_array() || static_cast<int>(ej.size()) != dim)
                throw ParseError(mp + ".exponent", "expected " + std::to_string(dim) + " exponents");
            std::vector<int> e;
            for (std::size_t q = 0; q < ej.size(); ++q)
                e.push_back(int_field(ej[q], mp + ".exponent[" + std::to_string(q) + "]", 0));
            if (h.count(e)) throw ParseError(mp + ".exponent", "repeated monomial");
            h[e] = rational_field(required(hj[i], mp, "coefficient"), mp + ".coefficient");
        }
        return Mode::poly_harm(coef, m, std::move(h), dim);
    }
    throw ParseError(path + ".kind", "expected \"trig_exp\" or \"poly_harm\"");
}

json mode_json(const Mode& mode, const Rational& c, int pi_power) {
    json j;
    j["kind"] = mode.kind == ModeKind::TrigExp ? "trig_exp" : "poly_harm";
    j["coefficient"] = to_string(c);
    if (pi_power != 0) j["pi_power"] = pi_power;
    j["m"] = mode.m;
    if (mode.kind == ModeKind::TrigExp) {
        j["trig"] = mode.trig == Trig::Sin ? "sin" : "cos";
        j["k"] = to_string(mode.k);
        json kappa = json::array();
        for (const auto& x : mode.kappa.components) kappa.push_back(to_string(x));
        j["kappa"] = kappa;
    } else {
        json h = json::array();
        for (const auto& [e, a] : mode.h) h.push_back(json{{"exponent", e}, {"coefficient", to_string(a)}});
        j["h"] = h;
    }
    return j;
}

}  // namespace

ModeSum ModeSpec::to_mode_sum() const {
    ModeSum u(dim);
    for (const auto& m : modes) u.add(m);
    return u;
}

Domain ModeSpec::domain_values() const { return Domain{domain_value(domain[0]), domain_value(domain[1])}; }

bool ModeSpec::operator==(const ModeSpec& o) const {
    return name == o.name && dim == o.dim && domain == o.domain && modes == o.modes;
}

ModeSpec parse_modespec(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("document", e.what());
    }
    only_fields(doc, "$", {"name", "dim", "domain", "modes"});
    ModeSpec spec;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw ParseError("$.name", "expected a string");
        spec.name = doc["name"].get<std::string>();
    }
    spec.dim = int_field(required(doc, "$", "dim"), "$.dim", 1);
    if (doc.contains("domain")) {
        const auto& d = doc["domain"];
        if (!d.is_array() || d.size() != 2) throw ParseError("$.domain", "expected [a, b]");
        spec.domain = {domain_end(d[0], "$.domain[0]"), domain_end(d[1], "$.domain[1]")};
        const Domain v = spec.domain_values();
        if (!(v.a < v.b)) throw ParseError("$.domain", "need a < b");
    }
    const auto& modes = required(doc, "$", "modes");
    if (!modes.is_array()) throw ParseError("$.modes", "expected an array");
    for (std::size_t i = 0; i < modes.size(); ++i) {
        const std::string path = "$.modes[" + std::to_string(i) + "]";
        if (!modes[i].is_object()) throw ParseError(path, "expected an object");
        spec.modes.push_back(parse_mode(modes[i], path, spec.dim));
    }
    return spec;
}

ModeSpec load_modespec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_modespec(ss.str());
}

std::string serialize_modespec(const ModeSpec& spec) {
    json doc;
    if (!spec.name.empty()) doc["name"] = spec.name;
    doc["dim"] = spec.dim;
    doc["domain"] = json::array({spec.domain[0], spec.domain[1]});
    json modes = json::array();
    for (const auto& m : spec.modes) {
        const auto& cs = m.coefficient.coefficients();
        for (std::size_t p = 0; p < cs.size(); ++p)
            if (sgn(cs[p]) != 0) modes.push_back(mode_json(m, cs[p], static_cast<int>(p)));
    }
    doc["modes"] = modes;
    return doc.dump(2) + "\n";
}

ModeSpec to_modespec(const ModeSum& u, std::string name) {
    ModeSpec spec;
    spec.name = std::move(name);
    spec.dim = u.dim();
    for (const auto& m : u.to_modes()) {
        const auto& cs = m.coefficient.coefficients();
        for (std::size_t p = 0; p < cs.size(); ++p) {
            if (sgn(cs[p]) == 0) continue;
            Mode part = m;
            part.coefficient = PiPoly::monomial(cs[p], static_cast<int>(p));
            spec.modes.push_back(std::move(part));
        }
    }
    return spec;
}

}  // namespace strip
