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

#include "strip/nullspace.hpp"

#include "strip/errors.hpp"
#include "strip/linalg.hpp"
#include "strip/mode_ops.hpp"

#include <map>

namespace strip {

namespace {

using Restriction = std::vector<YFunc>;  // one per template mode

Restriction restrict_all(int dim, const std::vector<Mode>& templ, const RealParam& t) {
    Restriction out;
    for (const auto& m : templ) {
        ModeSum single(dim);
        single.add(m);
        out.push_back(restrict_to_hyperplane(single, t));
    }
    return out;
}

Restriction add(Restriction a, const Restriction& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

}  // namespace

NullspaceResult vanishing_nullspace(int dim, const std::vector<Mode>& templ, const std::vector<RealParam>& t_values,
                                    const std::vector<OddnessPair>& pairs) {
    for (std::size_t i = 0; i < templ.size(); ++i) {
        templ[i].validate(dim);
        for (std::size_t j = 0; j < i; ++j) {
            Mode a = templ[i], b = templ[j];
            a.coefficient = b.coefficient = PiPoly::constant(Rational(1));
            if (a == b) throw InvariantViolation("template modes " + std::to_string(j) + " and " + std::to_string(i) +
                                                 " share the same key");
        }
    }

    std::vector<Restriction> constraints;
    for (const auto& t : t_values) constraints.push_back(restrict_all(dim, templ, t));
    for (const auto& p : pairs) constraints.push_back(add(restrict_all(dim, templ, p.plus), restrict_all(dim, templ, p.minus)));

    bool exact = true;
    for (const auto& c : constraints)
        for (const auto& f : c) exact = exact && f.is_exact();

    NullspaceResult res;
    res.exact = exact;
    res.unknowns = templ.size();
    const std::size_t n = templ.size();

    if (exact) {
        Matrix<RatFunc> a;
        for (const auto& c : constraints) {
            std::map<YKey, std::vector<RatFunc>> rows;
            for (std::size_t i = 0; i < n; ++i)
                for (const auto& [key, v] : c[i].series().exact()) {
                    auto& row = rows.try_emplace(key, std::vector<RatFunc>(n)).first->second;
                    row[i] = RatFunc(v);
                }
            for (auto& [key, row] : rows) a.push_back(std::move(row));
        }
        res.rows = a.size();
        for (const auto& v : nullspace_exact(std::move(a), n)) {
            auto p = clear_denominators(v);
            std::vector<double> d;
            double m = 0.0;
            for (const auto& x : p) {
                d.push_back(pi_value(x));
                m = std::max(m, std::abs(d.back()));
            }
            for (auto& x : d) x /= m;
            res.exact_basis.push_back(std::move(p));
            res.basis.push_back(std::move(d));
        }
        return res;
    }

    Matrix<double> a;
    for (const auto& c : constraints) {
        std::map<YKey, std::vector<double>> rows;
        for (std::size_t i = 0; i < n; ++i)
            c[i].series().for_each_value([&](const YKey& key, double v) {
                rows.try_emplace(key, std::vector<double>(n, 0.0)).first->second[i] = v;
            });
        for (auto& [key, row] : rows) a.push_back(std::move(row));
    }
    res.rows = a.size();
    res.basis = nullspace_numeric(std::move(a), n);
    return res;
}

ModeSum assemble(int dim, const std::vector<Mode>& templ, const std::vector<PiPoly>& coeffs) {
    if (coeffs.size() != templ.size()) throw DimensionMismatch("coefficient count differs from template size");
    ModeSum u(dim);
    for (std::size_t i = 0; i < templ.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        Mode m = templ[i];
        m.coefficient = m.coefficient * coeffs[i];
        u.add(m);
    }
    return u;
}

ModeSum assemble(int dim, const std::vector<Mode>& templ, const std::vector<double>& coeffs) {
    if (coeffs.size() != templ.size()) throw DimensionMismatch("coefficient count differs from template size");
    ModeSum u(dim);
    u.terms() = Series<TermKey>::from(Series<TermKey>::NumericMap{});
    for (std::size_t i = 0; i < templ.size(); ++i) {
        ModeSum single(dim);
        single.add(templ[i]);
        u += single.scaled(coeffs[i]);
    }
    return u;
}

std::vector<RealParam> equidistant(const RealParam& t0, const RealParam& c, int n) {
    std::vector<RealParam> out;
    for (int j = 0; j < n; ++j) out.push_back(t0 + static_cast<long>(j) * c);
    return out;
}

}  // namespace strip
