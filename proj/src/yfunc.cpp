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

#include "strip/yfunc.hpp"

#include "strip/errors.hpp"

#include <cmath>
#include <sstream>

namespace strip {

namespace {

int compare(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

template <class C>
void helmholtz_terms(const std::map<YKey, C>& in, const Rational& k, int dim, Series<YKey>& out) {
    const Rational k2 = k * k;
    for (const auto& [key, c] : in) {
        Rational norm2(0);
        for (const auto& v : key.kappa) norm2 += v * v;
        const Rational diag = norm2 - k2;
        if (sgn(diag) != 0) out.add(key, coeff_scale(c, diag));
        for (int i = 0; i < dim; ++i) {
            const int a = key.exps[static_cast<std::size_t>(i)];
            if (a >= 2) {
                YKey lowered = key;
                lowered.exps[static_cast<std::size_t>(i)] -= 2;
                out.add(lowered, coeff_scale(c, Rational(a * (a - 1))));
            }
            const Rational& ki = key.kappa[static_cast<std::size_t>(i)];
            if (a >= 1 && sgn(ki) != 0) {
                YKey lowered = key;
                lowered.exps[static_cast<std::size_t>(i)] -= 1;
                out.add(lowered, coeff_scale(c, Rational(2 * a) * ki));
            }
        }
    }
}

}  // namespace

bool operator<(const YKey& a, const YKey& b) {
    if (int c = compare(a.kappa, b.kappa); c != 0) return c < 0;
    return a.exps < b.exps;
}

bool operator==(const YKey& a, const YKey& b) { return compare(a.kappa, b.kappa) == 0 && a.exps == b.exps; }

void YFunc::add_exponential(const std::vector<Rational>& kappa, const PiPoly& c) {
    if (static_cast<int>(kappa.size()) != dim_) throw DimensionMismatch("exponential direction has wrong dimension");
    series_.add(YKey{kappa, std::vector<int>(static_cast<std::size_t>(dim_), 0)}, c);
}

void YFunc::add_monomial(const std::vector<int>& exps, const PiPoly& c) {
    if (static_cast<int>(exps.size()) != dim_) throw DimensionMismatch("monomial has wrong dimension");
    series_.add(YKey{std::vector<Rational>(static_cast<std::size_t>(dim_), Rational(0)), exps}, c);
}

double YFunc::evaluate(std::span<const double> y) const {
    if (static_cast<int>(y.size()) != dim_) throw DimensionMismatch("y has wrong dimension");
    double acc = 0.0;
    series_.for_each_value([&](const YKey& key, double c) {
        double dot = 0.0, mono = 1.0;
        for (int i = 0; i < dim_; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            dot += key.kappa[ui].get_d() * y[ui];
            mono *= std::pow(y[ui], key.exps[ui]);
        }
        acc += c * mono * std::exp(dot);
    });
    return acc;
}

YFunc YFunc::helmholtz(const Rational& k) const {
    YFunc out(dim_);
    if (series_.is_exact()) {
        helmholtz_terms(series_.exact(), k, dim_, out.series_);
    } else {
        out.series_ = Series<YKey>::from(typename Series<YKey>::NumericMap{});
        helmholtz_terms(series_.numeric(), k, dim_, out.series_);
    }
    return out;
}

Rational YFunc::max_rate_squared() const {
    Rational best(0);
    series_.for_each_value([&](const YKey& key, double) {
        Rational n(0);
        for (const auto& v : key.kappa) n += v * v;
        if (n > best) best = n;
    });
    return best;
}

YFunc& YFunc::operator+=(const YFunc& other) {
    if (other.dim_ != dim_) throw DimensionMismatch("adding y-functions of different dimension");
    series_ += other.series_;
    return *this;
}

std::string YFunc::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const YKey& key, const std::string& coeff) {
        if (!first) os << " + ";
        first = false;
        os << "(" << coeff << ")";
        for (int i = 0; i < dim_; ++i) {
            const int e = key.exps[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            os << "*y" << (i + 1);
            if (e > 1) os << "^" << e;
        }
        bool has_exp = false;
        for (const auto& v : key.kappa) has_exp = has_exp || sgn(v) != 0;
        if (has_exp) {
            os << "*exp(";
            bool f = true;
            for (int i = 0; i < dim_; ++i) {
                const Rational& v = key.kappa[static_cast<std::size_t>(i)];
                if (sgn(v) == 0) continue;
                if (!f) os << "+";
                f = false;
                os << v.get_str() << "*y" << (i + 1);
            }
            os << ")";
        }
    };
    if (series_.is_exact())
        for (const auto& [k, c] : series_.exact()) emit(k, c.to_string("pi"));
    else
        for (const auto& [k, c] : series_.numeric()) emit(k, std::to_string(c));
    return os.str();
}

}  // namespace strip
