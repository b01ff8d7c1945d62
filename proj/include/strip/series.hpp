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

#ifndef STRIP_SERIES_HPP
#define STRIP_SERIES_HPP

#include "strip/poly.hpp"

#include <map>
#include <stdexcept>
#include <type_traits>

namespace strip {

/// Exact scalar of the mode calculus: a polynomial in π with rational coefficients.
using PiPoly = Poly;

inline bool coeff_is_zero(const PiPoly& c) { return c.is_zero(); }
inline bool coeff_is_zero(double c) { return c == 0.0; }
inline double coeff_value(const PiPoly& c) { return pi_value(c); }
inline double coeff_value(double c) { return c; }
inline PiPoly coeff_scale(const PiPoly& c, const Rational& r) { return c * r; }
inline double coeff_scale(double c, const Rational& r) { return c * r.get_d(); }

/// Sparse linear combination keyed by basis element. Holds exact Q[π]
/// coefficients, or, once any inexact operation touched it, a floating overlay
/// that replaces them. Zero coefficients are never stored.
template <class Key>
class Series {
public:
    using ExactMap = std::map<Key, PiPoly>;
    using NumericMap = std::map<Key, double>;

    Series() = default;
    static Series from(ExactMap m) {
        Series s;
        for (auto& [k, c] : m) s.add(k, c);
        return s;
    }
    static Series from(NumericMap m) {
        Series s;
        s.overlay_ = true;
        for (auto& [k, c] : m) s.add(k, c);
        return s;
    }

    bool is_exact() const noexcept { return !overlay_; }
    bool empty() const noexcept { return overlay_ ? numeric_.empty() : exact_.empty(); }
    std::size_t size() const noexcept { return overlay_ ? numeric_.size() : exact_.size(); }

    const ExactMap& exact() const {
        if (overlay_) throw std::logic_error("series carries a numeric overlay");
        return exact_;
    }
    const NumericMap& numeric() const {
        if (!overlay_) throw std::logic_error("series is exact");
        return numeric_;
    }

    /// Typed access for code templated on the coefficient type.
    template <class C>
    const std::map<Key, C>& terms() const {
        if constexpr (std::is_same_v<C, PiPoly>) return exact();
        else return numeric();
    }

    void add(const Key& key, const PiPoly& c) {
        if (c.is_zero()) return;
        if (overlay_) {
            add(key, pi_value(c));
            return;
        }
        auto [it, inserted] = exact_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) exact_.erase(it);
        }
    }

    void add(const Key& key, double c) {
        if (!overlay_) {
            if (exact_.empty()) overlay_ = true;
            else throw std::logic_error("adding a floating coefficient to an exact series");
        }
        if (c == 0.0) return;
        auto [it, inserted] = numeric_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0.0) numeric_.erase(it);
        }
    }

    Series to_numeric() const {
        if (overlay_) return *this;
        Series s;
        s.overlay_ = true;
        for (const auto& [k, c] : exact_) s.add(k, pi_value(c));
        return s;
    }

    /// Visits every term with its floating coefficient.
    template <class F>
    void for_each_value(F&& f) const {
        if (overlay_)
            for (const auto& [k, c] : numeric_) f(k, c);
        else
            for (const auto& [k, c] : exact_) f(k, pi_value(c));
    }

    Series& operator+=(const Series& other) {
        if (overlay_ || other.overlay_) {
            if (!overlay_) *this = to_numeric();
            other.for_each_value([&](const Key& k, double c) { add(k, c); });
        } else {
            for (const auto& [k, c] : other.exact_) add(k, c);
        }
        return *this;
    }

    Series scaled(const Rational& r) const {
        Series s;
        s.overlay_ = overlay_;
        if (sgn(r) == 0) return s;
        for (const auto& [k, c] : exact_) s.exact_.emplace(k, c * r);
        for (const auto& [k, c] : numeric_) s.add(k, c * r.get_d());
        return s;
    }

    Series scaled(double v) const {
        Series s = to_numeric();
        Series out;
        out.overlay_ = true;
        for (const auto& [k, c] : s.numeric_) out.add(k, c * v);
        return out;
    }

    bool operator==(const Series& other) const {
        return overlay_ == other.overlay_ && exact_ == other.exact_ && numeric_ == other.numeric_;
    }

private:
    bool overlay_ = false;
    ExactMap exact_;
    NumericMap numeric_;
};

}  // namespace strip

#endif
