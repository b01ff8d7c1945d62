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

#include "strip/mode_sum.hpp"

#include "strip/errors.hpp"

#include <cmath>
#include <optional>
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

std::optional<Rational> rational_sqrt(const Rational& x) {
    if (sgn(x) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t())) return std::nullopt;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
    Rational r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace

Rational FrequencyVector::norm2() const {
    Rational n(0);
    for (const auto& c : components) n += c * c;
    return n;
}

YPoly laplacian(const YPoly& h) {
    YPoly out;
    for (const auto& [exps, c] : h) {
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] < 2) continue;
            auto e = exps;
            e[i] -= 2;
            out[e] += c * Rational(exps[i] * (exps[i] - 1));
        }
    }
    std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
    return out;
}

bool is_harmonic(const YPoly& h) { return laplacian(h).empty(); }

Mode Mode::trig_exp(PiPoly coefficient, int m, Trig trig, Rational k, std::vector<Rational> kappa) {
    Mode mode;
    mode.kind = ModeKind::TrigExp;
    mode.coefficient = std::move(coefficient);
    mode.m = m;
    mode.trig = trig;
    mode.k = std::move(k);
    mode.kappa.components = std::move(kappa);
    mode.validate(mode.kappa.dim());
    return mode;
}

Mode Mode::trig_exp(PiPoly coefficient, int m, Trig trig, std::vector<Rational> kappa) {
    FrequencyVector fv{kappa};
    auto k = rational_sqrt(fv.norm2());
    if (!k) throw InvariantViolation("|kappa| is not rational; pass k explicitly or use a Pythagorean direction");
    return trig_exp(std::move(coefficient), m, trig, *k, std::move(kappa));
}

Mode Mode::poly_harm(PiPoly coefficient, int m, YPoly h, int dim) {
    Mode mode;
    mode.kind = ModeKind::PolyHarm;
    mode.coefficient = std::move(coefficient);
    mode.m = m;
    std::erase_if(h, [](const auto& kv) { return sgn(kv.second) == 0; });
    mode.h = std::move(h);
    mode.validate(dim);
    return mode;
}

int Mode::order() const noexcept { return kind == ModeKind::TrigExp ? m + 1 : m / 2 + 1; }

int Mode::dim() const {
    if (kind == ModeKind::TrigExp) return kappa.dim();
    if (h.empty()) throw InvariantViolation("PolyHarm mode without polynomial has no dimension");
    return static_cast<int>(h.begin()->first.size());
}

void Mode::validate(int dim) const {
    if (dim < 1) throw InvariantViolation("dimension must be at least 1");
    if (m < 0) throw InvariantViolation("power of t must be non-negative");
    if (kind == ModeKind::TrigExp) {
        if (kappa.dim() != dim)
            throw InvariantViolation("kappa has " + std::to_string(kappa.dim()) + " components, expected " +
                                     std::to_string(dim));
        if (sgn(k) <= 0) throw InvariantViolation("frequency k must be positive");
        if (kappa.norm2() != k * k)
            throw InvariantViolation("|kappa|^2 = " + kappa.norm2().get_str() + " differs from k^2 = " +
                                     Rational(k * k).get_str());
    } else {
        for (const auto& [exps, c] : h) {
            if (static_cast<int>(exps.size()) != dim) throw InvariantViolation("monomial dimension mismatch");
            for (int e : exps)
                if (e < 0) throw InvariantViolation("negative exponent in harmonic polynomial");
        }
        if (!is_harmonic(h)) throw InvariantViolation("polynomial h is not harmonic (Laplacian is nonzero)");
    }
}

bool Mode::operator==(const Mode& o) const {
    return kind == o.kind && coefficient == o.coefficient && m == o.m &&
           (kind == ModeKind::PolyHarm ? h == o.h
                                       : (trig == o.trig && k == o.k && kappa.components == o.kappa.components));
}

bool operator<(const TermKey& a, const TermKey& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.m != b.m) return a.m < b.m;
    if (a.kind == ModeKind::TrigExp) {
        if (a.trig != b.trig) return a.trig < b.trig;
        return compare(a.kappa, b.kappa) < 0;
    }
    return a.yexp < b.yexp;
}

bool operator==(const TermKey& a, const TermKey& b) { return !(a < b) && !(b < a); }

ModeSum::ModeSum(int dim) : dim_(dim) {
    if (dim < 1) throw InvariantViolation("dimension must be at least 1");
}

ModeSum ModeSum::from_modes(int dim, std::span<const Mode> modes) {
    ModeSum u(dim);
    for (const auto& m : modes) u.add(m);
    return u;
}

void ModeSum::add(const Mode& mode) {
    mode.validate(dim_);
    if (mode.kind == ModeKind::TrigExp) {
        TermKey key{ModeKind::TrigExp, mode.m, mode.trig, mode.kappa.components, mode.k, {}};
        terms_.add(key, mode.coefficient);
        return;
    }
    for (const auto& [exps, c] : mode.h) {
        TermKey key{ModeKind::PolyHarm, mode.m, Trig::Sin, {}, Rational(0), exps};
        terms_.add(key, mode.coefficient * c);
    }
}

ModeSum ModeSum::to_numeric() const {
    ModeSum out(dim_);
    out.terms_ = terms_.to_numeric();
    return out;
}

ModeSum ModeSum::scaled(const Rational& r) const {
    ModeSum out(dim_);
    out.terms_ = terms_.scaled(r);
    return out;
}

ModeSum ModeSum::scaled(double v) const {
    ModeSum out(dim_);
    out.terms_ = terms_.scaled(v);
    return out;
}

ModeSum& ModeSum::operator+=(const ModeSum& other) {
    if (other.dim_ != dim_) throw DimensionMismatch("adding mode sums of different dimension");
    terms_ += other.terms_;
    return *this;
}

ModeSum& ModeSum::operator-=(const ModeSum& other) {
    if (other.dim_ != dim_) throw DimensionMismatch("subtracting mode sums of different dimension");
    terms_ += other.terms_.scaled(Rational(-1));
    return *this;
}

std::vector<Mode> ModeSum::to_modes() const {
    if (!is_exact()) throw InexactInput("a numeric overlay cannot be written as exact modes");
    std::vector<Mode> out;
    std::map<std::pair<int, int>, YPoly> harmonic;  // (m, power of π) -> h
    for (const auto& [key, c] : terms_.exact()) {
        if (key.kind == ModeKind::TrigExp) {
            out.push_back(Mode::trig_exp(c, key.m, key.trig, key.k, key.kappa));
            continue;
        }
        for (int p = 0; p <= c.degree(); ++p) {
            const Rational& a = c.coefficients()[static_cast<std::size_t>(p)];
            if (sgn(a) != 0) harmonic[{key.m, p}][key.yexp] += a;
        }
    }
    for (auto& [mp, h] : harmonic) out.push_back(Mode::poly_harm(PiPoly::monomial(Rational(1), mp.second), mp.first, h, dim_));
    return out;
}

std::string ModeSum::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const TermKey& key, const std::string& coeff) {
        if (!first) os << " + ";
        first = false;
        os << "(" << coeff << ")";
        if (key.m == 1) os << "*t";
        if (key.m > 1) os << "*t^" << key.m;
        if (key.kind == ModeKind::TrigExp) {
            os << (key.trig == Trig::Sin ? "*sin(" : "*cos(") << key.k.get_str() << "*t)*exp(";
            bool f = true;
            for (std::size_t i = 0; i < key.kappa.size(); ++i) {
                if (sgn(key.kappa[i]) == 0) continue;
                if (!f) os << "+";
                f = false;
                os << key.kappa[i].get_str() << "*y" << (i + 1);
            }
            os << ")";
        } else {
            for (std::size_t i = 0; i < key.yexp.size(); ++i) {
                if (key.yexp[i] == 0) continue;
                os << "*y" << (i + 1);
                if (key.yexp[i] > 1) os << "^" << key.yexp[i];
            }
        }
    };
    if (is_exact())
        for (const auto& [k, c] : terms_.exact()) emit(k, c.to_string("pi"));
    else
        for (const auto& [k, c] : terms_.numeric()) emit(k, std::to_string(c));
    return os.str();
}

Evaluator::Evaluator(const ModeSum& u) : dim_(u.dim()) {
    u.terms().for_each_value([&](const TermKey& key, double c) {
        Term term;
        term.trig_exp = key.kind == ModeKind::TrigExp;
        term.m = key.m;
        term.sine = key.trig == Trig::Sin;
        term.k = key.k.get_d();
        term.coef = c;
        for (const auto& v : key.kappa) term.kappa.push_back(v.get_d());
        term.yexp = key.yexp;
        terms_.push_back(std::move(term));
    });
}

double Evaluator::term_value(const Term& term, double t, std::span<const double> y) const {
    double v = term.coef * (term.m == 0 ? 1.0 : std::pow(t, term.m));
    if (term.trig_exp) {
        double dot = 0.0;
        for (std::size_t i = 0; i < term.kappa.size(); ++i) dot += term.kappa[i] * y[i];
        v *= (term.sine ? std::sin(term.k * t) : std::cos(term.k * t)) * std::exp(dot);
    } else {
        for (std::size_t i = 0; i < term.yexp.size(); ++i)
            if (term.yexp[i] != 0) v *= std::pow(y[i], term.yexp[i]);
    }
    return v;
}

double Evaluator::operator()(double t, std::span<const double> y) const {
    if (static_cast<int>(y.size()) != dim_)
        throw DimensionMismatch("expected y of dimension " + std::to_string(dim_) + ", got " + std::to_string(y.size()));
    double acc = 0.0;
    for (const auto& term : terms_) acc += term_value(term, t, y);
    return acc;
}

double Evaluator::magnitude(double t, std::span<const double> y) const {
    if (static_cast<int>(y.size()) != dim_) throw DimensionMismatch("y has wrong dimension");
    double acc = 0.0;
    for (const auto& term : terms_) acc += std::abs(term_value(term, t, y));
    return acc;
}

}  // namespace strip
