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

// Acceptance criteria AC1..AC9. One PASS/FAIL line per criterion; exit status 1 if any fails.
// Run with --verbose to print the per-item log that AC9 compares between runs.

#include "strip/chain.hpp"
#include "strip/cli.hpp"
#include "strip/deflation_polys.hpp"
#include "strip/fourier.hpp"
#include "strip/mode_ops.hpp"
#include "strip/modespec.hpp"
#include "strip/nullspace.hpp"
#include "strip/periodic.hpp"
#include "strip/report.hpp"
#include "strip/verdict.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace strip;

constexpr double kPi = std::numbers::pi;

// Pinned tolerances.
constexpr double kBaseIdentityTol = 1e-9;    // AC2, relative
constexpr double kChainTol = 1e-9;           // AC3, relative
constexpr double kQuadratureTol = 1e-10;     // AC4, relative to max(1, |a_k|)
constexpr double kSymmetryTol = 1e-9;        // AC7, relative
constexpr double kPeriodicityTol = 1e-12;    // AC8, relative

struct Outcome {
    bool passed = true;
    std::string summary;
};

struct Criterion {
    std::string id;
    std::string title;
    std::function<Outcome(std::ostream&)> run;
};

std::string fmt(double v) { return format_double(v); }

PiPoly q(long p, long d = 1) { return PiPoly::constant(ratio(p, d)); }

Mode sin_exp_mode(const PiPoly& c, int m, const Rational& k, std::vector<Rational> kappa) {
    return Mode::trig_exp(c, m, Trig::Sin, k, std::move(kappa));
}

ModeSum single(int dim, const Mode& m) {
    ModeSum u(dim);
    u.add(m);
    return u;
}

/// t^m sin(k t) e^{k y}, d = 1.
ModeSum tm_sin_exp(int m, long k = 1, const PiPoly& c = q(1)) {
    return single(1, sin_exp_mode(c, m, Rational(k), {Rational(k)}));
}

long uniform(std::mt19937_64& g, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }

/// Σ c_i sin(n_i t) e^{⟨κ_i, y⟩} with integer n_i ≤ 6 and |κ_i| = n_i: odd at every iπ.
ModeSum random_integer_sine_sum(std::mt19937_64& g, int dim) {
    ModeSum u(dim);
    const int terms = static_cast<int>(uniform(g, 1, 4));
    for (int i = 0; i < terms; ++i) {
        const long n = uniform(g, 1, 6);
        const long sign = uniform(g, 0, 1) ? 1 : -1;
        std::vector<Rational> kappa;
        if (dim == 1) {
            kappa = {Rational(sign * n)};
        } else {
            switch (uniform(g, 0, 2)) {
                case 0: kappa = {Rational(sign * n), Rational(0)}; break;
                case 1: kappa = {ratio(3 * n, 5), ratio(sign * 4 * n, 5)}; break;
                default: kappa = {ratio(sign * 4 * n, 5), ratio(-3 * n, 5)}; break;
            }
        }
        long p = uniform(g, -9, 9);
        if (p == 0) p = 1;
        u.add(sin_exp_mode(q(p, uniform(g, 1, 5)), 0, Rational(n), kappa));
    }
    return u;
}

template <class F>
double grid_max(const GridSpec& grid, F&& f) {
    double worst = 0.0;
    for (double t : grid.t_points())
        for (const auto& y : grid.y_points()) worst = std::max(worst, f(t, y));
    return worst;
}

// AC1: p̃_{j,l} = τ·p_{j,l} in exact arithmetic, through the CLI and the library.
Outcome ac1(std::ostream& log) {
    Outcome o;
    std::ostringstream out, err;
    std::optional<RunReport> rep;
    const int code = run_command({"identity", "--jmax", "8"}, out, err, &rep);
    std::size_t pass = 0, total = 0;
    if (rep)
        for (const auto& c : rep->checks)
            if (c.status != Status::Info) {
                ++total;
                if (c.status == Status::Pass && c.exact && c.residual == 0.0) ++pass;
            }
    log << "AC1 cli exit=" << code << " exact-pass=" << pass << "/" << total << "\n";
    std::size_t zero = 0, entries = 0;
    for (const auto& r : verify_deflation_identity(8))
        for (const auto& e : r.entries) {
            ++entries;
            if (e.passed && e.difference.is_zero()) ++zero;
            log << "AC1 j=" << r.j << " l=" << e.l << " diff_zero=" << e.difference.is_zero() << "\n";
        }
    o.passed = code == 0 && total == 44 && pass == total && entries == 44 && zero == entries;
    o.summary = std::to_string(zero) + "/" + std::to_string(entries) + " identities with zero difference";
    return o;
}

// AC2: j = 1 closed form, t(π²−t²)H_{N−2} = (π−t)w_N(π+t) + (π+t)w_N(π−t), with w_N and H_{N−2}
// computed independently (direct evaluation of u, and the deflation chain).
Outcome ac2(std::ostream& log) {
    Outcome o;
    double worst = 0.0;
    for (int N : {2, 3, 4}) {
        const ModeSum u = tm_sin_exp(N - 1);
        const Evaluator eu(u);
        const HChain chain = h_chain_direct(u, N);
        const HFunction& h = chain.level(N - 2);
        const ClosedForm cf(u, N);
        const GridSpec grid = chain_grid(1, N);
        auto w = [&](double s, const std::vector<double>& y) { return eu(s, y) + eu(-s, y); };
        double scale = 0.0, diff = 0.0, cf_diff = 0.0, h_scale = 0.0;
        grid_max(grid, [&](double t, const std::vector<double>& y) {
            const double lhs = t * (kPi * kPi - t * t) * h(t, y);
            const double r1 = (kPi - t) * w(kPi + t, y), r2 = (kPi + t) * w(kPi - t, y);
            scale = std::max({scale, std::abs(lhs), std::abs(r1) + std::abs(r2)});
            diff = std::max(diff, std::abs(lhs - (r1 + r2)));
            h_scale = std::max({h_scale, std::abs(h(t, y)), cf.term_scale(1, t, y)});
            cf_diff = std::max(cf_diff, std::abs(cf.value(1, t, y) - h(t, y)));
            return 0.0;
        });
        const double rel = scale > 0.0 ? diff / scale : diff;
        const double rel_cf = h_scale > 0.0 ? cf_diff / h_scale : cf_diff;
        log << "AC2 N=" << N << " identity_rel=" << fmt(rel) << " closed_form_rel=" << fmt(rel_cf) << "\n";
        worst = std::max({worst, rel, rel_cf});
    }
    o.passed = worst < kBaseIdentityTol;
    o.summary = "max relative residual " + fmt(worst) + " (tol 1e-9), N = 2,3,4";
    return o;
}

// AC3: direct chain vs closed form on every level, plus H_2 = −8π sin t e^y and H_1 = 0 for t³ sin t e^y.
Outcome ac3(std::ostream& log) {
    Outcome o;
    struct Case {
        int N;
        ModeSum u;
    };
    const std::vector<Case> cases = {
        {3, tm_sin_exp(2) + tm_sin_exp(1, 2)},
        {3, tm_sin_exp(2, 1, q(-3, 2)) + tm_sin_exp(1, 3, q(5))},
        {4, tm_sin_exp(3)},
        {4, tm_sin_exp(3) + tm_sin_exp(1, 2, q(2, 3))},
    };
    double worst = 0.0;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& [N, u] = cases[i];
        const HChain chain = h_chain_direct(u, N);
        const ClosedForm cf(u, N);
        for (const auto& c : compare_chain(chain, cf, chain_grid(1, N))) {
            log << "AC3 case=" << i << " N=" << N << " H_" << c.index << " rel=" << fmt(c.residual) << "\n";
            worst = std::max(worst, c.residual);
        }
    }
    o.passed = worst < kChainTol;

    // Hand-derived levels of u = t³ sin t e^y, N = 4.
    const ModeSum u = tm_sin_exp(3);
    const HChain chain = h_chain_direct(u, 4);
    const ModeSum h2 = single(1, sin_exp_mode(PiPoly::monomial(ratio(-8, 1), 1), 0, Rational(1), {Rational(1)}));
    const bool h2_exact = chain.level(2).mode_sum() && *chain.level(2).mode_sum() == h2;
    const bool h1_exact = chain.level(1).mode_sum() && chain.level(1).mode_sum()->is_zero();
    const ClosedForm cf(u, 4);
    double h2_rel = 0.0, h1_rel = 0.0;
    grid_max(chain_grid(1, 4), [&](double t, const std::vector<double>& y) {
        const double ref = -8.0 * kPi * std::sin(t) * std::exp(y[0]);
        h2_rel = std::max(h2_rel, std::abs(cf.value(1, t, y) - ref) / std::max(std::abs(ref), cf.term_scale(1, t, y)));
        h1_rel = std::max(h1_rel, std::abs(cf.value(2, t, y)) / cf.term_scale(2, t, y));
        return 0.0;
    });
    log << "AC3 derived H_2 exact=" << h2_exact << " closed_rel=" << fmt(h2_rel) << " H_1 exact_zero=" << h1_exact
        << " closed_rel=" << fmt(h1_rel) << "\n";
    o.passed = o.passed && h2_exact && h1_exact && h2_rel < kChainTol && h1_rel < kChainTol;
    o.summary = "max chain residual " + fmt(std::max({worst, h2_rel, h1_rel})) +
                " (tol 1e-9); H_2 = -8pi sin t e^y and H_1 = 0 exact";
    return o;
}

// AC4: a_k(y) = (−1)^{k+1}(2/k)·y for h = t·y, exactly; quadrature agrees.
Outcome ac4(std::ostream& log) {
    Outcome o;
    ModeSum h(1);
    YPoly hy;
    hy[{1}] = Rational(1);
    h.add(Mode::poly_harm(q(1), 1, hy, 1));
    int exact_ok = 0;
    double worst = 0.0;
    for (long k = 1; k <= 10; ++k) {
        YFunc diff = fourier_sine_coefficient(h, k);
        YFunc expected(1);
        expected.add_monomial({1}, q(k % 2 ? -2 : 2, k));  // minus the expected coefficient
        diff += expected;
        const bool exact = diff.is_zero();
        exact_ok += exact;
        for (double y : {-2.0, -1.0, -0.25, 0.5, 1.0, 3.0}) {
            const double yy[1] = {y};
            const double cf = fourier_coeff(h, k, yy, FourierMethod::ClosedForm);
            const double qd = fourier_coeff(h, k, yy, FourierMethod::Quadrature);
            worst = std::max(worst, std::abs(cf - qd) / std::max(1.0, std::abs(cf)));
        }
        log << "AC4 k=" << k << " exact=" << exact << "\n";
    }
    log << "AC4 quadrature_rel=" << fmt(worst) << "\n";
    o.passed = exact_ok == 10 && worst <= kQuadratureTol;
    o.summary = std::to_string(exact_ok) + "/10 exact, quadrature residual " + fmt(worst) + " (tol 1e-10)";
    return o;
}

// AC5: Helmholtz annihilation for integer-frequency sums odd at 0 and ±π; t·y fails.
Outcome ac5(std::ostream& log) {
    Outcome o;
    std::mt19937_64 g(5);
    int inputs_ok = 0, odd_ok = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const int dim = trial % 2 ? 2 : 1;
        const ModeSum u = random_integer_sine_sum(g, dim);
        const GridSpec grid = default_grid(dim, 0.0, kPi);
        bool odd = true;
        for (const RealParam& t0 : {RealParam(), RealParam::pi_multiple(Rational(1)), RealParam::pi_multiple(Rational(-1))})
            odd = odd && is_odd_at(u, t0, grid).odd();
        odd_ok += odd;
        const int N = polyharmonic_order(u);
        bool all = true;
        for (long k = 1; k <= 5; ++k) all = all && helmholtz_annihilation_check(u, k, N).passed;
        inputs_ok += all;
        log << "AC5 trial=" << trial << " dim=" << dim << " terms=" << u.size() << " odd=" << odd << " pass=" << all
            << "\n";
    }
    ModeSum ty(1);
    YPoly hy;
    hy[{1}] = Rational(1);
    ty.add(Mode::poly_harm(q(1), 1, hy, 1));
    int ty_fail = 0;
    for (long k = 1; k <= 5; ++k) ty_fail += !helmholtz_annihilation_check(ty, k, 1).passed;
    log << "AC5 t*y failures=" << ty_fail << "/5\n";
    o.passed = inputs_ok == 20 && odd_ok == 20 && ty_fail == 5;
    o.summary = std::to_string(inputs_ok) + "/20 random sums annihilated for k <= 5; t*y fails for " +
                std::to_string(ty_fail) + "/5";
    return o;
}

/// t^m sin(kt) e^{σky}, t^m cos(kt) e^{σky} for m < N.
std::vector<Mode> polyharmonic_template(int N, const Rational& k, int sigma) {
    std::vector<Mode> templ;
    for (int m = 0; m < N; ++m)
        for (Trig tr : {Trig::Sin, Trig::Cos}) templ.push_back(Mode::trig_exp(q(1), m, tr, k, {k * Rational(sigma)}));
    return templ;
}

// AC6: subcritical templates on 2N equidistant hyperplanes have only the zero solution;
// adding one critical frequency opens the null space.
Outcome ac6(std::ostream& log) {
    Outcome o;
    std::mt19937_64 g(6);
    const std::vector<std::pair<long, long>> spacings = {{1, 1}, {1, 2}, {2, 1}, {3, 2}};
    int zero_ok = 0, crit_ok = 0, total = 0;
    for (int N = 1; N <= 3; ++N)
        for (int trial = 0; trial < 20; ++trial) {
            ++total;
            const auto [cn, cd] = spacings[static_cast<std::size_t>(uniform(g, 0, 3))];
            const RealParam c = RealParam::pi_multiple(ratio(cn, cd));
            const RealParam t0 = RealParam::pi_multiple(ratio(uniform(g, -4, 4), 4));
            // k = p/qd with k·c < π, i.e. p·cn < qd·cd.
            long qd = 0, p = 0;
            do {
                qd = uniform(g, 2, 9);
            } while (qd * cd <= cn);
            p = uniform(g, 1, (qd * cd - 1) / cn);
            const Rational k = ratio(p, qd);
            const int sigma = uniform(g, 0, 1) ? 1 : -1;
            std::vector<Mode> templ = polyharmonic_template(N, k, sigma);
            const auto pts = equidistant(t0, c, 2 * N);
            const auto sub = vanishing_nullspace(1, templ, pts);
            // Critical frequency k* = π/c.
            const Rational kc = ratio(cd, cn);
            templ.push_back(Mode::trig_exp(q(1), 0, Trig::Sin, kc, {kc}));
            templ.push_back(Mode::trig_exp(q(1), 0, Trig::Cos, kc, {kc}));
            const auto crit = vanishing_nullspace(1, templ, pts);
            zero_ok += sub.dimension() == 0;
            crit_ok += crit.dimension() >= 1;
            log << "AC6 N=" << N << " trial=" << trial << " c=" << cn << "/" << cd << "pi k=" << p << "/" << qd
                << " exact=" << sub.exact << " dim=" << sub.dimension() << " critical_dim=" << crit.dimension()
                << "\n";
        }
    o.passed = zero_ok == total && crit_ok == total;
    o.summary = std::to_string(zero_ok) + "/" + std::to_string(total) + " subcritical null spaces trivial, " +
                std::to_string(crit_ok) + "/" + std::to_string(total) + " critical injections nontrivial";
    return o;
}

// AC7: inputs built from the null space of the antisymmetry constraints are confirmed odd;
// sin t e^y with c = π is reported as a growth violation.
Outcome ac7(std::ostream& log) {
    Outcome o;
    std::mt19937_64 g(7);
    int confirmed = 0, total = 0;
    double worst = 0.0;
    const std::vector<Rational> ks = {ratio(1, 2), ratio(1, 3), ratio(2, 3), ratio(3, 4), ratio(1, 4)};
    for (int N : {1, 2, 3})
        for (std::size_t ki = 0; ki < ks.size(); ++ki)
            for (const Rational& t1c : {Rational(0), ratio(1, 2)}) {
                const RealParam t1 = RealParam::pi_multiple(t1c);
                const auto templ = polyharmonic_template(N, ks[ki], ki % 2 ? -1 : 1);
                std::vector<OddnessPair> pairs;
                for (int j = 0; j < N; ++j)
                    pairs.push_back({RealParam::pi_multiple(t1c + Rational(j)), RealParam::pi_multiple(t1c - Rational(j))});
                const auto ns = vanishing_nullspace(1, templ, {}, pairs);
                // Every basis vector, then a seeded combination of all of them.
                std::vector<std::vector<double>> coeffs = ns.basis;
                std::vector<double> mix(templ.size(), 0.0);
                for (const auto& b : ns.basis) {
                    const double a = static_cast<double>(uniform(g, -5, 5)) / 4.0;
                    for (std::size_t i = 0; i < mix.size(); ++i) mix[i] += a * b[i];
                }
                coeffs.push_back(mix);
                for (std::size_t bi = 0; bi < coeffs.size(); ++bi) {
                    const bool use_exact = ns.exact && bi < ns.exact_basis.size();
                    const ModeSum u = use_exact ? assemble(1, templ, ns.exact_basis[bi]) : assemble(1, templ, coeffs[bi]);
                    if (u.is_zero()) continue;
                    ++total;
                    const Verdict v = symmetry_verdict(u, t1, RealParam::pi_multiple(Rational(1)), N);
                    const bool ok = v.conclusion == Conclusion::Confirmed && v.max_residual() < kSymmetryTol;
                    confirmed += ok;
                    worst = std::max(worst, v.max_residual());
                    log << "AC7 N=" << N << " k=" << to_string(ks[ki]) << " t1=" << to_string(t1c) << "pi member=" << bi
                        << " exact=" << use_exact << " verdict=" << to_string(v.conclusion)
                        << " residual=" << fmt(v.max_residual()) << "\n";
                }
            }
    int growth_ok = 0;
    for (int N : {1, 2}) {
        const Verdict v = symmetry_verdict(tm_sin_exp(0), RealParam(), RealParam::pi_multiple(Rational(1)), N);
        growth_ok += v.conclusion == Conclusion::GrowthViolated;
        log << "AC7 sin t e^y N=" << N << " verdict=" << to_string(v.conclusion) << "\n";
    }
    o.passed = total > 0 && confirmed == total && growth_ok == 2;
    o.summary = std::to_string(confirmed) + "/" + std::to_string(total) + " constructed inputs confirmed (max residual " +
                fmt(worst) + ", tol 1e-9); sin t e^y growth-violated for N = 1,2";
    return o;
}

// AC8: periodic continuation of integer-sine sums is periodic and agrees with the core; a
// corrupted tile is flagged at its seams.
Outcome ac8(std::ostream& log) {
    Outcome o;
    std::mt19937_64 g(8);
    int ok = 0, detected = 0;
    const int trials = 10;
    double worst = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        const int dim = trial % 2 ? 2 : 1;
        const ModeSum u = random_integer_sine_sum(g, dim);
        const ExtendedFunction e =
            build_extension(u, RealParam(), RealParam::pi_multiple(Rational(1)), Domain{});
        const ExtensionReport r = verify_extension(e);
        const bool good = r.periodicity < kPeriodicityTol && r.core_agreement == 0.0 && !r.seam_defect();
        ok += good;
        worst = std::max(worst, r.periodicity);
        const long tile = trial % 2 ? 1 : -2;
        const ExtensionReport bad = verify_extension(e.with_tile_override(tile, u.scaled(ratio(11, 10))));
        const bool flagged = bad.seam_defect() && bad.max_seam_jump() > 0.0;
        detected += flagged;
        log << "AC8 trial=" << trial << " periodicity=" << fmt(r.periodicity) << " core=" << fmt(r.core_agreement)
            << " defect=" << r.seam_defect() << " corrupted_tile=" << tile << " jump=" << fmt(bad.max_seam_jump())
            << " flagged=" << flagged << "\n";
    }
    o.passed = ok == trials && detected == trials;
    o.summary = std::to_string(ok) + "/" + std::to_string(trials) + " extensions periodic (max " + fmt(worst) +
                ", tol 1e-12) with exact core agreement; " + std::to_string(detected) + "/" + std::to_string(trials) +
                " corrupted tiles flagged";
    return o;
}

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {"AC1", "exact identity suite", ac1},
        {"AC2", "base identity", ac2},
        {"AC3", "chain equivalence", ac3},
        {"AC4", "Fourier coefficients of t*y", ac4},
        {"AC5", "Helmholtz annihilation", ac5},
        {"AC6", "uniqueness null spaces", ac6},
        {"AC7", "symmetry verdicts", ac7},
        {"AC8", "periodic extension", ac8},
    };
    return list;
}

/// Per-item log of AC1..AC8 plus the JSON reports of a fixed set of CLI runs.
std::string full_run(const std::filesystem::path& spec_dir) {
    std::ostringstream log;
    for (const auto& c : criteria()) {
        const Outcome out = c.run(log);
        log << c.id << (out.passed ? " PASS " : " FAIL ") << out.summary << "\n";
    }
    const std::string sin_exp = (spec_dir / "sin_exp.json").string();
    const std::string t3 = (spec_dir / "t3_sin_exp.json").string();
    const std::vector<std::vector<std::string>> commands = {
        {"identity", "--jmax", "8"},
        {"counterexample"},
        {"order", t3},
        {"symmetry", sin_exp, "--c", "pi", "--order", "2"},
        {"uniqueness", sin_exp, "--c", "pi", "--order", "1"},
        {"chain", t3, "--order", "4"},
        {"fourier", sin_exp, "--k", "1", "--y", "0.5"},
        {"nullspace", sin_exp, "--points", "0,pi"},
        {"extend", sin_exp, "--t1", "0", "--t2", "pi"},
    };
    for (const auto& args : commands) {
        std::ostringstream out, err;
        std::optional<RunReport> rep;
        run_command(args, out, err, &rep);
        log << (rep ? rep->to_json(false) : std::string("no report\n"));
    }
    return log.str();
}

void write_spec(const std::filesystem::path& path, const ModeSum& u, const std::string& name) {
    std::ofstream(path) << serialize_modespec(to_modespec(u, name));
}

}  // namespace

int main(int argc, char** argv) {
    const bool verbose = argc > 1 && std::string(argv[1]) == "--verbose";
    const auto start = std::chrono::steady_clock::now();
    bool all = true;

    std::ostringstream log;
    for (const auto& c : criteria()) {
        Outcome out;
        try {
            out = c.run(log);
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        all = all && out.passed;
        std::cout << c.id << " " << (out.passed ? "PASS" : "FAIL") << "  " << c.title << ": " << out.summary << "\n";
    }

    // AC9: two complete runs, compared byte for byte.
    Outcome det;
    try {
        const auto dir = std::filesystem::temp_directory_path() / "stripcheck_acceptance";
        std::filesystem::create_directories(dir);
        write_spec(dir / "sin_exp.json", tm_sin_exp(0), "sin_exp");
        write_spec(dir / "t3_sin_exp.json", tm_sin_exp(3), "t3_sin_exp");
        const std::string first = full_run(dir), second = full_run(dir);
        det.passed = first == second;
        det.summary = std::to_string(first.size()) + " bytes per run, " +
                      (det.passed ? "identical" : "different");
        log << "AC9 digest run1=" << sha256_hex(first) << " run2=" << sha256_hex(second) << "\n";
    } catch (const std::exception& e) {
        det = {false, std::string("exception: ") + e.what()};
    }
    all = all && det.passed;
    std::cout << "AC9 " << (det.passed ? "PASS" : "FAIL") << "  determinism: " << det.summary << "\n";

    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (verbose) std::cout << log.str();
    std::cout << "elapsed " << std::fixed << secs << " s\n";
    return all ? 0 : 1;
}
