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

#include "strip/cli.hpp"

#include "strip/chain.hpp"
#include "strip/deflation_polys.hpp"
#include "strip/errors.hpp"
#include "strip/fourier.hpp"
#include "strip/modespec.hpp"
#include "strip/nullspace.hpp"
#include "strip/periodic.hpp"
#include "strip/verdict.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>

namespace strip {

namespace {

constexpr double kChainTol = 1e-9;
constexpr double kFourierTol = 1e-10;
constexpr double kPeriodTol = 1e-12;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::vector<double> parse_doubles(const std::string& s) {
    std::vector<double> out;
    for (const auto& item : split(s, ',')) {
        std::size_t used = 0;
        const double v = std::stod(item, &used);
        if (used != item.size()) throw std::invalid_argument("not a number: " + item);
        out.push_back(v);
    }
    return out;
}

std::vector<RealParam> parse_params(const std::string& s) {
    std::vector<RealParam> out;
    for (const auto& item : split(s, ',')) out.push_back(parse_real_param(item));
    return out;
}

std::string join_params(const std::vector<RealParam>& ps) {
    std::string out;
    for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? "," : "") + ps[i].to_string();
    return out;
}

std::string point_text(std::span<const double> y) {
    std::string out = "(";
    for (std::size_t i = 0; i < y.size(); ++i) out += (i ? ", " : "") + format_double(y[i]);
    return out + ")";
}

std::string utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::vector<std::string> y_header(int dim) {
    std::vector<std::string> h;
    for (int i = 1; i <= dim; ++i) h.push_back("y" + std::to_string(i));
    return h;
}

Status status_of(bool ok) { return ok ? Status::Pass : Status::Fail; }

void add_verdict(RunReport& r, const Verdict& v) {
    const std::string tag = theorem_tag(v.theorem);
    r.verdict = to_string(v.conclusion);
    bool pre_ok = true;
    for (const auto& c : v.preconditions) {
        r.add({c.name, status_of(c.passed), c.residual, tag, c.exact, c.detail});
        pre_ok = pre_ok && c.passed;
    }
    const std::string g = v.growth.subcritical ? "subcritical" : (v.growth.critical ? "critical" : "supercritical");
    r.add({"growth rate below pi/c", status_of(v.growth.subcritical), 0.0, tag, true,
           "rate " + v.growth.rate.get_str() + " (normalized spacing pi), " + g});
    const bool applicable = pre_ok && v.growth.subcritical;
    for (const auto& c : v.conclusion_checks) {
        CheckRecord rec{c.name, applicable ? status_of(c.passed) : Status::Info, c.residual, tag, c.exact, c.detail};
        if (!applicable) rec.detail = rec.detail.empty() ? "hypotheses not met" : rec.detail + "; hypotheses not met";
        r.add(std::move(rec));
    }
    r.notes.insert(r.notes.end(), v.notes.begin(), v.notes.end());
    switch (v.conclusion) {
        case Conclusion::Confirmed: r.exit_code = 0; break;
        case Conclusion::PreconditionViolated: r.exit_code = 2; break;
        default: r.exit_code = 1;
    }
}

struct Loaded {
    ModeSpec spec;
    ModeSum u;
};

Loaded load(RunReport& r, const std::string& path) {
    Loaded l{load_modespec(path), ModeSum()};
    l.u = l.spec.to_mode_sum();
    r.inputs.emplace_back("modespec", serialize_modespec(l.spec));
    return l;
}

// ---- subcommands ----

void cmd_identity(RunReport& r, int jmax) {
    r.inputs.emplace_back("jmax", std::to_string(jmax));
    if (jmax < 1) throw IndexOutOfRange("--jmax must be at least 1");
    int count = 0;
    for (const auto& rep : verify_deflation_identity(jmax)) {
        for (const auto& e : rep.entries) {
            ++count;
            std::string detail = std::string("symmetric ") + (e.symmetric ? "yes" : "no") + ", divisible by tau " +
                                 (e.divisible_by_tau ? "yes" : "no") + ", literal product " +
                                 (e.literal_product_matches ? "matches" : "differs");
            if (!e.passed) detail += ", difference " + e.difference.to_string("tau");
            r.add({"p~[" + std::to_string(rep.j) + "," + std::to_string(e.l) + "] = tau*p[" + std::to_string(rep.j) +
                       "," + std::to_string(e.l) + "]",
                   status_of(e.passed), e.passed ? 0.0 : 1.0, "deflation-identity", true, detail});
        }
        r.notes.push_back("j = " + std::to_string(rep.j) + ": " + rep.factor_note);
    }
    r.notes.push_back(std::to_string(count) + " exact identities checked");
}

void cmd_order(RunReport& r, const std::string& file, int expect) {
    const Loaded l = load(r, file);
    const int ord = polyharmonic_order(l.u);
    r.add({"polyharmonic order", Status::Info, 0.0, "polyharmonic-order", true, std::to_string(ord)});
    if (expect >= 0) {
        r.inputs.emplace_back("expect", std::to_string(expect));
        r.add({"order equals " + std::to_string(expect), status_of(ord == expect), 0.0, "polyharmonic-order", true, ""});
    }
    r.notes.push_back("u = " + l.u.to_string());
}

void cmd_fourier(RunReport& r, const std::string& file, long k, const std::vector<std::string>& ys, int order) {
    const Loaded l = load(r, file);
    const int d = l.u.dim();
    r.inputs.emplace_back("k", std::to_string(k));
    std::vector<std::vector<double>> points;
    for (const auto& s : ys) {
        auto p = parse_doubles(s);
        if (static_cast<int>(p.size()) != d) throw DimensionMismatch("--y point needs " + std::to_string(d) + " coordinates");
        points.push_back(std::move(p));
    }
    if (points.empty()) points.push_back(std::vector<double>(static_cast<std::size_t>(d), 0.5));
    std::string ytext;
    for (const auto& p : points) ytext += point_text(p);
    r.inputs.emplace_back("y", ytext);

    std::optional<YFunc> ak;
    try {
        ak = fourier_sine_coefficient(l.u, k);
        r.notes.push_back("a_" + std::to_string(k) + "(y) = " + ak->to_string());
    } catch (const ClosedFormUnavailable& e) {
        r.notes.push_back(std::string("closed form unavailable: ") + e.what());
    }
    r.table.header = y_header(d);
    r.table.header.insert(r.table.header.end(), {"closed_form", "quadrature"});
    for (const auto& y : points) {
        const double quad = fourier_coeff(l.u, k, y, FourierMethod::Quadrature);
        const double cf = ak ? ak->evaluate(y) : std::nan("");
        if (ak) {
            const double res = std::abs(cf - quad) / std::max(1.0, std::abs(cf));
            r.add({"closed form vs quadrature at y = " + point_text(y), status_of(res <= kFourierTol), res,
                   "fourier-coefficient", false, "a_k = " + format_double(cf)});
        } else {
            r.add({"quadrature at y = " + point_text(y), Status::Info, 0.0, "fourier-coefficient", false,
                   "a_k = " + format_double(quad)});
        }
        auto row = y;
        row.push_back(cf);
        row.push_back(quad);
        r.table.rows.push_back(std::move(row));
    }
    if (order > 0) {
        r.inputs.emplace_back("order", std::to_string(order));
        const HelmholtzReport h = helmholtz_annihilation_check(l.u, k, order);
        r.add({"(Delta_y - k^2)^N a_k = 0", status_of(h.passed), h.passed ? 0.0 : 1.0, "fourier-helmholtz", true,
               h.passed ? "" : "survivors " + h.survivors.to_string()});
        if (h.passed) {
            const KernelVerdict kv = vekua_rellich_decide(h.coefficient, Rational(k), order);
            r.notes.push_back(kv.decision == KernelDecision::IdenticallyZero
                                  ? "a_k is identically zero"
                                  : "a_k lies in the kernel but grows like exp(k|y|); excluded by the growth bound");
        }
    }
}

void cmd_symmetry(RunReport& r, const std::string& file, const std::string& t1s, const std::string& cs, int N) {
    const Loaded l = load(r, file);
    const RealParam t1 = parse_real_param(t1s), c = parse_real_param(cs);
    r.inputs.emplace_back("t1", t1.to_string());
    r.inputs.emplace_back("c", c.to_string());
    r.inputs.emplace_back("order", std::to_string(N));
    add_verdict(r, symmetry_verdict(l.u, t1, c, N));

    const ModeSum v = normalize(l.u, t1, c);
    const Evaluator ev(v);
    const GridSpec g = default_grid(v.dim(), 0.0, N * std::numbers::pi, 4 * N + 1);
    r.table.header = {"tau"};
    for (const auto& h : y_header(v.dim())) r.table.header.push_back(h);
    r.table.header.push_back("v(tau)+v(-tau)");
    for (double t : g.t_points())
        for (const auto& y : g.y_points()) {
            std::vector<double> row{t};
            row.insert(row.end(), y.begin(), y.end());
            row.push_back(ev(t, y) + ev(-t, y));
            r.table.rows.push_back(std::move(row));
        }
}

void cmd_uniqueness(RunReport& r, const std::string& file, const std::string& t0s, const std::string& cs, int N) {
    const Loaded l = load(r, file);
    const RealParam t0 = parse_real_param(t0s), c = parse_real_param(cs);
    r.inputs.emplace_back("t0", t0.to_string());
    r.inputs.emplace_back("c", c.to_string());
    r.inputs.emplace_back("order", std::to_string(N));
    add_verdict(r, uniqueness_verdict(l.u, t0, c, N));

    const ModeSum v = normalize(l.u, t0, c);
    const Evaluator ev(v);
    const GridSpec g = default_grid(v.dim(), 0.0, (2 * N - 1) * std::numbers::pi, 4 * (2 * N - 1) + 1);
    r.table.header = {"tau"};
    for (const auto& h : y_header(v.dim())) r.table.header.push_back(h);
    r.table.header.push_back("v");
    for (double t : g.t_points())
        for (const auto& y : g.y_points()) {
            std::vector<double> row{t};
            row.insert(row.end(), y.begin(), y.end());
            row.push_back(ev(t, y));
            r.table.rows.push_back(std::move(row));
        }
}

void cmd_chain(RunReport& r, const std::string& file, int N, const std::string& grid_text) {
    const Loaded l = load(r, file);
    const auto gv = parse_doubles(grid_text);
    if (gv.size() != 3 || gv[2] < 2) throw std::invalid_argument("--grid expects lo,hi,n with n >= 2");
    r.inputs.emplace_back("order", std::to_string(N));
    r.inputs.emplace_back("grid", format_double(gv[0]) + "," + format_double(gv[1]) + "," + format_double(gv[2]));
    const HChain chain = h_chain_direct(l.u, N);
    const ClosedForm cf(l.u, N);
    const GridSpec grid = chain_grid(l.u.dim(), N, gv[0], gv[1], static_cast<int>(gv[2]));

    for (const auto& c : compare_chain(chain, cf, grid))
        r.add({"H_" + std::to_string(c.index) + " direct vs closed form", status_of(c.residual < kChainTol), c.residual,
               "deflation-chain", false, "absolute " + format_double(c.abs_residual)});
    for (const auto& a : audit_chain(chain)) {
        r.add({"H_" + std::to_string(a.index) + " odd at 0", status_of(a.oddness < kChainTol), a.oddness,
               "deflation-chain", false, ""});
        const double van = a.vanishing.empty() ? 0.0 : *std::max_element(a.vanishing.begin(), a.vanishing.end());
        r.add({"H_" + std::to_string(a.index) + " vanishes at i*pi, i = 0.." + std::to_string(a.index),
               status_of(van < kChainTol), van, "deflation-chain", false, ""});
    }
    r.notes.push_back("closed-form level j uses degree-j coefficient polynomials and evaluates H_{N-1-j}, j = 1.." +
                      std::to_string(N - 1));
    if (chain.terminal && chain.terminal->is_symbolic()) {
        const bool zero = chain.terminal->mode_sum()->is_zero();
        r.add({"H_0 = 0", status_of(zero), zero ? 0.0 : 1.0, "deflation-chain", true, ""});
    }

    r.table.header = {"level", "t"};
    for (const auto& h : y_header(l.u.dim())) r.table.header.push_back(h);
    r.table.header.insert(r.table.header.end(), {"direct", "closed_form"});
    for (int j = 1; j <= N - 1; ++j) {
        const int index = N - 1 - j;
        const HFunction& h = chain.level(index);
        for (double t : grid.t_points())
            for (const auto& y : grid.y_points()) {
                std::vector<double> row{static_cast<double>(index), t};
                row.insert(row.end(), y.begin(), y.end());
                row.push_back(h(t, y));
                row.push_back(cf.value(j, t, y));
                r.table.rows.push_back(std::move(row));
            }
    }
}

void cmd_nullspace(RunReport& r, const std::string& file, const std::string& points, const std::string& t0s,
                   const std::string& cs, int count, int expect) {
    const Loaded l = load(r, file);
    std::vector<RealParam> ts;
    if (!points.empty()) {
        ts = parse_params(points);
    } else {
        if (cs.empty() || count < 1) throw std::invalid_argument("give --points, or --c with --count");
        ts = equidistant(parse_real_param(t0s), parse_real_param(cs), count);
    }
    r.inputs.emplace_back("points", join_params(ts));
    const NullspaceResult res = vanishing_nullspace(l.u.dim(), l.spec.modes, ts);
    r.add({"null space dimension", Status::Info, 0.0, "uniqueness-nullspace", res.exact,
           std::to_string(res.dimension()) + " (" + std::to_string(res.rows) + " equations, " +
               std::to_string(res.unknowns) + " unknowns)"});
    if (expect >= 0) {
        r.inputs.emplace_back("expect_dim", std::to_string(expect));
        r.add({"null space dimension equals " + std::to_string(expect),
               status_of(static_cast<int>(res.dimension()) == expect), 0.0, "uniqueness-nullspace", res.exact, ""});
    }
    for (std::size_t i = 0; i < res.dimension(); ++i) {
        if (res.exact) {
            r.notes.push_back("basis " + std::to_string(i) + ": " + assemble(l.u.dim(), l.spec.modes, res.exact_basis[i]).to_string());
        } else {
            std::string v;
            for (double x : res.basis[i]) v += (v.empty() ? "" : ", ") + format_double(x);
            r.notes.push_back("basis " + std::to_string(i) + ": [" + v + "]");
        }
    }
}

void cmd_extend(RunReport& r, const std::string& file, const std::string& t1s, const std::string& t2s,
                const std::string& as, const std::string& bs) {
    const Loaded l = load(r, file);
    const RealParam t1 = parse_real_param(t1s), t2 = parse_real_param(t2s);
    Domain dom = l.spec.domain_values();
    if (!as.empty()) dom.a = parse_real_param(as).value();
    if (!bs.empty()) dom.b = parse_real_param(bs).value();
    r.inputs.emplace_back("t1", t1.to_string());
    r.inputs.emplace_back("t2", t2.to_string());
    r.inputs.emplace_back("domain", format_double(dom.a) + "," + format_double(dom.b));

    const ExtendedFunction e = build_extension(l.u, t1, t2, dom);
    const ExtensionReport rep = verify_extension(e);
    r.add({"periodicity |u~(t+2d) - u~(t)|", status_of(rep.periodicity < kPeriodTol), rep.periodicity,
           "periodic-extension", false, "period " + format_double(e.period())});
    r.add({"agreement with u on the window", status_of(rep.core_agreement == 0.0), rep.core_agreement,
           "periodic-extension", false, ""});
    r.add({"seam jumps within finite-difference noise (orders 0-4)", status_of(!rep.seam_defect()),
           rep.max_seam_jump(), "periodic-extension", false,
           std::to_string(rep.seam_jumps.size() / 5) + " seams, step " + format_double(kSeamStep)});

    const GridSpec g = extension_grid(e, 121);
    r.table.header = {"t"};
    for (const auto& h : y_header(l.u.dim())) r.table.header.push_back(h);
    r.table.header.insert(r.table.header.end(), {"u_ext", "periodicity_residual"});
    for (double t : g.t_points())
        for (const auto& y : g.y_points()) {
            std::vector<double> row{t};
            row.insert(row.end(), y.begin(), y.end());
            row.push_back(e(t, y));
            row.push_back(e(t + e.period(), y) - e(t, y));
            r.table.rows.push_back(std::move(row));
        }
}

void finish(RunReport& r, bool verdict_command) {
    if (!verdict_command) r.exit_code = r.any_failed() ? 1 : 0;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

std::string status_tag(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Info: return "INFO";
    }
    return "?";
}

}  // namespace

RunReport counterexample_report() {
    RunReport r;
    r.command = "counterexample";
    ModeSum u(1);
    u.add(Mode::trig_exp(PiPoly::constant(Rational(1)), 0, Trig::Sin, {Rational(1)}));
    const RealParam zero, pi = RealParam::pi_multiple(Rational(1));
    r.inputs.emplace_back("modespec", serialize_modespec(to_modespec(u, "sin t * e^y")));
    r.inputs.emplace_back("t0", zero.to_string());
    r.inputs.emplace_back("c", pi.to_string());
    r.inputs.emplace_back("order", "1");

    const Verdict v = uniqueness_verdict(u, zero, pi, 1);
    const std::string tag = theorem_tag(v.theorem);
    bool vanishes = true;
    double van_res = 0.0;
    for (const auto& c : v.preconditions) {
        vanishes = vanishes && c.passed;
        van_res = std::max(van_res, c.residual);
    }
    r.add({"u = sin t e^y is harmonic and vanishes on t = 0 and t = pi", status_of(vanishes), van_res, tag, true, ""});
    r.add({"growth rate equals pi/c (critical)", status_of(v.growth.critical), 0.0, tag, true,
           "rate " + v.growth.rate.get_str()});
    r.add({"verdict is GrowthViolated", status_of(v.conclusion == Conclusion::GrowthViolated), 0.0, tag, true,
           to_string(v.conclusion)});
    const double y[1] = {0.0};
    const double peak = evaluate(u, std::numbers::pi / 2, y);
    r.add({"u is not identically zero", status_of(!u.is_zero() && peak != 0.0), 0.0, tag, true,
           "u(pi/2, 0) = " + format_double(peak)});
    const NullspaceResult ns = vanishing_nullspace(1, u.to_modes(), {zero, pi});
    r.add({"critical mode survives the hyperplane constraints", status_of(ns.dimension() == 1), 0.0,
           "uniqueness-nullspace", ns.exact, "null space dimension " + std::to_string(ns.dimension())});
    r.verdict = to_string(v.conclusion);
    r.notes = v.notes;
    r.notes.push_back("the growth condition cannot be relaxed to the critical rate");
    r.exit_code = r.any_failed() ? 1 : 0;
    return r;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                std::optional<RunReport>* last_report) {
    CLI::App app{"stripcheck: verification harness for polyharmonic functions on strips", "stripcheck"};
    app.require_subcommand(1);
    std::string report_path, table_path;
    bool as_json = false;
    app.add_option("--report", report_path, "write the JSON report to this file");
    app.add_option("--table", table_path, "write the residual grid as CSV to this file");
    app.add_flag("--json", as_json, "print the JSON report instead of the summary");

    int jmax = 8, order = 0, expect = -1, count = 0;
    long k = 1;
    std::string file, t1 = "0", t2, c, grid = "-3.1,3.1,63", points, a, b;
    std::vector<std::string> ys;

    auto* identity = app.add_subcommand("identity", "exact deflation identities")->fallthrough();
    identity->add_option("--jmax", jmax)->capture_default_str();

    auto* ord = app.add_subcommand("order", "polyharmonic order of a mode sum")->fallthrough();
    ord->add_option("file", file)->required();
    ord->add_option("--expect", expect);

    auto* fourier = app.add_subcommand("fourier", "sine coefficient a_k(y) over [-pi, pi]")->fallthrough();
    fourier->add_option("file", file)->required();
    fourier->add_option("--k", k)->required();
    fourier->add_option("--y", ys, "evaluation point, comma separated; repeatable");
    fourier->add_option("--order", order, "also run the Helmholtz check with this N");

    auto* sym = app.add_subcommand("symmetry", "oddness from antisymmetric hyperplane data")->fallthrough();
    sym->add_option("file", file)->required();
    sym->add_option("--t1", t1)->capture_default_str();
    sym->add_option("--c", c)->required();
    sym->add_option("--order", order)->required();

    auto* uni = app.add_subcommand("uniqueness", "vanishing on 2N equidistant hyperplanes")->fallthrough();
    uni->add_option("file", file)->required();
    uni->add_option("--t0", t1)->capture_default_str();
    uni->add_option("--c", c)->required();
    uni->add_option("--order", order)->required();

    auto* chain = app.add_subcommand("chain", "direct deflation chain vs closed form")->fallthrough();
    chain->add_option("file", file)->required();
    chain->add_option("--order", order)->required();
    chain->add_option("--grid", grid, "lo,hi,n")->capture_default_str();

    auto* ns = app.add_subcommand("nullspace", "coefficients vanishing on given hyperplanes")->fallthrough();
    ns->add_option("file", file)->required();
    ns->add_option("--points", points, "comma separated positions, e.g. 0,pi,2*pi");
    ns->add_option("--t0", t1)->capture_default_str();
    ns->add_option("--c", c);
    ns->add_option("--count", count);
    ns->add_option("--expect-dim", expect);

    auto* ext = app.add_subcommand("extend", "periodic extension from oddness at two points")->fallthrough();
    ext->add_option("file", file)->required();
    ext->add_option("--t1", t1)->required();
    ext->add_option("--t2", t2)->required();
    ext->add_option("--a", a, "override the declared domain");
    ext->add_option("--b", b);

    auto* cex = app.add_subcommand("counterexample", "sin t e^y: sharpness of the growth condition")->fallthrough();

    std::vector<std::string> argv_store{"stripcheck"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    RunReport r;
    r.timestamp = utc_now();
    bool verdict_command = false;
    try {
        if (identity->parsed()) {
            r.command = "identity";
            cmd_identity(r, jmax);
        } else if (ord->parsed()) {
            r.command = "order";
            cmd_order(r, file, expect);
        } else if (fourier->parsed()) {
            r.command = "fourier";
            cmd_fourier(r, file, k, ys, order);
        } else if (sym->parsed()) {
            r.command = "symmetry";
            verdict_command = true;
            cmd_symmetry(r, file, t1, c, order);
        } else if (uni->parsed()) {
            r.command = "uniqueness";
            verdict_command = true;
            cmd_uniqueness(r, file, t1, c, order);
        } else if (chain->parsed()) {
            r.command = "chain";
            cmd_chain(r, file, order, grid);
        } else if (ns->parsed()) {
            r.command = "nullspace";
            cmd_nullspace(r, file, points, t1, c, count, expect);
        } else if (ext->parsed()) {
            r.command = "extend";
            cmd_extend(r, file, t1, t2, a, b);
        } else if (cex->parsed()) {
            const std::string ts = r.timestamp;
            r = counterexample_report();
            r.timestamp = ts;
            verdict_command = true;
        }
        finish(r, verdict_command);
    } catch (const std::exception& e) {
        r.error = e.what();
        r.exit_code = 2;
    }

    if (as_json) {
        out << r.to_json();
    } else {
        for (const auto& ch : r.checks) {
            out << "[" << status_tag(ch.status) << "] " << ch.name;
            if (ch.residual != 0.0) out << "  residual=" << format_double(ch.residual);
            if (!ch.detail.empty()) out << "  (" << ch.detail << ")";
            out << "\n";
        }
        for (const auto& n : r.notes) out << "note: " << n << "\n";
        if (!r.verdict.empty()) out << "verdict: " << r.verdict << "\n";
        if (!r.error.empty()) err << "error: " << r.error << "\n";
        out << "exit: " << r.exit_code << "\n";
    }
    try {
        if (!report_path.empty()) write_file(report_path, r.to_json());
        if (!table_path.empty()) write_file(table_path, r.table.to_csv());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        r.exit_code = 2;
    }
    const int code = r.exit_code;
    if (last_report) *last_report = std::move(r);
    return code;
}

}  // namespace strip
