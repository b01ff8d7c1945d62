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

#include "strip/grid.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace strip {

std::vector<double> AxisRange::points() const {
    if (!(step > 0.0)) throw std::invalid_argument("grid step must be positive");
    if (hi < lo) return {};
    const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = lo + static_cast<double>(i) * step;
    return out;
}

std::vector<double> GridSpec::t_points() const {
    std::vector<double> out;
    for (double v : t.points()) {
        bool keep = true;
        for (double s : singular_t)
            if (std::abs(v - s) < margin) keep = false;
        if (keep) out.push_back(v);
    }
    return out;
}

std::vector<std::vector<double>> GridSpec::y_points() const {
    std::vector<std::vector<double>> out{{}};
    for (const auto& axis : y) {
        std::vector<std::vector<double>> next;
        const auto pts = axis.points();
        for (const auto& prefix : out)
            for (double v : pts) {
                auto p = prefix;
                p.push_back(v);
                next.push_back(std::move(p));
            }
        out = std::move(next);
    }
    return out;
}

std::size_t GridSpec::size() const { return t_points().size() * y_points().size(); }

void GridSpec::validate() const {
    if (!(t.step > 0.0)) throw std::invalid_argument("t step must be positive");
    for (const auto& a : y)
        if (!(a.step > 0.0)) throw std::invalid_argument("y step must be positive");
    if (margin < 0.0) throw std::invalid_argument("margin must be non-negative");
    if (size() == 0) throw std::invalid_argument("grid is empty after exclusion");
}

std::vector<AxisRange> default_y_axes(int dim) {
    const double step = dim == 1 ? 0.25 : (dim == 2 ? 0.5 : 1.0);
    return std::vector<AxisRange>(static_cast<std::size_t>(dim), AxisRange{-1.0, 1.0, step});
}

GridSpec default_grid(int dim, double t_lo, double t_hi, int n_t) {
    GridSpec g;
    g.t = AxisRange{t_lo, t_hi, n_t > 1 ? (t_hi - t_lo) / (n_t - 1) : 1.0};
    if (!(g.t.step > 0.0)) g.t.step = 1.0;
    g.y = default_y_axes(dim);
    return g;
}

namespace kernels {

namespace {

struct Flat {
    std::vector<double> ts;
    std::vector<std::vector<double>> ys;
    std::size_t size() const { return ts.size() * ys.size(); }
};

Flat flatten(const GridSpec& grid) {
    grid.validate();
    return Flat{grid.t_points(), grid.y_points()};
}

// Runs body(i) over [0, n) in parallel; the first exception thrown by any
// iteration is rethrown after the loop.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
    std::exception_ptr failure;
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(strip_kernel_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

double max_abs(const GridSpec& grid, const PointFn& f) {
    const Flat flat = flatten(grid);
    const std::size_t ny = flat.ys.size();
    std::vector<double> partial(flat.size());
    parallel_for(flat.size(), [&](std::size_t i) {
        partial[i] = std::abs(f(flat.ts[i / ny], flat.ys[i % ny]));
    });
    double best = 0.0;
    for (double v : partial) best = std::max(best, v);
    return best;
}

MaxPair max_abs2(const GridSpec& grid, const PointFn& f, const PointFn& g) {
    const Flat flat = flatten(grid);
    const std::size_t ny = flat.ys.size();
    std::vector<double> pf(flat.size()), pg(flat.size());
    parallel_for(flat.size(), [&](std::size_t i) {
        const double t = flat.ts[i / ny];
        const auto& y = flat.ys[i % ny];
        pf[i] = std::abs(f(t, y));
        pg[i] = std::abs(g(t, y));
    });
    MaxPair out;
    for (std::size_t i = 0; i < pf.size(); ++i) {
        out.first = std::max(out.first, pf[i]);
        out.second = std::max(out.second, pg[i]);
    }
    return out;
}

double max_abs_serial(const GridSpec& grid, const PointFn& f) {
    const Flat flat = flatten(grid);
    double best = 0.0;
    for (double t : flat.ts)
        for (const auto& y : flat.ys) best = std::max(best, std::abs(f(t, y)));
    return best;
}

MaxPair max_abs2_serial(const GridSpec& grid, const PointFn& f, const PointFn& g) {
    const Flat flat = flatten(grid);
    MaxPair out;
    for (double t : flat.ts)
        for (const auto& y : flat.ys) {
            out.first = std::max(out.first, std::abs(f(t, y)));
            out.second = std::max(out.second, std::abs(g(t, y)));
        }
    return out;
}

}  // namespace kernels
}  // namespace strip
