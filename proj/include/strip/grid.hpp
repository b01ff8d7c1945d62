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

#ifndef STRIP_GRID_HPP
#define STRIP_GRID_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace strip {

/// Inclusive equispaced axis lo, lo+step, ..., ≤ hi.
struct AxisRange {
    double lo = 0.0;
    double hi = 0.0;
    double step = 1.0;

    std::vector<double> points() const;
};

/// Rectangular (t, y) sampling grid. t-values closer than `margin` to any entry of
/// `singular_t` are dropped.
struct GridSpec {
    AxisRange t;
    std::vector<AxisRange> y;
    std::vector<double> singular_t;
    double margin = 0.0;

    int dim() const noexcept { return static_cast<int>(y.size()); }
    std::vector<double> t_points() const;
    /// Cartesian product of the y axes, row-major (last coordinate fastest).
    std::vector<std::vector<double>> y_points() const;
    std::size_t size() const;
    /// Throws std::invalid_argument unless steps are positive, margin ≥ 0 and the grid is nonempty.
    void validate() const;
};

/// y ∈ [−1, 1] per coordinate; 9 points for d = 1, 5 for d = 2, 3 beyond.
std::vector<AxisRange> default_y_axes(int dim);

/// Grid over t ∈ [lo, hi] with n_t points and the default y axes.
GridSpec default_grid(int dim, double t_lo, double t_hi, int n_t = 33);

using PointFn = std::function<double(double t, std::span<const double> y)>;

struct MaxPair {
    double first = 0.0;
    double second = 0.0;
};

namespace kernels {

/// max |f| over the grid. OpenMP-parallel; the result does not depend on the thread count.
double max_abs(const GridSpec& grid, const PointFn& f);
/// max |f| and max |g| in one sweep.
MaxPair max_abs2(const GridSpec& grid, const PointFn& f, const PointFn& g);

/// Single-threaded references for the two kernels above.
double max_abs_serial(const GridSpec& grid, const PointFn& f);
MaxPair max_abs2_serial(const GridSpec& grid, const PointFn& f, const PointFn& g);

}  // namespace kernels

/// abs / scale, with 0/0 := 0.
inline double relative(double abs_value, double scale) {
    if (scale > 0.0) return abs_value / scale;
    return abs_value;
}

}  // namespace strip

#endif
