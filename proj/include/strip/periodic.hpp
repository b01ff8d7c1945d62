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

#ifndef STRIP_PERIODIC_HPP
#define STRIP_PERIODIC_HPP

#include "strip/grid.hpp"
#include "strip/mode_sum.hpp"
#include "strip/real_param.hpp"

#include <limits>
#include <map>
#include <memory>
#include <span>
#include <vector>

namespace strip {

/// Open interval (a, b) of the axial variable; infinite ends allowed.
struct Domain {
    double a = -std::numeric_limits<double>::infinity();
    double b = std::numeric_limits<double>::infinity();
};

/// 2δ-periodic continuation of a function odd at t1 and t2 = t1 + δ. The core is
/// evaluated as-is on the window [t1 − δ, t2 + δ); elsewhere t is translated by
/// 2kδ, k = ⌊(t − (t1 − δ)) / 2δ⌋, into [t1 − δ, t1 + δ).
class ExtendedFunction {
public:
    ExtendedFunction(ModeSum core, RealParam t1, RealParam t2);

    const ModeSum& core() const noexcept { return core_; }
    const RealParam& t1() const noexcept { return t1_; }
    const RealParam& t2() const noexcept { return t2_; }
    double delta() const noexcept { return delta_; }
    double window_lo() const noexcept { return lo_; }
    double window_hi() const noexcept { return hi_; }
    double period() const noexcept { return 2.0 * delta_; }

    /// 0 on the window, otherwise the translation index k.
    long tile(double t) const;
    double operator()(double t, std::span<const double> y) const;
    /// Formula piece of tile k continued to any t (used for one-sided seam derivatives).
    double piece(long k, double t, std::span<const double> y) const;
    /// Formula boundaries in [lo, hi].
    std::vector<double> seams(double lo, double hi) const;
    /// Tile containing points just right of seam s.
    long tile_right_of(double seam) const;

    /// Copy in which tile k evaluates `replacement` instead of the core.
    /// Test fixture for seam detection; k = 0 replaces the window.
    ExtendedFunction with_tile_override(long k, const ModeSum& replacement) const;

private:
    ModeSum core_;
    RealParam t1_, t2_;
    double delta_ = 0.0, lo_ = 0.0, hi_ = 0.0;
    std::shared_ptr<const Evaluator> eval_;
    std::map<long, std::shared_ptr<const Evaluator>> overrides_;
};

/// Throws InvariantViolation (t2 ≤ t1), InsufficientMargin, NotOddAtPoint.
/// Oddness is tested on offsets [0, δ] with the relative tolerance 1e−9.
ExtendedFunction build_extension(const ModeSum& u, const RealParam& t1, const RealParam& t2, const Domain& domain);

struct SeamJump {
    double seam = 0.0;
    int order = 0;       ///< derivative order 0..4
    double jump = 0.0;   ///< |left − right| / max |u| on the window
    double floor = 0.0;  ///< finite-difference noise level at this order
    bool significant() const noexcept { return jump > floor; }
};

struct ExtensionReport {
    double periodicity = 0.0;     ///< max |ũ(t + 2δ) − ũ(t)|, relative
    double core_agreement = 0.0;  ///< max |ũ − u| on the window, absolute
    double scale = 0.0;           ///< max |u| on the window
    std::vector<SeamJump> seam_jumps;

    double max_seam_jump() const;
    bool seam_defect() const;
};

inline constexpr double kSeamStep = 1e-3;

/// Default sweep: four periods either side of the window.
GridSpec extension_grid(const ExtendedFunction& e, int n_t = 241);
ExtensionReport verify_extension(const ExtendedFunction& e, const GridSpec& grid);
ExtensionReport verify_extension(const ExtendedFunction& e);

}  // namespace strip

#endif
