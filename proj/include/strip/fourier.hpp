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

#ifndef STRIP_FOURIER_HPP
#define STRIP_FOURIER_HPP

#include "strip/mode_sum.hpp"
#include "strip/yfunc.hpp"

#include <functional>
#include <span>
#include <vector>

namespace strip {

/// n-point Gauss–Legendre rule on [−1, 1]; nodes by Newton iteration on the
/// three-term recurrence.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussLegendre gauss_legendre(int n);

/// ∫_a^b f with `panels` equal panels of the 64-point rule.
double integrate_panels(const std::function<double(double)>& f, double a, double b, int panels = 8);

/// ∫_{−π}^{π} t^m cos(n t) dt and ∫_{−π}^{π} t^m sin(n t) dt for integer n, as elements of Q[π].
PiPoly integral_t_cos(int m, long n);
PiPoly integral_t_sin(int m, long n);

/// a_k(y) = (1/π)∫_{−π}^{π} h(t, y) sin(k t) dt as an exact exponential-polynomial in y.
/// Throws ClosedFormUnavailable for non-integer frequencies or numeric overlays.
YFunc fourier_sine_coefficient(const ModeSum& h, long k);

enum class FourierMethod { ClosedForm, Quadrature };

/// a_k(y) at one y; quadrature uses 8 panels × 64 nodes on [−π, π].
double fourier_coeff(const ModeSum& h, long k, std::span<const double> y, FourierMethod method);

struct HelmholtzReport {
    bool passed = false;
    YFunc coefficient;  ///< a_k
    YFunc survivors;    ///< (Δ_y − k²)^N a_k
};

/// Applies (Δ_y − k²) N times to the exact a_k. Throws InexactInput for overlays.
HelmholtzReport helmholtz_annihilation_check(const ModeSum& h, long k, int N);

enum class KernelDecision { IdenticallyZero, GrowthViolated };

struct KernelVerdict {
    KernelDecision decision = KernelDecision::IdenticallyZero;
    Rational rate_squared;  ///< max |κ|² over surviving terms
};

/// f in the kernel of (Δ_y − k²)^N is either zero or carries a term e^{⟨κ,y⟩} with
/// |κ| = k, which violates the growth bound. Throws NotInKernel otherwise, and
/// InexactInput for overlays.
KernelVerdict vekua_rellich_decide(const YFunc& f, const Rational& k, int N);

}  // namespace strip

#endif
