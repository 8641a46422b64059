/*
   Copyright 2026 Anharmonia contributors

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

#ifndef ANHARMONIA_NUMERIC_HPP
#define ANHARMONIA_NUMERIC_HPP

#include <complex>
#include <functional>
#include <vector>

#include "anharmonia/rational.hpp"
#include "anharmonia/report.hpp"
#include "anharmonia/util.hpp"

namespace anharmonia::numeric {

using Cplx = std::complex<double>;

// Right-hand side of a first-order complex system: state' = f(z, state),
// integrated along straight segments in the z-plane.
struct ODESystem {
    int dim;
    std::function<std::vector<Cplx>(Cplx, const std::vector<Cplx> &)> rhs;
    std::string tag;
};

struct Trajectory {
    std::vector<Cplx> z;                  // sample points along the path
    std::vector<std::vector<Cplx>> state; // state[i] at z[i]
};

// Classical fixed-step RK4 along the segment z0 -> z1. Throws
// SingularityError (with the z location in the message) if the state stops
// being finite.
Trajectory rk4_integrate(const ODESystem &sys, const std::vector<Cplx> &y0, Cplx z0, Cplx z1,
                         long steps);

// All complex roots of sum c[k] x^k (ascending, c.back() != 0) by
// Durand-Kerner iteration.
std::vector<Cplx> poly_roots(const std::vector<Cplx> &coeffs, int max_iter = 600);

// Greedy matching of two root multisets; returns the max pairing distance.
double match_roots(const std::vector<Cplx> &a, const std::vector<Cplx> &b);

// Laurent data of the equianharmonic Weierstrass function (g2 = 0):
// p(z) = 1/z^2 + sum_{k>=2} c_k z^{2k-2}, with c_2 = 0 and exact rational
// coefficients from the classical recursion.
struct LaurentP0 {
    Rational g3;
    std::vector<Rational> c; // c[k] for k = 2..M (index shifted by 2)

    Rational coeff(long k) const { return c[static_cast<std::size_t>(k - 2)]; }
    long max_index() const { return static_cast<long>(c.size()) + 1; }

    Cplx eval(Cplx z) const;
    Cplx eval_deriv(Cplx z) const;
};

// Coefficients through c_M; the defining differential equation
// (p')^2 = 4 p^3 - g3 is re-checked on the series as an internal oracle.
LaurentP0 p0_series(const Rational &g3, long M);

// Max drift of the cross-ratio of four Riccati solutions u' = B0 + B1 u +
// B2 u^2 integrated along z0 -> z1. Reported as a relative deviation.
struct DriftResult {
    double max_drift;
    bool pass;
};
DriftResult cross_ratio_drift(const std::function<Cplx(Cplx)> &B0, const std::function<Cplx(Cplx)> &B1,
                              const std::function<Cplx(Cplx)> &B2, const std::vector<Cplx> &initial,
                              Cplx z0, Cplx z1, long steps, double tol = 1e-9);

// Riccati u' = q - u^2 with q = (3/4) p0 along a path; checks that an
// algebraic initial value stays on its curve (Phi residual) and that the
// first integral Omega^2/H^3 stays constant.
struct FirstIntegralResult {
    double phi_residual;
    double ratio_drift;
    bool pass;
};
FirstIntegralResult first_integral_drift(const LaurentP0 &p0, Cplx z0, Cplx z1, long steps,
                                         bool seed_on_curve = true, double phi_tol = 1e-8,
                                         double ratio_tol = 1e-6);

// step-halving error ratio on u' = -u^2 (should be about 2^4)
double rk4_order_ratio(long steps);

Report numeric_suite(long steps);

} // namespace anharmonia::numeric

#endif
