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

#ifndef ANHARMONIA_QSERIES_HPP
#define ANHARMONIA_QSERIES_HPP

#include <array>

#include "anharmonia/report.hpp"
#include "anharmonia/series.hpp"

namespace anharmonia::qseries {

// Eisenstein series E_k, k in {2,4,6}, with exact divisor-sum coefficients
// through q^(order-1).
FracSeries eisenstein(int weight, long order);

// Euler product prod_{n>=1} (1 - q^n) via the pentagonal number theorem.
FracSeries euler_product(long order);

// Modular discriminant q prod (1-q^n)^24.
FracSeries delta_series(long order);

// Fourth powers of the theta constants (nome q^(1/2)): {theta2^4, theta3^4,
// theta4^4}, each a ramification-2 series exact through q^(order-1).
std::array<FracSeries, 3> theta_fourths(long order);

// Hatted half-period values e_i / pi^2 on the lattice Z + tau Z. Labeling:
// ehat_1 = 2/3 + O(q) (integer powers only), ehat_2 has leading half-power
// coefficient -8, ehat_3 is its mirror under s -> -s.
FracSeries e_hat(int i, long order);

// lambda = theta2^4 / theta3^4, valuation 1 in s = q^(1/2), leading 16.
FracSeries lambda_series(long order);

// All named expansions at one shared truncation order.
struct ModularRegistry {
    long order;
    FracSeries E2, E4, E6, Delta;
    FracSeries theta2_4, theta3_4, theta4_4;
    FracSeries lambda;
    std::array<FracSeries, 3> ehat;

    static ModularRegistry build(long order);
};

// index of the first q-power where D(Delta)/Delta differs from E2, or -1
long dlog_delta_mismatch(const FracSeries &delta, const FracSeries &e2);

// verifies D(Delta)/Delta = E2 exactly to the requested order
Report dlog_delta_check(long order);

} // namespace anharmonia::qseries

#endif
