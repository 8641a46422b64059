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

#include "anharmonia/qseries.hpp"

#include <vector>

#include "anharmonia/util.hpp"

namespace anharmonia::qseries {

namespace {

// sigma_k(n) for all n < order
std::vector<Int> divisor_sums(long order, int k) {
    std::vector<Int> s(static_cast<std::size_t>(order), Int(0));
    for (long d = 1; d < order; ++d) {
        Int dk = Int::pow(Int(d), static_cast<unsigned long>(k));
        for (long n = d; n < order; n += d) s[static_cast<std::size_t>(n)] += dk;
    }
    return s;
}

} // namespace

FracSeries eisenstein(int weight, long order) {
    if (order < 1) throw DegenerateInputError("eisenstein: order must be >= 1");
    long mult;
    int k;
    switch (weight) {
    case 2: mult = -24; k = 1; break;
    case 4: mult = 240; k = 3; break;
    case 6: mult = -504; k = 5; break;
    default: throw DegenerateInputError("eisenstein: weight must be 2, 4 or 6");
    }
    auto sig = divisor_sums(order, k);
    std::vector<Rational> c(static_cast<std::size_t>(order), Rational(0));
    c[0] = Rational(1);
    for (long n = 1; n < order; ++n)
        c[static_cast<std::size_t>(n)] = Rational(Int(mult) * sig[static_cast<std::size_t>(n)], Int(1));
    return FracSeries(1, 0, order, std::move(c));
}

FracSeries euler_product(long order) {
    // pentagonal number theorem: prod (1-q^n) = sum_k (-1)^k q^{k(3k-1)/2}
    std::vector<Rational> c(static_cast<std::size_t>(order), Rational(0));
    for (long k = -order; k <= order; ++k) {
        long e = k * (3 * k - 1) / 2;
        if (e < 0 || e >= order) continue;
        c[static_cast<std::size_t>(e)] += (k % 2 == 0) ? Rational(1) : Rational(-1);
    }
    return FracSeries(1, 0, order, std::move(c));
}

FracSeries delta_series(long order) {
    if (order < 1) throw DegenerateInputError("delta_series: order must be >= 1");
    // q prod (1-q^n)^24; compute the product to relative order `order`
    FracSeries p = euler_product(order);
    FracSeries p24 = p.pow(24);
    FracSeries q = FracSeries::monomial(Rational(1), 1, 1, order + 1);
    return q * p24;
}

std::array<FracSeries, 3> theta_fourths(long order) {
    if (order < 1) throw DegenerateInputError("theta_fourths: order must be >= 1");
    long so = 2 * order; // s-order, s = q^(1/2)
    // theta3 = 1 + 2 sum p^(n^2), theta4 with alternating signs, and
    // theta2 = 2 p^(1/4) B with B = sum p^(n(n+1)); theta2^4 = 16 p B^4.
    std::vector<Rational> t3(static_cast<std::size_t>(so), Rational(0));
    std::vector<Rational> t4(static_cast<std::size_t>(so), Rational(0));
    std::vector<Rational> b(static_cast<std::size_t>(so), Rational(0));
    t3[0] = Rational(1);
    t4[0] = Rational(1);
    for (long n = 1; n * n < so; ++n) {
        t3[static_cast<std::size_t>(n * n)] += Rational(2);
        t4[static_cast<std::size_t>(n * n)] += (n % 2 == 0) ? Rational(2) : Rational(-2);
    }
    for (long n = 0; n * (n + 1) < so; ++n) b[static_cast<std::size_t>(n * (n + 1))] += Rational(1);
    FracSeries th3(2, 0, so, std::move(t3));
    FracSeries th4(2, 0, so, std::move(t4));
    FracSeries bb(2, 0, so, std::move(b));
    FracSeries th2_4 = Rational(16) * FracSeries::monomial(Rational(1), 1, 2, so + 1) * bb.pow(4);
    return {th2_4.truncated(so), th3.pow(4).truncated(so), th4.pow(4).truncated(so)};
}

FracSeries e_hat(int i, long order) {
    auto [t2, t3, t4] = theta_fourths(order);
    Rational third(1, 3);
    switch (i) {
    case 1: return third * (t3 + t4);
    case 2: return -third * (t2 + t3);
    case 3: return third * (t2 - t4);
    default: throw DegenerateInputError("e_hat: index must be 1, 2 or 3");
    }
}

FracSeries lambda_series(long order) {
    auto [t2, t3, t4] = theta_fourths(order);
    (void)t4;
    return t2 / t3;
}

ModularRegistry ModularRegistry::build(long order) {
    auto [t2, t3, t4] = theta_fourths(order);
    Rational third(1, 3);
    return ModularRegistry{order,
                           eisenstein(2, order),
                           eisenstein(4, order),
                           eisenstein(6, order),
                           delta_series(order),
                           t2,
                           t3,
                           t4,
                           t2 / t3,
                           {third * (t3 + t4), -third * (t2 + t3), third * (t2 - t4)}};
}

long dlog_delta_mismatch(const FracSeries &delta, const FracSeries &e2) {
    FracSeries lhs = delta.D() / delta;
    long bad = FracSeries::first_mismatch(lhs, e2);
    return bad;
}

Report dlog_delta_check(long order) {
    if (order < 2) throw DegenerateInputError("dlog_delta_check: order must be >= 2");
    Report rep("dlog-delta");
    FracSeries delta = delta_series(order);
    FracSeries e2 = eisenstein(2, order);
    long bad = dlog_delta_mismatch(delta, e2);
    if (bad < 0)
        rep.add_pass("D(Delta)/Delta = E2", "0 (exact)", "order " + std::to_string(order));
    else
        rep.add_fail("D(Delta)/Delta = E2", "mismatch at q^" + std::to_string(bad),
                     "order " + std::to_string(order));
    return rep;
}

} // namespace anharmonia::qseries
