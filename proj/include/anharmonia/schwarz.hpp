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

#ifndef ANHARMONIA_SCHWARZ_HPP
#define ANHARMONIA_SCHWARZ_HPP

#include <optional>
#include <string>

#include "anharmonia/mvpoly.hpp"
#include "anharmonia/report.hpp"
#include "anharmonia/util.hpp"

namespace anharmonia::schwarz {

// Elements of Q(a)(xi)[y]/(y^2 - (xi^3 - 1)): rational functions in the
// symbols {xi, a} adjoined with y = sqrt(xi^3 - 1). Arithmetic is exact;
// derivative is with respect to xi (so y' = 3 xi^2 / (2y)).
struct AlgebraicElement {
    MvFrac base; // coefficient of 1
    MvFrac surd; // coefficient of y

    AlgebraicElement() = default;
    AlgebraicElement(MvFrac b, MvFrac s) : base(std::move(b)), surd(std::move(s)) {}
    static AlgebraicElement from(const MvFrac &b) { return {b, MvFrac(Rational(0))}; }
    static AlgebraicElement sqrt_xi3_minus_1() { return {MvFrac(Rational(0)), MvFrac(Rational(1))}; }

    bool is_zero() const { return base.is_zero() && surd.is_zero(); }
    bool is_base() const { return surd.is_zero(); }

    friend AlgebraicElement operator+(const AlgebraicElement &x, const AlgebraicElement &y) {
        return {x.base + y.base, x.surd + y.surd};
    }
    friend AlgebraicElement operator-(const AlgebraicElement &x, const AlgebraicElement &y) {
        return {x.base - y.base, x.surd - y.surd};
    }
    AlgebraicElement operator-() const { return {-base, -surd}; }
    friend AlgebraicElement operator*(const AlgebraicElement &x, const AlgebraicElement &y);
    friend AlgebraicElement operator/(const AlgebraicElement &x, const AlgebraicElement &y);
    AlgebraicElement inv() const;
    AlgebraicElement derivative() const; // d/dxi

    friend bool operator==(const AlgebraicElement &x, const AlgebraicElement &y) {
        return (x.base == y.base) && (x.surd == y.surd);
    }
};

// {f, xi} = (f''/f')' - (1/2)(f''/f')^2 for an algebraic element f
AlgebraicElement schwarzian(const AlgebraicElement &f);

// Schwarzian of a rational function of one variable (over Q(vars))
MvFrac schwarzian_frac(const MvFrac &f, const std::string &var);

// r(xi) = theta'^2 R(theta) - (1/2){theta, xi}, with R given as a map from
// the image variable; here specialized to R∘theta supplied directly (the
// change of variable is its own inverse bookkeeping in the uses below).
AlgebraicElement riccati_pullback(const AlgebraicElement &theta_prime, const AlgebraicElement &R_of_theta,
                                  const AlgebraicElement &schwarzian_theta);

// Exact replay of the change of variable from the cubic-curve potential to
// the displayed rational potential with c0 = 4/a - 3, c1 = 1/a + 6,
// with a kept symbolic.
Report eq20_verify();
// same pipeline at one rational ratio
Report eq20_verify_ratio(const Rational &a);

// Q(s) = (1/4)[ (L^2-1)/s^2 + (N^2-1)/(1-s)^2 + (L^2 - M^2 + N^2 - 1)/(s(1-s)) ]
MvFrac hypergeom_potential(const Rational &lambda, const Rational &mu, const Rational &nu);
// the exponent triple lambda = 1/3, mu = n/(6(n-2)), nu = 1/2
std::array<Rational, 3> hypergeom_exponents_for(long n);

// 2/N = 1/k0 + 1/k1 + 1/kinf - 1; nullopt means infinite monodromy
std::optional<long> platonic_order(long k0, long k1, long kinf);

struct ExponentData {
    Rational a, b, c;
    Rational lambda, mu, nu;
    Rational mu0, mu1, muinf;
    std::optional<Rational> k0, k1, kinf;
};
ExponentData exponent_data(const Rational &a, const Rational &b, const Rational &c);

// second-order equation coefficients of the hypergeometric form, and the
// Schwarzian target expression, exposed as constructors (exploratory)
struct HypergeomEquation {
    MvFrac p_coeff; // coefficient of y'
    MvFrac q_coeff; // coefficient of y
};
HypergeomEquation hypergeom_equation(const Rational &lambda, const Rational &mu, const Rational &nu);
MvFrac schwarzian_target(const Rational &mu0, const Rational &mu1, const Rational &muinf);

Report schwarz_suite(long random_pairs, unsigned long seed);

// Exploratory (not an acceptance gate): search for a power substitution
// s = c xi^k carrying the pulled-back rational potential onto the
// hypergeometric one with the exponent triple of each n; reports matches.
Report explore_hypergeom_bridge();

} // namespace anharmonia::schwarz

#endif
