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

#ifndef ANHARMONIA_DARBOUX_HPP
#define ANHARMONIA_DARBOUX_HPP

#include <array>
#include <string>
#include <vector>

#include "anharmonia/mvpoly.hpp"
#include "anharmonia/poly.hpp"
#include "anharmonia/report.hpp"

namespace anharmonia::darboux {

// Differential polynomials in the potential: MvPoly over the jet variables
// q0, q1, q2, ... (q0 is the potential, qk its k-th derivative).
using DiffPoly = MvPoly;
// Polynomials in u with DiffPoly coefficients.
using UPoly = Poly<DiffPoly>;

inline std::string jet_name(long k) { return "q" + std::to_string(k); }
inline DiffPoly jet(long k) { return MvPoly::variable(jet_name(k)); }

// total derivative d/dz on jets: q_k -> q_{k+1}
DiffPoly total_derivative(const DiffPoly &p);
UPoly total_derivative(const UPoly &p);

// the derivation X = d/dz + (q - u^2) d/du on u-polynomials
UPoly derivation_X(const UPoly &f);

// u as a UPoly, and embedding of DiffPoly as a u-constant
UPoly u_variable();
UPoly u_const(const DiffPoly &c);

// Rewrite ideal generated by q2 -> 6a q0^2 (+ c0 when with_constant) and
// its formal derivatives; reduction eliminates all jets of order >= 2 and
// is idempotent.
struct ConstraintIdeal {
    Rational a;            // q'' = 6 a q^2
    bool with_constant = false; // q'' = 6 a q^2 + c0 (c0 a fresh symbol)
    long max_jet = 16;
    std::vector<DiffPoly> rules; // rules[k] rewrites q_{k+2}

    static ConstraintIdeal standard(const Rational &a, long max_jet = 16);
    static ConstraintIdeal shifted_by_constant(const Rational &a, long max_jet = 16);

    DiffPoly reduce(const DiffPoly &p) const;
    UPoly reduce(const UPoly &p) const;
};

// potential ratio a = (n-2)^2/(n-1), so the constraint is q'' = 6 a q^2
Rational potential_ratio(long n);

// Minimal-degree Darboux polynomial data: Phi in the binomial convention,
// the coefficients a_1..a_n from the recursion, and the leftover closure
// relation (the k = n line, identically zero mod the constraint ideal).
struct PhiData {
    long n = 0;
    std::vector<DiffPoly> coeff; // coeff[k] = a_k, k = 0..n (a_0 = 1)
    UPoly phi;
    DiffPoly closure; // dz(a_n) - n a1 a_n + n a_{n-1} q
};

PhiData build_phi(long n, const DiffPoly &a1);
PhiData build_phi(long n); // a1 = 0

struct Covariants {
    UPoly H, Omega, Omega1, Xi;
};
Covariants covariants(const UPoly &phi, long n);

// the four eigen-relations X(P) = cofactor * P, reduced mod the ideal
Report verify_cofactors(long n);

// first-integral structure: Omega1 = a H^2, Omega^2 - alpha H^3 = beta
// Phi^k, Xi = C Phi^{k-1}; beta and C are computed and reported.
struct FirstIntegralData {
    Rational a_value;      // -6 (n-2)^2/(n-1)
    Rational alpha;        // -4 (n-2)^2/(n-1)
    long k = 0;            // 6 - 12/n
    DiffPoly beta;         // computed quotient, constant mod ideal
    DiffPoly big_c;        // Xi / Phi^{k-1}
    Report report;
};
FirstIntegralData verify_first_integral_relations(long n);

// both tau_4 routes reduce to zero mod the ideal
Report tau4_check(long n);

// the degree-2 case contradicts itself: the closure forces the potential
// to be constant
Report n2_impossibility();

// everything for one n (3, 4, 6 or 12), plus the n = 2 flag
Report darboux_suite(long n);

} // namespace anharmonia::darboux

#endif
