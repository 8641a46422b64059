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

#ifndef ANHARMONIA_ANHARMONIC_HPP
#define ANHARMONIA_ANHARMONIC_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "anharmonia/mobius.hpp"
#include "anharmonia/mvpoly.hpp"
#include "anharmonia/poly.hpp"
#include "anharmonia/ratfun.hpp"
#include "anharmonia/report.hpp"

namespace anharmonia::anharmonic {

using CPoly = Poly<Cyclotomic>;
using CRat = RatFun<Cyclotomic>;

// Degree bookkeeping for the admissible (n, p) pairs of each family.
struct DegreeInfo {
    enum class P1 { any_n_at_least_4, any_even_n_at_least_4, fixed } p1;
    long p1_n = 0;                            // for P1::fixed
    bool dihedral_p2 = false;                 // n = m, p = 2, every m
    std::vector<std::pair<long, long>> p_gt1; // explicit (n, p) rows
};
DegreeInfo degree_table(GroupKind kind);

// Instance data: group, invariant, seed and the (n, p, N) bookkeeping.
struct AnharmonicSpec {
    GroupKind kind;
    long parameter = 0;
    long n = 0, p = 0, N = 0;
    FiniteMobiusGroup group;
    AbsoluteInvariant invariant;
    ProjPoint seed;
    std::string provenance;
};

// Builds the instance; for p > 1 the seed is an exact fixed point of an
// order-p element (search over the catalog's exact fixed points); for p = 1
// a small rational seed with a full orbit. Throws InadmissibleSeedError
// when no usable exact seed exists (e.g. every candidate orbit passes
// through infinity).
AnharmonicSpec make_spec(GroupKind kind, long parameter, long n, long p);

struct OrbitPolynomial {
    CPoly U;          // monic, degree n, variable "t"
    Cyclotomic t0;    // critical value Psi(seed)
    Cyclotomic lead;  // psi - t0 phi = lead * U^p
};
OrbitPolynomial orbit_polynomial(const AnharmonicSpec &spec);

// x = [1/(t - eta) - U'/(n U)] / Psi'(t), reduced
CRat parameterize_root(const AnharmonicSpec &spec, const OrbitPolynomial &orb, const ProjPoint &eta);

struct RiccatiCoefficients {
    CRat B0, B1, B2; // du/dt = B0 + B1 u + B2 u^2; B2 = -Psi'
};
RiccatiCoefficients build_riccati(const AnharmonicSpec &spec, const OrbitPolynomial &orb);

// substitutes each parameterized root into the equation; exact zero residual
Report verify_roots_satisfy_riccati(const AnharmonicSpec &spec, const OrbitPolynomial &orb);

// Eliminated polynomial: monic in x of degree n with coefficients in the
// fraction field of Q(zeta)[T].
struct Eliminated {
    Poly<CRat> F;          // variable "x"; coefficients rational functions in "T"
    std::string route;     // "sylvester", "trace-interpolation" or "closed-form"
    std::string normalization; // admissible moves applied, for provenance
};
Eliminated eliminate(const AnharmonicSpec &spec, const OrbitPolynomial &orb);

// F(f(t, eta), Psi(t)) = 0 as an exact identity in Q(zeta)(t)
bool verify_f_closure(const AnharmonicSpec &spec, const OrbitPolynomial &orb, const Eliminated &elim,
                      const ProjPoint &eta);

// Res_x(F, dF/dx) as a rational function of T; must not vanish identically
bool f_is_separable(const Eliminated &elim);

// numeric fiber closure: the multiset { f(t_j) } over a sampled fiber
// equals p copies of the roots of F(x, T0); returns the max matching error
double numeric_fiber_error(const AnharmonicSpec &spec, const OrbitPolynomial &orb, const Eliminated &elim,
                           const Rational &sample_t);

// ---- the cyclic family with a free constant K ------------------------

// Exact symbolic pipeline over Q(K): U = eta^n - K, the elimination in
// closed resultant form, the homography carrying it to T x^n - K, and the
// equation check in the quotient ring Q(K)(t)[eta]/(eta^n - K).
struct CyclicSymbolic {
    long n;
    MvPoly raw;              // Res_t: [x n T (T-K) + K]^n - K T^{n-1} [x n (T-K) + 1]^n
    bool homography_ok;      // the recorded admissible move lands on T x^n = K
    bool riccati_ok;         // every root satisfies the constructed equation
    bool sum_zero;           // the parameterized roots sum to zero
};
CyclicSymbolic cyclic_symbolic(long n);

// end-to-end checks for one (kind, parameter, n, p) instance
Report anharmonic_case_report(GroupKind kind, long parameter, long n, long p);

// the acceptance battery: cyclic n = 4..7 symbolically, dihedral(3) p = 2
// end-to-end, and the degree table rows
Report anharmonic_suite();

} // namespace anharmonia::anharmonic

#endif
