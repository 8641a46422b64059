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

#ifndef ANHARMONIA_BINFORM_HPP
#define ANHARMONIA_BINFORM_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "anharmonia/bigint.hpp"
#include "anharmonia/mvpoly.hpp"
#include "anharmonia/poly.hpp"
#include "anharmonia/rational.hpp"
#include "anharmonia/report.hpp"
#include "anharmonia/util.hpp"

namespace anharmonia::binform {

// Binary form of degree n in the binomial convention: the x^{n-k} y^k
// monomial carries coefficient C(n,k) a_k.
struct BinaryForm {
    long degree = 0;
    std::vector<Rational> a; // a_0 .. a_n

    BinaryForm() = default;
    BinaryForm(long n, std::vector<Rational> coeffs) : degree(n), a(std::move(coeffs)) {
        if (static_cast<long>(a.size()) != n + 1)
            throw DegenerateInputError("BinaryForm: need exactly n+1 coefficients");
    }
    static BinaryForm zero(long n) { return BinaryForm(n, std::vector<Rational>(static_cast<std::size_t>(n) + 1, Rational(0))); }

    bool is_zero() const {
        for (const auto &x : a)
            if (!x.is_zero()) return false;
        return true;
    }
    friend bool operator==(const BinaryForm &f, const BinaryForm &g) {
        return f.degree == g.degree && f.a == g.a;
    }

    // plain homogeneous coefficient of x^{n-k} y^k
    Rational monomial_coeff(long k) const {
        return Rational(binomial(static_cast<unsigned long>(degree), static_cast<unsigned long>(k))) *
               a[static_cast<std::size_t>(k)];
    }

    // dehomogenize: F(p) = f(p, 1)
    Poly<Rational> dehomogenized(const std::string &var = "p") const {
        std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, Rational(0));
        for (long k = 0; k <= degree; ++k) c[static_cast<std::size_t>(degree - k)] = monomial_coeff(k);
        return Poly<Rational>(var, c);
    }

    // (g f)(x, y) = f(a x + b y, c x + d y)
    BinaryForm transformed(const Rational &ta, const Rational &tb, const Rational &tc, const Rational &td) const {
        // expand via powers of the two linear forms in (x, y)
        long n = degree;
        std::vector<std::vector<Rational>> pow1, pow2; // coefficients in y-degree
        pow1.push_back({Rational(1)});
        pow2.push_back({Rational(1)});
        for (long k = 1; k <= n; ++k) {
            auto mul_linear = [&](const std::vector<Rational> &prev, const Rational &u, const Rational &v) {
                std::vector<Rational> next(prev.size() + 1, Rational(0));
                for (std::size_t i = 0; i < prev.size(); ++i) {
                    next[i] += prev[i] * u;       // times x-part
                    next[i + 1] += prev[i] * v;   // times y-part
                }
                return next;
            };
            pow1.push_back(mul_linear(pow1.back(), ta, tc));
            pow2.push_back(mul_linear(pow2.back(), tb, td));
        }
        std::vector<Rational> mono(static_cast<std::size_t>(n) + 1, Rational(0));
        for (long k = 0; k <= n; ++k) {
            Rational c = monomial_coeff(k);
            if (c.is_zero()) continue;
            const auto &p1 = pow1[static_cast<std::size_t>(n - k)];
            const auto &p2 = pow2[static_cast<std::size_t>(k)];
            for (std::size_t i = 0; i < p1.size(); ++i)
                for (std::size_t j = 0; j < p2.size(); ++j) mono[i + j] += c * p1[i] * p2[j];
        }
        std::vector<Rational> out(static_cast<std::size_t>(n) + 1, Rational(0));
        for (long k = 0; k <= n; ++k)
            out[static_cast<std::size_t>(k)] =
                mono[static_cast<std::size_t>(k)] /
                Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
        return BinaryForm(n, out);
    }

    std::string str() const {
        std::string s;
        for (long k = 0; k <= degree; ++k) {
            Rational c = monomial_coeff(k);
            if (c.is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")";
            if (degree - k > 0) s += "*x1^" + std::to_string(degree - k);
            if (k > 0) s += "*x2^" + std::to_string(k);
        }
        return s.empty() ? "0" : s;
    }
};

namespace detail {

// element of Q[x, y, x', y'], the doubled ring the Omega process acts on
using Quad = std::map<std::array<int, 4>, Rational>;

inline void quad_add(Quad &q, const std::array<int, 4> &e, const Rational &c) {
    if (c.is_zero()) return;
    auto it = q.find(e);
    if (it == q.end()) {
        q.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) q.erase(it);
    }
}

// Omega = d^2/dx dy' - d^2/dx' dy
inline Quad omega_step(const Quad &q) {
    Quad out;
    for (const auto &[e, c] : q) {
        if (e[0] > 0 && e[3] > 0)
            quad_add(out, {e[0] - 1, e[1], e[2], e[3] - 1}, c * Rational(e[0]) * Rational(e[3]));
        if (e[2] > 0 && e[1] > 0)
            quad_add(out, {e[0], e[1] - 1, e[2] - 1, e[3]}, -(c * Rational(e[2]) * Rational(e[1])));
    }
    return out;
}

} // namespace detail

// r-th transvectant by the Omega process: apply Omega^r to Q(x,y) R(x',y')
// and restrict to x' = x, y' = y. Result degree deg Q + deg R - 2r.
inline BinaryForm omega_transvectant(const BinaryForm &Q, const BinaryForm &R, long r) {
    if (r < 0 || r > std::min(Q.degree, R.degree))
        throw DegenerateInputError("omega_transvectant: r exceeds min degree");
    detail::Quad prod;
    for (long i = 0; i <= Q.degree; ++i) {
        Rational ci = Q.monomial_coeff(i);
        if (ci.is_zero()) continue;
        for (long j = 0; j <= R.degree; ++j) {
            Rational cj = R.monomial_coeff(j);
            if (cj.is_zero()) continue;
            detail::quad_add(prod,
                             {static_cast<int>(Q.degree - i), static_cast<int>(i), static_cast<int>(R.degree - j),
                              static_cast<int>(j)},
                             ci * cj);
        }
    }
    for (long s = 0; s < r; ++s) prod = detail::omega_step(prod);
    long deg = Q.degree + R.degree - 2 * r;
    std::vector<Rational> mono(static_cast<std::size_t>(deg) + 1, Rational(0));
    for (const auto &[e, c] : prod) {
        long ydeg = e[1] + e[3];
        mono[static_cast<std::size_t>(ydeg)] += c;
    }
    std::vector<Rational> out(static_cast<std::size_t>(deg) + 1, Rational(0));
    for (long k = 0; k <= deg; ++k)
        out[static_cast<std::size_t>(k)] =
            mono[static_cast<std::size_t>(k)] /
            Rational(binomial(static_cast<unsigned long>(deg), static_cast<unsigned long>(k)));
    return BinaryForm(deg, out);
}

// Classically normalized transvectant (m-r)!(n-r)!/(m! n!) * Omega^r; this
// is the convention the alpha-coefficient recursion lives in.
inline BinaryForm omega_transvectant_scaled(const BinaryForm &Q, const BinaryForm &R, long r) {
    BinaryForm raw = omega_transvectant(Q, R, r);
    Rational scale(Int(1), factorial(static_cast<unsigned long>(Q.degree)) *
                               factorial(static_cast<unsigned long>(R.degree)));
    scale *= Rational(factorial(static_cast<unsigned long>(Q.degree - r)) *
                      factorial(static_cast<unsigned long>(R.degree - r)));
    for (auto &x : raw.a) x *= scale;
    return raw;
}

// Inhomogeneous transvectant of dehomogenized forms; degF/degG are the form
// degrees (which may exceed the polynomial degrees). Matches the Omega
// route exactly after dehomogenization.
inline Poly<Rational> transvectant_inhom(const Poly<Rational> &F, long degF, const Poly<Rational> &G, long degG,
                                         long r) {
    if (r < 0 || r > std::min(degF, degG))
        throw DegenerateInputError("transvectant_inhom: r exceeds min degree");
    Poly<Rational> acc(F.var(), Rational(0));
    std::vector<Poly<Rational>> dF = {F}, dG = {G};
    for (long i = 1; i <= r; ++i) {
        dF.push_back(dF.back().derivative());
        dG.push_back(dG.back().derivative());
    }
    for (long k = 0; k <= r; ++k) {
        // (-1)^k C(r,k) [ (degG - k)! / (degG - r)! ] [ (degF - r + k)! / (degF - r)! ] F^{(r-k)} G^{(k)}
        Rational c = Rational(binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(k)));
        Int num(1);
        for (long t = degG - k; t > degG - r; --t) num *= Int(t);
        for (long t = degF - r + k; t > degF - r; --t) num *= Int(t);
        c *= Rational(num);
        if (k % 2 != 0) c = -c;
        acc = acc + c * (dF[static_cast<std::size_t>(r - k)] * dG[static_cast<std::size_t>(k)]);
    }
    return acc;
}

// m(m-1) F'''' F - 4(m-3)(m-1) F''' F' + 3(m-3)(m-2) F''^2 for a form of
// degree m, generic in the coefficient ring (shared with the Darboux-side
// checks, which run it over jet polynomials).
template <class R>
Poly<R> fourth_transvectant_poly(const Poly<R> &F, long m) {
    if (m < 4) throw DegenerateInputError("fourth_transvectant_poly: form degree must be >= 4");
    Poly<R> F1 = F.derivative(), F2 = F1.derivative(), F3 = F2.derivative(), F4 = F3.derivative();
    auto c = [&](long v) {
        R acc = ring_zero(F.proto());
        R one = ring_one(F.proto());
        bool neg = v < 0;
        for (long i = 0; i < (neg ? -v : v); ++i) acc = acc + one;
        return neg ? -acc : acc;
    };
    return c(m * (m - 1)) * (F4 * F) + c(-4 * (m - 3) * (m - 1)) * (F3 * F1) +
           c(3 * (m - 3) * (m - 2)) * (F2 * F2);
}

// vanishes exactly on the Klein forms
inline Poly<Rational> fourth_transvectant(const BinaryForm &f) {
    if (f.degree < 4) throw DegenerateInputError("fourth_transvectant: form degree must be >= 4");
    return fourth_transvectant_poly(f.dehomogenized(), f.degree);
}

// (1/2)(f,f)^4 in the binomial convention, by the coefficient recursion
// m_r alpha_r = (1/2) sum_s p_{r,s} P_{r,s}; result degree 2(n-4).
inline BinaryForm fourth_transvectant_coeffs(const BinaryForm &f) {
    if (f.degree < 4) throw DegenerateInputError("fourth_transvectant_coeffs: form degree must be >= 4");
    long n = f.degree;
    long m = 2 * (n - 4);
    auto aa = [&](long i) { return (i < 0 || i > n) ? Rational(0) : f.a[static_cast<std::size_t>(i)]; };
    std::vector<Rational> alpha(static_cast<std::size_t>(m) + 1, Rational(0));
    for (long r = 0; r <= m; ++r) {
        Rational sum(0);
        for (long s = 0; s <= r; ++s) {
            // P_{r,s} = a_s a_{r-s+4} - 4 a_{s+1} a_{r-s+3} + 6 a_{s+2} a_{r-s+2} - 4 a_{s+3} a_{r-s+1} + a_{s+4} a_{r-s}
            Rational P = aa(s) * aa(r - s + 4) - Rational(4) * aa(s + 1) * aa(r - s + 3) +
                         Rational(6) * aa(s + 2) * aa(r - s + 2) - Rational(4) * aa(s + 3) * aa(r - s + 1) +
                         aa(s + 4) * aa(r - s);
            if (s > n - 4 || r - s > n - 4) continue; // binomial weights vanish outside
            Rational p = Rational(binomial(static_cast<unsigned long>(n - 4), static_cast<unsigned long>(s))) *
                         Rational(binomial(static_cast<unsigned long>(n - 4), static_cast<unsigned long>(r - s)));
            sum += p * P;
        }
        Rational mr = Rational(binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(r)));
        alpha[static_cast<std::size_t>(r)] = sum * Rational(1, 2) / mr;
    }
    return BinaryForm(m, alpha);
}

enum class KleinKind { degenerate_power, degenerate_power_times, tetrahedral, octahedral, icosahedral };

// the forms with identically vanishing fourth transvectant
inline BinaryForm klein_form(KleinKind kind, long k = 6) {
    auto mono_form = [](long n, long monomial_k, const Rational &c) {
        BinaryForm f = BinaryForm::zero(n);
        f.a[static_cast<std::size_t>(monomial_k)] =
            c / Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(monomial_k)));
        return f;
    };
    switch (kind) {
    case KleinKind::degenerate_power: // x1^k
        if (k < 4) throw DegenerateInputError("klein_form: need degree >= 4");
        return mono_form(k, 0, Rational(1));
    case KleinKind::degenerate_power_times: { // x1^{k-1} x2
        if (k < 5) throw DegenerateInputError("klein_form: need degree >= 5");
        return mono_form(k, 1, Rational(1));
    }
    case KleinKind::tetrahedral: { // x2 (x1^3 + x2^3)
        BinaryForm f = BinaryForm::zero(4);
        f.a[1] = Rational(1, 4); // x1^3 x2 has C(4,1) = 4
        f.a[4] = Rational(1);
        return f;
    }
    case KleinKind::octahedral: { // x1 x2 (x1^4 + x2^4)
        BinaryForm f = BinaryForm::zero(6);
        f.a[1] = Rational(1, 6);
        f.a[5] = Rational(1, 6);
        return f;
    }
    case KleinKind::icosahedral: { // x1 x2 (x1^10 - 11 x1^5 x2^5 - x2^10)
        BinaryForm f = BinaryForm::zero(12);
        f.a[1] = Rational(1, 12);
        f.a[6] = Rational(-11) / Rational(binomial(12, 6));
        f.a[11] = Rational(-1, 12);
        return f;
    }
    }
    throw DegenerateInputError("klein_form: unknown kind");
}

// Substitution of F^{(k)} = j_k(R, R', ...) F into the fourth-transvectant
// expression and exact division by F^2. The j_k are generated from
// j_1 = -n R by formal differentiation, which reproduces the classical
// substitution table. Returns the proportionality scalar against
// R''' - 12 R R'' + 18 R'^2 - (6 n^2/(n-1)) (R' - R^2)^2.
struct GeneralizedChazy {
    Rational scalar;       // reported, the quotient (result)/(target)
    bool proportional;     // exact multiple
    MvPoly result;         // the reduced differential polynomial
    MvPoly target;
    std::array<MvPoly, 5> jets; // j_0..j_4 with F^{(k)} = j_k F
};

inline MvPoly jet_derivative(const MvPoly &p, long max_order) {
    MvPoly out;
    for (long i = 0; i < max_order; ++i)
        out = out + p.derivative("R" + std::to_string(i)) * MvPoly::variable("R" + std::to_string(i + 1));
    return out;
}

// aggregated exact checks used by the CLI and the acceptance run
Report binform_suite(long cases, unsigned long seed);

inline GeneralizedChazy generalized_chazy_residue(long n) {
    if (n < 4) throw DegenerateInputError("generalized_chazy_residue: need n >= 4");
    Rational rn(n);
    MvPoly R0 = MvPoly::variable("R0"), R1 = MvPoly::variable("R1"), R2 = MvPoly::variable("R2"),
           R3 = MvPoly::variable("R3");
    GeneralizedChazy out;
    out.jets[0] = MvPoly::constant(Rational(1));
    out.jets[1] = -(rn * R0);
    for (int k = 2; k <= 4; ++k)
        out.jets[static_cast<std::size_t>(k)] =
            jet_derivative(out.jets[static_cast<std::size_t>(k - 1)], 4) +
            out.jets[static_cast<std::size_t>(k - 1)] * out.jets[1];
    const MvPoly &j1 = out.jets[1], &j2 = out.jets[2], &j3 = out.jets[3], &j4 = out.jets[4];
    out.result = Rational(n * (n - 1)) * j4 - Rational(4 * (n - 3) * (n - 1)) * (j3 * j1) +
                 Rational(3 * (n - 3) * (n - 2)) * (j2 * j2);
    MvPoly rp = R1 - R0 * R0;
    out.target = R3 - Rational(12) * R0 * R2 + Rational(18) * R1 * R1 -
                 Rational(6 * n * n) / Rational(n - 1) * (rp * rp);
    // exact proportionality: result = scalar * target
    out.proportional = false;
    out.scalar = Rational(0);
    if (!out.target.is_zero() && !out.result.is_zero()) {
        // candidate scalar from the R3 coefficients
        MvPoly q;
        bool exact = true;
        try {
            q = MvPoly::div_exact(out.result, out.target);
        } catch (const DegenerateInputError &) {
            exact = false;
        }
        if (exact && q.is_constant()) {
            out.proportional = true;
            out.scalar = q.constant_value();
        }
    }
    return out;
}

} // namespace anharmonia::binform

#endif
