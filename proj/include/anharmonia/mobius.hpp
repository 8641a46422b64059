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

#ifndef ANHARMONIA_MOBIUS_HPP
#define ANHARMONIA_MOBIUS_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "anharmonia/cyclotomic.hpp"
#include "anharmonia/poly.hpp"
#include "anharmonia/ratfun.hpp"
#include "anharmonia/report.hpp"
#include "anharmonia/util.hpp"

namespace anharmonia {

// Point of the projective line over a cyclotomic field, stored as a
// (num : den) pair; den = 0 is the point at infinity.
struct ProjPoint {
    Cyclotomic num, den;

    ProjPoint() : num(Cyclotomic::one_of(1)), den(Cyclotomic::one_of(1)) {}
    ProjPoint(Cyclotomic n, Cyclotomic d) : num(std::move(n)), den(std::move(d)) {
        if (num.is_zero() && den.is_zero())
            throw DegenerateInputError("ProjPoint: (0:0) is not a point");
    }
    static ProjPoint finite(const Cyclotomic &v) { return ProjPoint(v, Cyclotomic::one_of(std::max(1L, v.conductor()))); }
    static ProjPoint infinity(long conductor = 1) {
        return ProjPoint(Cyclotomic::one_of(conductor), Cyclotomic(conductor));
    }

    bool is_infinity() const { return den.is_zero(); }
    Cyclotomic value() const {
        if (is_infinity()) throw DegenerateInputError("ProjPoint: value of the point at infinity");
        return num / den;
    }

    friend bool operator==(const ProjPoint &a, const ProjPoint &b) {
        return (a.num * b.den - b.num * a.den).is_zero();
    }
    friend bool operator!=(const ProjPoint &a, const ProjPoint &b) { return !(a == b); }

    std::string str() const { return is_infinity() ? "inf" : value().str(); }
};

// Fractional linear map z -> (a z + b)/(c z + d), ad - bc != 0, over a
// cyclotomic field. Equality and hashing use the projective normalization
// (first nonzero entry in reading order scaled to 1).
class MobiusMap {
  public:
    MobiusMap(Cyclotomic a, Cyclotomic b, Cyclotomic c, Cyclotomic d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
        if ((a_ * d_ - b_ * c_).is_zero()) throw DegenerateInputError("MobiusMap: vanishing determinant");
    }

    static MobiusMap identity(long conductor) {
        Cyclotomic one = Cyclotomic::one_of(conductor);
        return MobiusMap(one, Cyclotomic(conductor), Cyclotomic(conductor), one);
    }
    // z -> s z
    static MobiusMap scaling(const Cyclotomic &s) {
        long n = s.conductor();
        return MobiusMap(s, Cyclotomic(n), Cyclotomic(n), Cyclotomic::one_of(n));
    }
    // z -> 1/z
    static MobiusMap inversion(long conductor) {
        Cyclotomic one = Cyclotomic::one_of(conductor);
        return MobiusMap(Cyclotomic(conductor), one, one, Cyclotomic(conductor));
    }

    const Cyclotomic &a() const { return a_; }
    const Cyclotomic &b() const { return b_; }
    const Cyclotomic &c() const { return c_; }
    const Cyclotomic &d() const { return d_; }

    bool is_identity() const {
        return b_.is_zero() && c_.is_zero() && (a_ - d_).is_zero();
    }

    MobiusMap normalized() const {
        const Cyclotomic *lead = nullptr;
        for (const Cyclotomic *e : {&a_, &b_, &c_, &d_})
            if (!e->is_zero()) {
                lead = e;
                break;
            }
        Cyclotomic inv = lead->inv();
        return MobiusMap(a_ * inv, b_ * inv, c_ * inv, d_ * inv);
    }

    ProjPoint apply(const ProjPoint &p) const {
        return ProjPoint(a_ * p.num + b_ * p.den, c_ * p.num + d_ * p.den);
    }
    Cyclotomic apply_finite(const Cyclotomic &z) const { return apply(ProjPoint::finite(z)).value(); }

    friend MobiusMap operator*(const MobiusMap &f, const MobiusMap &g) { // composition f(g(z))
        return MobiusMap(f.a_ * g.a_ + f.b_ * g.c_, f.a_ * g.b_ + f.b_ * g.d_,
                         f.c_ * g.a_ + f.d_ * g.c_, f.c_ * g.b_ + f.d_ * g.d_);
    }

    MobiusMap inverse() const { return MobiusMap(d_, -b_, -c_, a_); }

    friend bool operator==(const MobiusMap &f, const MobiusMap &g) {
        MobiusMap x = f.normalized(), y = g.normalized();
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const MobiusMap &f, const MobiusMap &g) { return !(f == g); }

    std::size_t hash() const {
        MobiusMap n = normalized();
        std::size_t h = 0;
        for (const Cyclotomic *e : {&n.a_, &n.b_, &n.c_, &n.d_}) h = h * 1099511628211ULL ^ e->hash();
        return h;
    }

    std::string str() const {
        return "(" + a_.str() + ")z + (" + b_.str() + ") / (" + c_.str() + ")z + (" + d_.str() + ")";
    }

  private:
    Cyclotomic a_, b_, c_, d_;
};

enum class GroupKind { cyclic, dihedral, tetrahedral, octahedral, icosahedral };

std::string group_kind_name(GroupKind kind);
std::optional<GroupKind> parse_group_kind(const std::string &name);

// Generator catalog of one of the five finite families, with the element
// list enumerated by closure under composition.
struct FiniteMobiusGroup {
    GroupKind kind;
    long parameter = 0; // n for cyclic, m for dihedral
    long conductor = 1;
    std::vector<MobiusMap> generators;
    std::vector<MobiusMap> elements;
    long order = 0;

    // promote every entry into Q(zeta_M); used when seeds need a bigger field
    FiniteMobiusGroup promoted(long conductor_m) const;
};

// Absolute invariant psi/phi of the group action; degree (as a map) equals
// the group order.
struct AbsoluteInvariant {
    GroupKind kind;
    long parameter = 0;
    Poly<Cyclotomic> psi, phi;
    long degree = 0;

    RatFun<Cyclotomic> as_ratfun() const { return RatFun<Cyclotomic>(psi, phi); }
};

FiniteMobiusGroup group_catalog(GroupKind kind, long parameter = 0);
AbsoluteInvariant invariant_psi(GroupKind kind, long parameter = 0);

// numerator of Psi(g z) after clearing (c z + d)^D, D = max(deg psi, deg phi)
Poly<Cyclotomic> mobius_compose_cleared(const Poly<Cyclotomic> &p, const MobiusMap &g, long homog_degree);

// exact check that Psi(g z) = Psi(z) for every group element
Report verify_invariance(const FiniteMobiusGroup &group, const AbsoluteInvariant &invariant);

// Fixed points of a map: either the whole sphere (identity), or one/two
// points, exact when the discriminant has a square root in the field and
// numeric (to `digits` decimals) otherwise.
struct FixedPoints {
    bool whole_sphere = false;
    bool exact = false;
    std::vector<ProjPoint> points;                        // when exact
    std::vector<std::complex<double>> numeric;            // always filled for non-identity
};
FixedPoints fixed_points(const MobiusMap &g, long digits = 20);

// attempt an exact square root in the field of v (heuristic forms s*u with
// u from a small unit catalog and s rational or a rational multiple of a
// quadratic surd known to live in the field)
std::optional<Cyclotomic> try_sqrt(const Cyclotomic &v);

std::vector<ProjPoint> orbit(const ProjPoint &seed, const FiniteMobiusGroup &group);

// standard Mobius-invariant ratio (u1-u3)(u2-u4) / ((u2-u3)(u1-u4));
// throws when the configuration is degenerate
Cyclotomic cross_ratio(const ProjPoint &u1, const ProjPoint &u2, const ProjPoint &u3, const ProjPoint &u4);

// cross-ratio over any field type (used with rational functions)
template <class F>
F cross_ratio_field(const F &u1, const F &u2, const F &u3, const F &u4) {
    return ((u1 - u3) * (u2 - u4)) / ((u2 - u3) * (u1 - u4));
}

Report mobius_suite(const std::vector<std::pair<GroupKind, long>> &cases);

} // namespace anharmonia

#endif
