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

#include "anharmonia/mobius.hpp"

#include <algorithm>
#include <deque>

#include "anharmonia/bigfloat.hpp"

namespace anharmonia {

std::string group_kind_name(GroupKind kind) {
    switch (kind) {
    case GroupKind::cyclic: return "cyclic";
    case GroupKind::dihedral: return "dihedral";
    case GroupKind::tetrahedral: return "tetrahedral";
    case GroupKind::octahedral: return "octahedral";
    case GroupKind::icosahedral: return "icosahedral";
    }
    return "?";
}

std::optional<GroupKind> parse_group_kind(const std::string &name) {
    if (name == "cyclic" || name == "cyc") return GroupKind::cyclic;
    if (name == "dihedral" || name == "dih") return GroupKind::dihedral;
    if (name == "tetrahedral" || name == "tetra" || name == "tetr") return GroupKind::tetrahedral;
    if (name == "octahedral" || name == "octa" || name == "oct") return GroupKind::octahedral;
    if (name == "icosahedral" || name == "icosa" || name == "ico") return GroupKind::icosahedral;
    return std::nullopt;
}

namespace {

std::vector<MobiusMap> enumerate_closure(const std::vector<MobiusMap> &gens, long expected_order) {
    std::vector<MobiusMap> elems;
    std::deque<MobiusMap> work;
    auto seen = [&](const MobiusMap &m) {
        return std::any_of(elems.begin(), elems.end(), [&](const MobiusMap &e) { return e == m; });
    };
    for (const auto &g : gens) {
        MobiusMap n = g.normalized();
        if (!seen(n)) {
            elems.push_back(n);
            work.push_back(n);
        }
    }
    while (!work.empty()) {
        MobiusMap cur = work.front();
        work.pop_front();
        for (const auto &g : gens) {
            MobiusMap next = (g * cur).normalized();
            if (!seen(next)) {
                elems.push_back(next);
                work.push_back(next);
                if (static_cast<long>(elems.size()) > expected_order)
                    throw ConstructionError("group closure exceeded the expected order");
            }
        }
    }
    // ensure the identity is present (generators generate it, but closure from
    // generators alone can miss it if gens exclude id and each gᵏ cycles)
    MobiusMap id = MobiusMap::identity(gens.front().a().conductor());
    if (!seen(id)) elems.push_back(id.normalized());
    return elems;
}

Poly<Cyclotomic> cpoly(long conductor, const std::string &var, std::vector<std::pair<long, Cyclotomic>> terms) {
    Poly<Cyclotomic> p(var, Cyclotomic(conductor));
    for (auto &[k, c] : terms) p = p + Poly<Cyclotomic>::monomial(var, c.conductor() == conductor ? c : c.promoted(conductor), k);
    return p;
}

} // namespace

FiniteMobiusGroup FiniteMobiusGroup::promoted(long m) const {
    FiniteMobiusGroup out;
    out.kind = kind;
    out.parameter = parameter;
    out.conductor = m;
    out.order = order;
    for (const auto &g : generators)
        out.generators.emplace_back(g.a().promoted(m), g.b().promoted(m), g.c().promoted(m), g.d().promoted(m));
    for (const auto &g : elements)
        out.elements.emplace_back(g.a().promoted(m), g.b().promoted(m), g.c().promoted(m), g.d().promoted(m));
    return out;
}

FiniteMobiusGroup group_catalog(GroupKind kind, long parameter) {
    FiniteMobiusGroup g;
    g.kind = kind;
    g.parameter = parameter;
    switch (kind) {
    case GroupKind::cyclic: {
        if (parameter < 2) throw DegenerateInputError("group_catalog: cyclic order must be >= 2");
        g.conductor = parameter;
        g.order = parameter;
        g.generators = {MobiusMap::scaling(Cyclotomic::zeta(parameter))};
        break;
    }
    case GroupKind::dihedral: {
        if (parameter < 2) throw DegenerateInputError("group_catalog: dihedral parameter must be >= 2");
        g.conductor = parameter;
        g.order = 2 * parameter;
        g.generators = {MobiusMap::scaling(Cyclotomic::zeta(parameter).promoted(parameter)),
                        MobiusMap::inversion(parameter)};
        break;
    }
    case GroupKind::tetrahedral: {
        g.conductor = 12;
        g.order = 12;
        Cyclotomic i = Cyclotomic::zeta_pow(12, 3);
        Cyclotomic one = Cyclotomic::one_of(12);
        g.generators = {MobiusMap::scaling(-one), MobiusMap::inversion(12),
                        MobiusMap(-i, -i, one, -one)};
        break;
    }
    case GroupKind::octahedral: {
        g.conductor = 12;
        g.order = 24;
        Cyclotomic i = Cyclotomic::zeta_pow(12, 3);
        Cyclotomic one = Cyclotomic::one_of(12);
        g.generators = {MobiusMap(-i, -i, one, -one), MobiusMap::scaling(-i)};
        break;
    }
    case GroupKind::icosahedral: {
        g.conductor = 20;
        g.order = 60;
        Cyclotomic xi = Cyclotomic::zeta_pow(20, 4); // primitive 5th root
        Cyclotomic sqrt5 = Cyclotomic::one_of(20) + Cyclotomic(Rational(2)) * (xi + Cyclotomic::zeta_pow(20, 16));
        Cyclotomic alpha = (Cyclotomic::zeta_pow(20, 16) - xi) / sqrt5;
        Cyclotomic beta = (Cyclotomic::zeta_pow(20, 8) - Cyclotomic::zeta_pow(20, 12)) / sqrt5;
        // the z -> -1/z reflection; z -> 1/z flips the odd part of the
        // invariant and does not generate a finite group here
        Cyclotomic one = Cyclotomic::one_of(20);
        g.generators = {MobiusMap::scaling(xi), MobiusMap(Cyclotomic(20), -one, one, Cyclotomic(20)),
                        MobiusMap(alpha, beta, beta, -alpha)};
        break;
    }
    }
    g.elements = enumerate_closure(g.generators, g.order);
    if (static_cast<long>(g.elements.size()) != g.order)
        throw ConstructionError("group_catalog: closure has order " + std::to_string(g.elements.size()) +
                                ", expected " + std::to_string(g.order));
    return g;
}

AbsoluteInvariant invariant_psi(GroupKind kind, long parameter) {
    AbsoluteInvariant inv;
    inv.kind = kind;
    inv.parameter = parameter;
    const std::string var = "z";
    switch (kind) {
    case GroupKind::cyclic: {
        if (parameter < 2) throw DegenerateInputError("invariant_psi: cyclic order must be >= 2");
        long n = parameter;
        inv.psi = cpoly(n, var, {{n, Cyclotomic::one_of(n)}});
        inv.phi = cpoly(n, var, {{0, Cyclotomic::one_of(n)}});
        inv.degree = n;
        break;
    }
    case GroupKind::dihedral: {
        if (parameter < 2) throw DegenerateInputError("invariant_psi: dihedral parameter must be >= 2");
        long m = parameter;
        inv.psi = cpoly(m, var, {{2 * m, Cyclotomic::one_of(m)}, {0, Cyclotomic::one_of(m)}});
        inv.phi = cpoly(m, var, {{m, Cyclotomic::one_of(m)}});
        inv.degree = 2 * m;
        break;
    }
    case GroupKind::tetrahedral: {
        Cyclotomic one = Cyclotomic::one_of(12);
        Cyclotomic i = Cyclotomic::zeta_pow(12, 3);
        Cyclotomic sqrt3 = Cyclotomic::zeta(12) + Cyclotomic::zeta_pow(12, 11);
        Cyclotomic two_i_s3 = Cyclotomic(Rational(2)) * i * sqrt3;
        Poly<Cyclotomic> plus = cpoly(12, var, {{4, one}, {2, two_i_s3}, {0, one}});
        Poly<Cyclotomic> minus = cpoly(12, var, {{4, one}, {2, -two_i_s3}, {0, one}});
        inv.psi = plus.pow(3);
        inv.phi = minus.pow(3);
        inv.degree = 12;
        break;
    }
    case GroupKind::octahedral: {
        Cyclotomic one = Cyclotomic::one_of(12);
        Poly<Cyclotomic> base = cpoly(12, var, {{8, one}, {4, Cyclotomic(12, Rational(14))}, {0, one}});
        inv.psi = base.pow(3);
        Poly<Cyclotomic> fourth = cpoly(12, var, {{0, one}, {4, -one}});
        inv.phi = Cyclotomic(12, Rational(108)) * (cpoly(12, var, {{4, one}}) * fourth.pow(4));
        inv.degree = 24;
        break;
    }
    case GroupKind::icosahedral: {
        Cyclotomic one = Cyclotomic::one_of(20);
        Poly<Cyclotomic> inner = cpoly(20, var,
                                       {{20, -one},
                                        {15, Cyclotomic(20, Rational(228))},
                                        {10, Cyclotomic(20, Rational(-494))},
                                        {5, Cyclotomic(20, Rational(-228))},
                                        {0, -one}});
        inv.psi = inner.pow(3);
        Poly<Cyclotomic> pentab = cpoly(20, var, {{10, one}, {5, Cyclotomic(20, Rational(11))}, {0, -one}});
        inv.phi = Cyclotomic(20, Rational(1728)) * (cpoly(20, var, {{5, one}}) * pentab.pow(5));
        inv.degree = 60;
        break;
    }
    }
    return inv;
}

Poly<Cyclotomic> mobius_compose_cleared(const Poly<Cyclotomic> &p, const MobiusMap &g, long homog_degree) {
    const std::string &var = p.var();
    Cyclotomic proto = ring_zero(p.proto());
    Poly<Cyclotomic> num = cpoly(g.a().conductor(), var, {{1, g.a()}, {0, g.b()}});
    Poly<Cyclotomic> den = cpoly(g.a().conductor(), var, {{1, g.c()}, {0, g.d()}});
    // powers of the two linear forms up to homog_degree
    std::vector<Poly<Cyclotomic>> np(static_cast<std::size_t>(homog_degree) + 1, ring_one(num));
    std::vector<Poly<Cyclotomic>> dp = np;
    for (long k = 1; k <= homog_degree; ++k) {
        np[static_cast<std::size_t>(k)] = np[static_cast<std::size_t>(k - 1)] * num;
        dp[static_cast<std::size_t>(k)] = dp[static_cast<std::size_t>(k - 1)] * den;
    }
    Poly<Cyclotomic> acc(var, proto);
    for (long k = 0; k <= p.degree(); ++k) {
        Cyclotomic ck = p.coeff(k);
        if (ck.is_zero()) continue;
        acc = acc + ck * (np[static_cast<std::size_t>(k)] * dp[static_cast<std::size_t>(homog_degree - k)]);
    }
    return acc;
}

namespace {

// scale the map so every coordinate is an algebraic integer combination
// (clears rational denominators; the invariance identity is projective)
MobiusMap cleared_denominators(const MobiusMap &g) {
    Int l(1);
    for (const Cyclotomic *e : {&g.a(), &g.b(), &g.c(), &g.d()})
        for (const auto &r : e->coords()) l = Int::div_exact(l * r.den(), Int::gcd(l, r.den()));
    Cyclotomic s(g.a().conductor(), Rational(l, Int(1)));
    return MobiusMap(g.a() * s, g.b() * s, g.c() * s, g.d() * s);
}

} // namespace

Report verify_invariance(const FiniteMobiusGroup &group, const AbsoluteInvariant &invariant) {
    if (group.kind != invariant.kind || group.parameter != invariant.parameter)
        throw IncompatibleRingError("verify_invariance: group and invariant kinds differ");
    Report rep("invariance " + group_kind_name(group.kind) +
               (group.parameter ? "(" + std::to_string(group.parameter) + ")" : ""));
    long D = invariant.degree;
    const Poly<Cyclotomic> &psi = invariant.psi, &phi = invariant.phi;
    const std::string &var = psi.var();
    long idx = 0;
    for (const auto &raw : group.elements) {
        MobiusMap g = cleared_denominators(raw);
        // shared power tables of (az+b) and (cz+d)
        Poly<Cyclotomic> num = cpoly(g.a().conductor(), var, {{1, g.a()}, {0, g.b()}});
        Poly<Cyclotomic> den = cpoly(g.a().conductor(), var, {{1, g.c()}, {0, g.d()}});
        std::vector<Poly<Cyclotomic>> np(static_cast<std::size_t>(D) + 1, ring_one(num));
        std::vector<Poly<Cyclotomic>> dp = np;
        for (long k = 1; k <= D; ++k) {
            np[static_cast<std::size_t>(k)] = np[static_cast<std::size_t>(k - 1)] * num;
            dp[static_cast<std::size_t>(k)] = dp[static_cast<std::size_t>(k - 1)] * den;
        }
        auto compose = [&](const Poly<Cyclotomic> &p) {
            Poly<Cyclotomic> acc(var, ring_zero(p.proto()));
            for (long k = 0; k <= p.degree(); ++k) {
                Cyclotomic ck = p.coeff(k);
                if (ck.is_zero()) continue;
                acc = acc + ck * (np[static_cast<std::size_t>(k)] * dp[static_cast<std::size_t>(D - k)]);
            }
            return acc;
        };
        bool ok = (compose(psi) * phi == compose(phi) * psi);
        std::string name = "element " + std::to_string(idx++);
        if (ok)
            rep.add_pass(name, "0 (exact)", "rational identity");
        else
            rep.add_fail(name, "Psi(g z) != Psi(z)", "rational identity");
    }
    return rep;
}

std::optional<Cyclotomic> try_sqrt(const Cyclotomic &v) {
    long n = v.conductor();
    if (v.is_zero()) return Cyclotomic(n);
    std::vector<Cyclotomic> units;
    for (long j = 0; j < n; ++j) units.push_back(Cyclotomic::zeta_pow(n, j));
    if (n % 4 == 0) {
        Cyclotomic i = Cyclotomic::zeta_pow(n, n / 4);
        Cyclotomic one = Cyclotomic::one_of(n);
        std::size_t base_count = units.size();
        for (std::size_t j = 0; j < base_count; ++j) {
            units.push_back((one + i) * units[j]);
            units.push_back((one - i) * units[j]);
        }
    }
    // quadratic surds available in the field
    std::vector<std::pair<Rational, Cyclotomic>> surds = {{Rational(1), Cyclotomic::one_of(n)}};
    if (n % 4 == 0) surds.push_back({Rational(-1), Cyclotomic::zeta_pow(n, n / 4)});
    if (n % 12 == 0) {
        Cyclotomic s3 = Cyclotomic::zeta_pow(n, n / 12) + Cyclotomic::zeta_pow(n, n - n / 12);
        surds.push_back({Rational(3), s3});
        if (n % 4 == 0) surds.push_back({Rational(-3), s3 * Cyclotomic::zeta_pow(n, n / 4)});
    }
    if (n % 5 == 0) {
        Cyclotomic x5 = Cyclotomic::zeta_pow(n, n / 5);
        Cyclotomic s5 = Cyclotomic::one_of(n) + Cyclotomic(Rational(2)) * (x5 + Cyclotomic::zeta_pow(n, 4 * (n / 5)));
        surds.push_back({Rational(5), s5});
        if (n % 4 == 0) surds.push_back({Rational(-5), s5 * Cyclotomic::zeta_pow(n, n / 4)});
    }
    for (const auto &u : units) {
        Cyclotomic r = v / (u * u);
        if (!r.is_rational()) continue;
        Rational rr = r.rational_value();
        for (const auto &[q, e] : surds) {
            Rational ratio = rr / q;
            if (ratio.sign() < 0) continue;
            auto [s, ok] = Rational::kth_root(ratio, 2);
            if (!ok) continue;
            Cyclotomic w = Cyclotomic(n, s) * e * u;
            if (w * w == v) return w;
        }
    }
    return std::nullopt;
}

FixedPoints fixed_points(const MobiusMap &g, long digits) {
    FixedPoints out;
    if (g.is_identity()) {
        out.whole_sphere = true;
        return out;
    }
    long n = g.a().conductor();
    // fixed points solve c x^2 + (d - a) x - b = 0
    Cyclotomic c = g.c(), dm = g.d() - g.a(), mb = -g.b();
    auto push_numeric = [&](std::complex<double> z) { out.numeric.push_back(z); };
    if (c.is_zero()) {
        out.exact = true;
        out.points.push_back(ProjPoint::infinity(n));
        push_numeric({1e308, 1e308}); // marker; callers use points for exact work
        if (!dm.is_zero()) {
            Cyclotomic fin = (-mb) / dm; // b/(d-a)... mb = -b, so -mb = b
            out.points.push_back(ProjPoint::finite(fin));
            push_numeric(cyc_embed_double(fin));
        }
        return out;
    }
    Cyclotomic disc = dm * dm - Cyclotomic(Rational(4)) * c * mb; // (d-a)^2 + 4 b c
    Cyclotomic two_c = Cyclotomic(Rational(2)) * c;
    if (auto w = try_sqrt(disc)) {
        out.exact = true;
        Cyclotomic r1 = (-dm + *w) / two_c;
        out.points.push_back(ProjPoint::finite(r1));
        push_numeric(cyc_embed_double(r1));
        if (!w->is_zero()) {
            Cyclotomic r2 = (-dm - *w) / two_c;
            out.points.push_back(ProjPoint::finite(r2));
            push_numeric(cyc_embed_double(r2));
        }
        return out;
    }
    // numeric fallback at the requested precision
    ComplexRational dmr = cyc_embed(dm, digits + 8), discr = cyc_embed(disc, digits + 8),
                    twocr = cyc_embed(two_c, digits + 8);
    ComplexRational sq = complex_sqrt_approx(discr, digits + 6);
    auto div = [&](ComplexRational a, ComplexRational b) {
        Rational n2 = b.norm2();
        ComplexRational conj{b.re, -b.im};
        ComplexRational prod = a * conj;
        return ComplexRational{prod.re / n2, prod.im / n2};
    };
    ComplexRational r1 = div(-dmr + sq, twocr), r2 = div(-dmr - sq, twocr);
    push_numeric(r1.to_complex());
    push_numeric(r2.to_complex());
    return out;
}

std::vector<ProjPoint> orbit(const ProjPoint &seed, const FiniteMobiusGroup &group) {
    std::vector<ProjPoint> pts;
    for (const auto &g : group.elements) {
        ProjPoint img = g.apply(seed);
        bool seen = std::any_of(pts.begin(), pts.end(), [&](const ProjPoint &p) { return p == img; });
        if (!seen) pts.push_back(img);
    }
    return pts;
}

Cyclotomic cross_ratio(const ProjPoint &u1, const ProjPoint &u2, const ProjPoint &u3, const ProjPoint &u4) {
    if (u1 == u2 || u3 == u4)
        throw DegenerateInputError("cross_ratio: degenerate configuration (coincident pair)");
    auto d = [](const ProjPoint &x, const ProjPoint &y) { return x.num * y.den - y.num * x.den; };
    Cyclotomic numer = d(u1, u3) * d(u2, u4);
    Cyclotomic denom = d(u2, u3) * d(u1, u4);
    if (denom.is_zero()) {
        if (numer.is_zero()) throw DegenerateInputError("cross_ratio: 0/0 configuration");
        throw DegenerateInputError("cross_ratio: infinite value (u1 = u4 or u2 = u3)");
    }
    return numer / denom;
}

Report mobius_suite(const std::vector<std::pair<GroupKind, long>> &cases) {
    Report rep("mobius");
    for (const auto &[kind, param] : cases) {
        std::string label = group_kind_name(kind) + (param ? "(" + std::to_string(param) + ")" : "");
        run_check(rep, "invariance " + label, "all elements, exact", [&, kind = kind, param = param]() {
            FiniteMobiusGroup g = group_catalog(kind, param);
            AbsoluteInvariant inv = invariant_psi(kind, param);
            Report sub = verify_invariance(g, inv);
            long fails = 0;
            for (const auto &c : sub.checks)
                if (c.status == Check::Status::fail) ++fails;
            return std::make_pair(sub.passed(), fails == 0 ? "0 (exact), " + std::to_string(sub.checks.size()) + " elements"
                                                           : std::to_string(fails) + " elements fail");
        });
    }
    return rep;
}

} // namespace anharmonia
