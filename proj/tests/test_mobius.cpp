#include "doctest.h"

#include <complex>

#include "anharmonia/bigfloat.hpp"
#include "anharmonia/mobius.hpp"
#include "anharmonia/util.hpp"

using namespace anharmonia;

TEST_CASE("group catalog orders match the classification") {
    CHECK(group_catalog(GroupKind::cyclic, 4).order == 4);
    CHECK(group_catalog(GroupKind::dihedral, 3).elements.size() == 6);
    CHECK(group_catalog(GroupKind::tetrahedral).elements.size() == 12);
    CHECK(group_catalog(GroupKind::octahedral).elements.size() == 24);
    CHECK(group_catalog(GroupKind::icosahedral).elements.size() == 60);
    CHECK_THROWS_AS(group_catalog(GroupKind::cyclic, 1), DegenerateInputError);
    CHECK_THROWS_AS(group_catalog(GroupKind::dihedral, 0), DegenerateInputError);
}

TEST_CASE("catalog invariants have the stated shapes") {
    AbsoluteInvariant cyc = invariant_psi(GroupKind::cyclic, 5);
    CHECK(cyc.psi.degree() == 5);
    CHECK(cyc.phi.degree() == 0);

    AbsoluteInvariant dih = invariant_psi(GroupKind::dihedral, 4);
    CHECK(dih.psi.degree() == 8);
    CHECK(dih.phi.degree() == 4);
    CHECK(dih.degree == 8);

    AbsoluteInvariant oct = invariant_psi(GroupKind::octahedral);
    CHECK(oct.psi.degree() == 24);
    CHECK(oct.phi.degree() == 20);
    CHECK(oct.phi.coeff(4) == Cyclotomic(12, Rational(108)));
    CHECK(oct.psi.coeff(0) == Cyclotomic::one_of(12));

    AbsoluteInvariant ico = invariant_psi(GroupKind::icosahedral);
    CHECK(ico.psi.degree() == 60);
    CHECK(ico.phi.degree() == 55);
    CHECK(ico.degree == 60);
}

TEST_CASE("the three-fold tetrahedral generator really has order three") {
    FiniteMobiusGroup g = group_catalog(GroupKind::tetrahedral);
    const MobiusMap &theta1 = g.generators[2];
    MobiusMap cube = theta1 * theta1 * theta1;
    CHECK(cube == MobiusMap::identity(12));
    CHECK(theta1 * theta1 != MobiusMap::identity(12));
}

TEST_CASE("invariance of the absolute invariants, small families") {
    for (auto [kind, param] : std::vector<std::pair<GroupKind, long>>{{GroupKind::cyclic, 4},
                                                                      {GroupKind::dihedral, 3},
                                                                      {GroupKind::dihedral, 2},
                                                                      {GroupKind::tetrahedral, 0}}) {
        FiniteMobiusGroup g = group_catalog(kind, param);
        AbsoluteInvariant inv = invariant_psi(kind, param);
        Report rep = verify_invariance(g, inv);
        CHECK(rep.passed());
        CHECK(rep.checks.size() == static_cast<std::size_t>(g.order));
    }
}

TEST_CASE("invariance for the octahedral group, every element") {
    FiniteMobiusGroup g = group_catalog(GroupKind::octahedral);
    Report rep = verify_invariance(g, invariant_psi(GroupKind::octahedral));
    CHECK(rep.passed());
    CHECK(rep.checks.size() == 24);
}

TEST_CASE("fixed points of the catalog forms") {
    // z -> 1/z fixes +-1
    FixedPoints inv = fixed_points(MobiusMap::inversion(4));
    CHECK(inv.exact);
    REQUIRE(inv.points.size() == 2);
    Cyclotomic one = Cyclotomic::one_of(4);
    bool has_one = inv.points[0] == ProjPoint::finite(one) || inv.points[1] == ProjPoint::finite(one);
    bool has_minus = inv.points[0] == ProjPoint::finite(-one) || inv.points[1] == ProjPoint::finite(-one);
    CHECK(has_one);
    CHECK(has_minus);

    // z -> xi z fixes 0 and infinity
    FixedPoints rot = fixed_points(MobiusMap::scaling(Cyclotomic::zeta(5)));
    CHECK(rot.exact);
    REQUIRE(rot.points.size() == 2);
    CHECK((rot.points[0].is_infinity() || rot.points[1].is_infinity()));

    // identity: the whole sphere
    CHECK(fixed_points(MobiusMap::identity(3)).whole_sphere);
}

TEST_CASE("fixed points of the tetrahedral three-fold map, exact and to twenty digits") {
    FiniteMobiusGroup g = group_catalog(GroupKind::tetrahedral);
    const MobiusMap &theta1 = g.generators[2];
    FixedPoints fp = fixed_points(theta1, 20);
    CHECK(fp.exact);
    REQUIRE(fp.points.size() == 2);
    for (const auto &p : fp.points) {
        // the point satisfies c z^2 + (d-a) z - b = 0; check at 25-digit precision
        Cyclotomic z = p.value();
        Cyclotomic resid = theta1.c() * z * z + (theta1.d() - theta1.a()) * z - theta1.b();
        CHECK(resid.is_zero());
        ComplexRational ze = cyc_embed(z, 25);
        ComplexRational lhs = cyc_embed(theta1.c(), 25) * ze * ze +
                              cyc_embed(theta1.d() - theta1.a(), 25) * ze - cyc_embed(theta1.b(), 25);
        CHECK(complex_close(lhs, ComplexRational(Rational(0), Rational(0)), 20));
        // fixed under the map itself
        CHECK(theta1.apply(p) == p);
    }
}

TEST_CASE("orbits and the orbit-stabilizer relation") {
    FiniteMobiusGroup c4 = group_catalog(GroupKind::cyclic, 4);
    auto orb = orbit(ProjPoint::finite(Cyclotomic::one_of(4)), c4);
    CHECK(orb.size() == 4);

    FiniteMobiusGroup d3 = group_catalog(GroupKind::dihedral, 3);
    auto orb1 = orbit(ProjPoint::finite(Cyclotomic::one_of(3)), d3); // fixed point of 1/z
    CHECK(orb1.size() == 3);

    auto generic = orbit(ProjPoint::finite(Cyclotomic(3, Rational(2))), d3);
    CHECK(generic.size() == 6);

    // orbit-stabilizer on sampled points
    for (const ProjPoint &p : {ProjPoint::finite(Cyclotomic::one_of(3)), ProjPoint::finite(Cyclotomic(3, Rational(2))),
                               ProjPoint::infinity(3)}) {
        long stab = 0;
        for (const auto &g : d3.elements)
            if (g.apply(p) == p) ++stab;
        CHECK(static_cast<long>(orbit(p, d3).size()) * stab == d3.order);
    }

    FiniteMobiusGroup tet = group_catalog(GroupKind::tetrahedral);
    CHECK(orbit(ProjPoint::finite(Cyclotomic(12, Rational(2))), tet).size() == 12);
}

TEST_CASE("cross-ratio convention, degeneracy, invariance") {
    auto fin = [](long v) { return ProjPoint::finite(Cyclotomic(4, Rational(v))); };
    // (0, 1, inf, -1) -> 2 under the stated convention
    Cyclotomic cr = cross_ratio(fin(0), fin(1), ProjPoint::infinity(4), fin(-1));
    CHECK(cr == Cyclotomic(4, Rational(2)));

    CHECK_THROWS_AS(cross_ratio(fin(1), fin(2), fin(3), fin(3)), DegenerateInputError);

    // invariance under z -> 1/z and under random maps
    MobiusMap inv = MobiusMap::inversion(4);
    Cyclotomic cr2 = cross_ratio(inv.apply(fin(3)), inv.apply(fin(1)), inv.apply(fin(5)), inv.apply(fin(-1)));
    CHECK(cr2 == cross_ratio(fin(3), fin(1), fin(5), fin(-1)));

    Rng rng(17);
    for (int cs = 0; cs < 10; ++cs) {
        Cyclotomic a(12, {Rational(rng.range(-3, 3)), Rational(rng.range(-3, 3)), Rational(0), Rational(0)});
        Cyclotomic b(12, {Rational(rng.range(-3, 3)), Rational(0), Rational(rng.range(-3, 3)), Rational(0)});
        Cyclotomic c = Cyclotomic(12, Rational(rng.range(-3, 3)));
        Cyclotomic d = Cyclotomic::one_of(12);
        if ((a * d - b * c).is_zero()) continue;
        MobiusMap g(a, b, c, d);
        ProjPoint u1 = ProjPoint::finite(Cyclotomic(12, Rational(rng.range(2, 5))));
        ProjPoint u2 = ProjPoint::finite(Cyclotomic(12, Rational(rng.range(6, 9))));
        ProjPoint u3 = ProjPoint::finite(Cyclotomic(12, Rational(rng.range(10, 13))));
        ProjPoint u4 = ProjPoint::finite(Cyclotomic(12, Rational(rng.range(14, 17))));
        CHECK(cross_ratio(g.apply(u1), g.apply(u2), g.apply(u3), g.apply(u4)) == cross_ratio(u1, u2, u3, u4));
    }
}
