#include "doctest.h"

#include "anharmonia/schwarz.hpp"

using namespace anharmonia;
using namespace anharmonia::schwarz;

TEST_CASE("full schwarz suite with fifty cocycle pairs") {
    Report rep = schwarz_suite(50, 0);
    for (const auto &c : rep.checks) {
        INFO(c.name, ": ", c.residual);
        CHECK(c.status == Check::Status::pass);
    }
}

TEST_CASE("hypergeometric potential shapes") {
    // degenerate exponents annihilate the potential
    CHECK(hypergeom_potential(Rational(1), Rational(1), Rational(1)).is_zero());
    // the n = 4 triple
    auto trip = hypergeom_exponents_for(4);
    CHECK(trip[0] == Rational(1, 3));
    CHECK(trip[1] == Rational(1, 3));
    CHECK(trip[2] == Rational(1, 2));
    MvFrac q = hypergeom_potential(trip[0], trip[1], trip[2]);
    CHECK_FALSE(q.is_zero());
    // double poles only at s = 0 and s = 1: clearing s^2 (1-s)^2 leaves a polynomial
    MvFrac s = MvFrac::variable("s");
    MvFrac one(Rational(1));
    MvFrac cleared = q * (s * s) * ((one - s) * (one - s));
    bool polynomial = true;
    try {
        MvPoly::div_exact(cleared.num(), cleared.den());
    } catch (const DegenerateInputError &) {
        polynomial = false;
    }
    CHECK(polynomial);
}

TEST_CASE("hypergeometric equation and schwarzian target constructors") {
    auto eq = hypergeom_equation(Rational(1, 3), Rational(1, 3), Rational(1, 2));
    CHECK_FALSE(eq.p_coeff.is_zero());
    CHECK_FALSE(eq.q_coeff.is_zero());
    MvFrac target = schwarzian_target(Rational(1, 3), Rational(1, 3), Rational(1, 2));
    CHECK_FALSE(target.is_zero());
}

TEST_CASE("exponent data k-values undefined at zero") {
    ExponentData e = exponent_data(Rational(1, 2), Rational(1, 2), Rational(1));
    CHECK_FALSE(e.kinf.has_value()); // b - a = 0
    CHECK(e.mu0.is_zero());          // 1 - c = 0
    CHECK_FALSE(e.k0.has_value());
}
