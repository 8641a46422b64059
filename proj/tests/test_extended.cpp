#include "doctest.h"

#include "anharmonia/anharmonic.hpp"

using namespace anharmonia;
using namespace anharmonia::anharmonic;

// Heavier exact constructions; this suite trades runtime (about a minute)
// for breadth over the N = 24 cases.

TEST_CASE("octahedral (8,3): trace-route elimination end-to-end") {
    Report rep = anharmonic_case_report(GroupKind::octahedral, 0, 8, 3);
    for (const auto &c : rep.checks) {
        INFO(c.name, " -> ", c.residual);
        CHECK(c.status == Check::Status::pass);
    }
}

TEST_CASE("dihedral(6) with both stabilizer classes") {
    CHECK(anharmonic_case_report(GroupKind::dihedral, 6, 6, 2).passed());
}
