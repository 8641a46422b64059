// Acceptance battery: one line per criterion, every order and tolerance
// pinned in code. Exit status 0 only if every criterion passes.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>

#include "anharmonia/anharmonic.hpp"
#include "anharmonia/binform.hpp"
#include "anharmonia/darboux.hpp"
#include "anharmonia/halphen.hpp"
#include "anharmonia/mobius.hpp"
#include "anharmonia/numeric.hpp"
#include "anharmonia/qseries.hpp"
#include "anharmonia/schwarz.hpp"

using namespace anharmonia;

namespace {

int failures = 0;

void criterion(int number, const std::string &label, bool pass, const std::string &detail, double secs) {
    std::printf("%-4s criterion %2d: %-58s %s  [%.2fs]\n", pass ? "PASS" : "FAIL", number, label.c_str(),
                detail.c_str(), secs);
    if (!pass) ++failures;
}

template <class Fn>
void run(int number, const std::string &label, Fn fn) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        auto [ok, d] = fn();
        pass = ok;
        detail = d;
    } catch (const std::exception &e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    criterion(number, label, pass, detail, secs);
}

std::string count_detail(const Report &rep) {
    long fails = 0;
    for (const auto &c : rep.checks)
        if (c.status == Check::Status::fail) ++fails;
    if (fails == 0) return "all " + std::to_string(rep.checks.size()) + " checks exact";
    std::string first;
    for (const auto &c : rep.checks)
        if (c.status == Check::Status::fail) {
            first = c.name;
            break;
        }
    return std::to_string(fails) + " failed, first: " + first;
}

} // namespace

int main() {
    run(1, "Eisenstein coefficients (E2 window exact, E4/E6 to order 64)", [] {
        FracSeries e2 = qseries::eisenstein(2, 5);
        bool ok = e2.coeff_q(0) == Rational(1) && e2.coeff_q(1) == Rational(-24) && e2.coeff_q(2) == Rational(-72) &&
                  e2.coeff_q(3) == Rational(-96) && e2.coeff_q(4) == Rational(-168);
        // divisor-sum route against the Lambert-series route, exact to 64
        for (int weight : {4, 6}) {
            long mult = weight == 4 ? 240 : -504;
            int kk = weight == 4 ? 3 : 5;
            std::vector<Rational> c(64, Rational(0));
            c[0] = Rational(1);
            for (long n = 1; n < 64; ++n) {
                Rational nk = Rational(Int::pow(Int(n), static_cast<unsigned long>(kk)));
                for (long m = n; m < 64; m += n) c[static_cast<std::size_t>(m)] += Rational(mult) * nk;
            }
            ok = ok && FracSeries(1, 0, 64, std::move(c)) == qseries::eisenstein(weight, 64);
        }
        return std::make_pair(ok, std::string(ok ? "exact, no tolerance" : "mismatch"));
    });

    run(2, "weight 2/4/6 closure under D, order 64, under one second", [] {
        auto t0 = std::chrono::steady_clock::now();
        Report rep = halphen::verify_ramanujan(64);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream os;
        os << count_detail(rep) << ", " << secs << "s";
        return std::make_pair(rep.passed() && secs < 1.0, os.str());
    });

    run(3, "half-period Vieta relations, order 32, ramification 2", [] {
        Report rep = halphen::verify_vieta(32);
        return std::make_pair(rep.passed(), count_detail(rep));
    });

    run(4, "half-period quadratic equation in hatted form, order 32", [] {
        Report rep = halphen::verify_e_riccati(32);
        return std::make_pair(rep.passed(), count_detail(rep));
    });

    run(5, "third-order equation for E2/6 under q d/dq, order 40", [] {
        Report rep = halphen::verify_chazy_series(40);
        return std::make_pair(rep.passed(), count_detail(rep));
    });

    run(6, "hatted pair-sum system order 32; lambda route order 24", [] {
        Report rep = halphen::verify_hatted_halphen(32);
        Report lam = halphen::lambda_parameterization_check(24);
        bool ok = rep.passed() && lam.passed();
        return std::make_pair(ok, count_detail(rep) + "; " + count_detail(lam));
    });

    run(7, "symbolic cubic-roots system, pair-sum equivalence, closed forms", [] {
        Report a = halphen::cubic_dh_identity();
        Report b = halphen::s4_s3_equivalence();
        Report c = halphen::degenerate_solutions_check();
        bool ok = a.passed() && b.passed() && c.passed();
        return std::make_pair(ok, count_detail(a) + "; " + count_detail(b) + "; " + count_detail(c));
    });

    run(8, "invariance of the absolute invariants, every group element", [] {
        Report rep = mobius_suite({{GroupKind::cyclic, 4},
                                   {GroupKind::cyclic, 5},
                                   {GroupKind::cyclic, 6},
                                   {GroupKind::dihedral, 2},
                                   {GroupKind::dihedral, 3},
                                   {GroupKind::dihedral, 4},
                                   {GroupKind::dihedral, 5},
                                   {GroupKind::tetrahedral, 0},
                                   {GroupKind::octahedral, 0},
                                   {GroupKind::icosahedral, 0}});
        return std::make_pair(rep.passed(), count_detail(rep));
    });

    run(9, "algebraic-solution pipeline: cyclic 4..7 and dihedral(3) p=2", [] {
        for (long n = 4; n <= 7; ++n) {
            auto cs = anharmonic::cyclic_symbolic(n);
            if (!(cs.homography_ok && cs.riccati_ok && cs.sum_zero))
                return std::make_pair(false, "cyclic degree " + std::to_string(n) + " failed");
        }
        Report rep = anharmonic::anharmonic_case_report(GroupKind::dihedral, 3, 3, 2);
        return std::make_pair(rep.passed(), "cyclic exact over Q(K); dihedral(3): " + count_detail(rep));
    });

    run(10, "admissible degree rows for all five families", [] {
        using anharmonic::DegreeInfo;
        DegreeInfo tet = anharmonic::degree_table(GroupKind::tetrahedral);
        DegreeInfo oct = anharmonic::degree_table(GroupKind::octahedral);
        DegreeInfo ico = anharmonic::degree_table(GroupKind::icosahedral);
        DegreeInfo cyc = anharmonic::degree_table(GroupKind::cyclic);
        DegreeInfo dih = anharmonic::degree_table(GroupKind::dihedral);
        bool ok = tet.p_gt1 == std::vector<std::pair<long, long>>{{4, 3}, {6, 2}} &&
                  oct.p_gt1 == std::vector<std::pair<long, long>>{{12, 2}, {8, 3}, {6, 4}} &&
                  ico.p_gt1 == std::vector<std::pair<long, long>>{{30, 2}, {20, 3}, {5, 12}} &&
                  cyc.p_gt1.empty() && dih.dihedral_p2 && tet.p1_n == 12 && oct.p1_n == 24 && ico.p1_n == 60 &&
                  cyc.p1 == DegreeInfo::P1::any_n_at_least_4 && dih.p1 == DegreeInfo::P1::any_even_n_at_least_4;
        return std::make_pair(ok, std::string(ok ? "rows as analyzed" : "mismatch"));
    });

    run(11, "transvectants: dual routes, recursion, special forms, reduction", [] {
        Report rep = binform::binform_suite(100, 0);
        return std::make_pair(rep.passed(), count_detail(rep));
    });

    run(12, "eigenpolynomial batteries n = 4, 6, 3 and the n = 2 flag", [] {
        Report r4 = darboux::darboux_suite(4);
        Report r6 = darboux::darboux_suite(6);
        Report r3 = darboux::darboux_suite(3);
        Report r2 = darboux::darboux_suite(2);
        bool ok = r4.passed() && r6.passed() && r3.passed() && r2.passed();
        auto fi = darboux::verify_first_integral_relations(4);
        ok = ok && fi.a_value == Rational(-8) && fi.alpha == Rational(-16, 3) && fi.k == 3;
        return std::make_pair(ok, count_detail(r4) + "; n=6 " + count_detail(r6) + "; n=3 " + count_detail(r3) +
                                      "; n=2 " + count_detail(r2));
    });

    run(13, "numeric cross-checks: RK4 order, drifts, negative controls", [] {
        Report rep = numeric::numeric_suite(20000);
        return std::make_pair(rep.passed(), count_detail(rep));
    });

    run(14, "derivative-change bookkeeping: exact pullback, orders, cocycle", [] {
        Report rep = schwarz::schwarz_suite(50, 0);
        return std::make_pair(rep.passed(), count_detail(rep));
    });

    if (failures == 0)
        std::printf("acceptance: all 14 criteria pass\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
