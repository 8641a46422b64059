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

#include "anharmonia/binform.hpp"
#include "anharmonia/report.hpp"

namespace anharmonia::binform {

namespace {

BinaryForm random_form(Rng &rng, long n) {
    std::vector<Rational> a;
    for (long i = 0; i <= n; ++i) a.emplace_back(rng.range(-6, 6), rng.range(1, 3));
    return BinaryForm(n, a);
}

} // namespace

Report binform_suite(long cases, unsigned long seed) {
    Report rep("transvectants");

    run_check(rep, "omega process vs inhomogeneous formula", std::to_string(cases) + " random pairs, exact", [&]() {
        Rng rng(seed + 11);
        for (long cs = 0; cs < cases; ++cs) {
            long m = rng.range(2, 8), n = rng.range(2, 8);
            long r = rng.range(0, std::min({m, n, 4L}));
            BinaryForm Q = random_form(rng, m), R = random_form(rng, n);
            if (omega_transvectant(Q, R, r).dehomogenized() !=
                transvectant_inhom(Q.dehomogenized(), m, R.dehomogenized(), n, r))
                return std::make_pair(false, "mismatch at case " + std::to_string(cs));
        }
        return std::make_pair(true, std::string("0 (exact)"));
    });

    run_check(rep, "coefficient recursion equals half the normalized fourth transvectant", "exact", [&]() {
        Rng rng(seed + 13);
        for (int cs = 0; cs < 25; ++cs) {
            long n = rng.range(4, 8);
            BinaryForm f = random_form(rng, n);
            BinaryForm alpha = fourth_transvectant_coeffs(f);
            BinaryForm ff4 = omega_transvectant_scaled(f, f, 4);
            if (alpha.degree != ff4.degree) return std::make_pair(false, std::string("degree mismatch"));
            for (std::size_t i = 0; i < alpha.a.size(); ++i)
                if (alpha.a[i] * Rational(2) != ff4.a[i]) return std::make_pair(false, std::string("coefficient mismatch"));
        }
        return std::make_pair(true, std::string("0 (exact)"));
    });

    run_check(rep, "special forms annihilate the fourth transvectant", "five forms, exact", [&]() {
        bool ok = fourth_transvectant(klein_form(KleinKind::degenerate_power, 8)).is_zero_poly() &&
                  fourth_transvectant(klein_form(KleinKind::degenerate_power_times, 8)).is_zero_poly() &&
                  fourth_transvectant(klein_form(KleinKind::tetrahedral)).is_zero_poly() &&
                  fourth_transvectant(klein_form(KleinKind::octahedral)).is_zero_poly() &&
                  fourth_transvectant(klein_form(KleinKind::icosahedral)).is_zero_poly();
        return std::make_pair(ok, ok ? std::string("0 (exact)") : std::string("a special form failed"));
    });

    run_check(rep, "generic forms do not annihilate it", "negative control", [&]() {
        Rng rng(seed + 17);
        for (int cs = 0; cs < 10; ++cs)
            if (fourth_transvectant(random_form(rng, 5)).is_zero_poly())
                return std::make_pair(false, std::string("unexpected vanishing"));
        return std::make_pair(true, std::string("nonzero as expected"));
    });

    run_check(rep, "third-order reduction proportionality", "n = 5, 6, exact", [&]() {
        auto g5 = generalized_chazy_residue(5);
        auto g6 = generalized_chazy_residue(6);
        bool ok = g5.proportional && g6.proportional;
        std::string detail = "scalars " + g5.scalar.str() + ", " + g6.scalar.str();
        return std::make_pair(ok, ok ? detail : std::string("not proportional"));
    });

    return rep;
}

} // namespace anharmonia::binform
