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

#ifndef ANHARMONIA_BIGFLOAT_HPP
#define ANHARMONIA_BIGFLOAT_HPP

#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include "anharmonia/cyclotomic.hpp"
#include "anharmonia/rational.hpp"
#include "anharmonia/util.hpp"

namespace anharmonia {

// pi as an exact rational approximation with |error| < 10^-digits,
// via Machin's formula 16 atan(1/5) - 4 atan(1/239). The partial sums are
// exact rationals and the truncation error is bounded by the first omitted
// alternating term, so the bound is rigorous.
inline Rational pi_rational(long digits) {
    long work = digits + 8;
    auto atan_inv = [&](long x) {
        Rational acc(0);
        Rational term(1, x);
        Rational x2inv = Rational(1, x) * Rational(1, x);
        long k = 0;
        Rational bound = Rational(Int(1), Int::pow(Int(10), static_cast<unsigned long>(work)));
        while (term.abs() > bound) {
            acc += (k % 2 == 0 ? term : -term) * Rational(1, 2 * k + 1);
            term *= x2inv;
            ++k;
        }
        return acc;
    };
    return Rational(16) * atan_inv(5) - Rational(4) * atan_inv(239);
}

// cos/sin of a rational angle (|theta| reduced mod 2 pi by the caller when
// large) by Taylor series with an explicit alternating tail bound.
inline std::pair<Rational, Rational> cos_sin_rational(const Rational &theta, long digits) {
    long work = digits + 8;
    Rational bound = Rational(Int(1), Int::pow(Int(10), static_cast<unsigned long>(work)));
    Rational t2 = theta * theta;
    Rational c(0), s(0);
    Rational term(1); // theta^n / n!
    long n = 0;
    while (true) {
        if (n % 4 == 0) c += term;
        else if (n % 4 == 2) c -= term;
        if (n % 2 == 1) {
            // term currently equals theta^n / n!
            if (n % 4 == 1) s += term;
            else s -= term;
        }
        ++n;
        term *= theta;
        term /= Rational(n);
        if (term.abs() < bound && theta.abs() < Rational(7)) break;
        if (n > 400) break; // angle was out of the supported range
    }
    return {c, s};
}

// Complex number with exact rational parts, used as an arbitrary-precision
// approximation carrier (values are truncated explicitly by the producers).
struct ComplexRational {
    Rational re, im;

    ComplexRational() = default;
    ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    friend ComplexRational operator+(const ComplexRational &a, const ComplexRational &b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexRational operator-(const ComplexRational &a, const ComplexRational &b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexRational operator*(const ComplexRational &a, const ComplexRational &b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    ComplexRational operator-() const { return {-re, -im}; }

    Rational norm2() const { return re * re + im * im; }

    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

    // truncate both parts to the given number of decimal digits
    ComplexRational truncated(long digits) const {
        Int scale = Int::pow(Int(10), static_cast<unsigned long>(digits));
        auto cut = [&](const Rational &x) {
            Int n = (x * Rational(scale)).num() / (x * Rational(scale)).den();
            return Rational(n, scale);
        };
        return {cut(re), cut(im)};
    }
};

// |a - b| < 10^-digits, checked exactly on the rational carrier
inline bool complex_close(const ComplexRational &a, const ComplexRational &b, long digits) {
    Rational eps = Rational(Int(1), Int::pow(Int(10), static_cast<unsigned long>(digits)));
    return (a - b).norm2() < eps * eps;
}

// nonnegative square root, |error| < 10^-digits
inline Rational rational_sqrt_approx(const Rational &x, long digits) {
    if (x.sign() < 0) throw DegenerateInputError("rational_sqrt_approx: negative input");
    Int scale = Int::pow(Int(10), static_cast<unsigned long>(digits));
    Int scaled = (x * Rational(scale) * Rational(scale)).num() / (x * Rational(scale) * Rational(scale)).den();
    Int root;
    mpz_sqrt(root.raw(), scaled.raw());
    return Rational(root, scale);
}

// principal square root of a complex rational carrier
inline ComplexRational complex_sqrt_approx(const ComplexRational &z, long digits) {
    Rational absz = rational_sqrt_approx(z.norm2(), digits + 4);
    Rational re = rational_sqrt_approx((absz + z.re) * Rational(1, 2), digits + 2);
    Rational im = rational_sqrt_approx((absz - z.re) * Rational(1, 2), digits + 2);
    if (z.im.sign() < 0) im = -im;
    return {re, im};
}

// e^{2 pi i k / n} to the requested precision
inline ComplexRational root_of_unity_approx(long k, long n, long digits) {
    k %= n;
    if (k < 0) k += n;
    Rational pi = pi_rational(digits + 10);
    // reduce angle to [-pi, pi] for fast Taylor convergence
    Rational theta = Rational(2 * k, n) * pi;
    if (theta > pi) theta -= Rational(2) * pi;
    auto [c, s] = cos_sin_rational(theta, digits + 6);
    return ComplexRational(c, s).truncated(digits + 4);
}

// Embedding Q(zeta_N) -> C sending zeta_N to e^{2 pi i / N}; the result
// carries |error| < 10^-digits.
inline ComplexRational cyc_embed(const Cyclotomic &z, long digits) {
    if (digits < 1) throw DegenerateInputError("cyc_embed: precision must be >= 1");
    long n = z.conductor();
    ComplexRational acc;
    for (std::size_t j = 0; j < z.coords().size(); ++j) {
        const Rational &c = z.coords()[j];
        if (c.is_zero()) continue;
        ComplexRational w = root_of_unity_approx(static_cast<long>(j), n, digits + 6);
        acc = acc + ComplexRational(c * w.re, c * w.im);
    }
    return acc.truncated(digits + 2);
}

inline std::complex<double> cyc_embed_double(const Cyclotomic &z) {
    constexpr double two_pi = 6.283185307179586476925286766559;
    long n = z.conductor();
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t j = 0; j < z.coords().size(); ++j) {
        const Rational &c = z.coords()[j];
        if (c.is_zero()) continue;
        double ang = two_pi * static_cast<double>(j) / static_cast<double>(n);
        acc += c.to_double() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

} // namespace anharmonia

#endif
