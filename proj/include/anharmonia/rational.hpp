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

#ifndef ANHARMONIA_RATIONAL_HPP
#define ANHARMONIA_RATIONAL_HPP

#include <gmp.h>

#include <iosfwd>
#include <ostream>
#include <string>
#include <utility>

#include "anharmonia/bigint.hpp"
#include "anharmonia/util.hpp"

namespace anharmonia {

// Exact rational number, always canonical: gcd(num, den) = 1, den > 0.
class Rational {
  public:
    Rational() { mpq_init(q_); }
    Rational(long v) { // NOLINT: implicit by design
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    Rational(long num, long den) {
        if (den == 0) throw DegenerateInputError("Rational: zero denominator");
        mpq_init(q_);
        mpq_set_si(q_, num, 1);
        mpq_t d;
        mpq_init(d);
        mpq_set_si(d, den, 1);
        mpq_div(q_, q_, d);
        mpq_clear(d);
    }
    Rational(const Int &num, const Int &den) {
        if (den.is_zero()) throw DegenerateInputError("Rational: zero denominator");
        mpq_init(q_);
        mpz_set(mpq_numref(q_), num.raw());
        mpz_set(mpq_denref(q_), den.raw());
        mpq_canonicalize(q_);
    }
    explicit Rational(const Int &num) {
        mpq_init(q_);
        mpz_set(mpq_numref(q_), num.raw());
    }
    // parses "p", "p/q", with optional sign
    explicit Rational(const std::string &s) {
        mpq_init(q_);
        if (mpq_set_str(q_, s.c_str(), 10) != 0 || mpz_sgn(mpq_denref(q_)) == 0) {
            mpq_clear(q_);
            throw DegenerateInputError("Rational: unparsable literal '" + s + "'");
        }
        mpq_canonicalize(q_);
    }
    Rational(const Rational &o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational &&o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational &operator=(const Rational &o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational &operator=(Rational &&o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    friend Rational operator+(const Rational &a, const Rational &b) {
        Rational r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator-(const Rational &a, const Rational &b) {
        Rational r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator*(const Rational &a, const Rational &b) {
        Rational r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator/(const Rational &a, const Rational &b) {
        if (b.is_zero()) throw DegenerateInputError("Rational: division by zero");
        Rational r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }
    Rational &operator+=(const Rational &o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational &operator-=(const Rational &o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational &operator*=(const Rational &o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }
    Rational &operator/=(const Rational &o) {
        if (o.is_zero()) throw DegenerateInputError("Rational: division by zero");
        mpq_div(q_, q_, o.q_);
        return *this;
    }

    Rational inv() const {
        if (is_zero()) throw DegenerateInputError("Rational: inverse of zero");
        Rational r;
        mpq_inv(r.q_, q_);
        return r;
    }

    static Rational pow(const Rational &a, long e) {
        if (e == 0) return Rational(1);
        Rational base = e < 0 ? a.inv() : a;
        unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
        Rational r;
        mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), n);
        mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), n);
        return r;
    }

    // exact k-th root if one exists
    static std::pair<Rational, bool> kth_root(const Rational &a, unsigned long k) {
        if (a.is_zero()) return {Rational(0), true};
        if (a.sign() < 0 && k % 2 == 0) return {Rational(0), false};
        Int num = a.num().abs(), den = a.den();
        auto [rn, okn] = Int::kth_root(num, k);
        auto [rd, okd] = Int::kth_root(den, k);
        if (!okn || !okd) return {Rational(0), false};
        Rational r(a.sign() < 0 ? -rn : rn, rd);
        return {std::move(r), true};
    }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_one() const { return mpq_cmp_ui(q_, 1, 1) == 0; }
    int sign() const { return mpq_sgn(q_); }
    Rational abs() const {
        Rational r;
        mpq_abs(r.q_, q_);
        return r;
    }

    Int num() const {
        Int r;
        mpz_set(r.raw(), mpq_numref(q_));
        return r;
    }
    Int den() const {
        Int r;
        mpz_set(r.raw(), mpq_denref(q_));
        return r;
    }

    double to_double() const { return mpq_get_d(q_); }

    friend bool operator==(const Rational &a, const Rational &b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rational &a, const Rational &b) { return !(a == b); }
    friend bool operator<(const Rational &a, const Rational &b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rational &a, const Rational &b) { return mpq_cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rational &a, const Rational &b) { return mpq_cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rational &a, const Rational &b) { return mpq_cmp(a.q_, b.q_) >= 0; }

    // canonical "p/q" (or "p" when q = 1); this is the serialization format
    std::string str() const {
        std::string s = num().str();
        if (!den().is_one()) s += "/" + den().str();
        return s;
    }

    std::size_t hash() const { return num().hash() * 31 + den().hash(); }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

  private:
    mpq_t q_;
};

// Ring-trait shims shared by the generic polynomial/series templates.
inline Rational ring_zero(const Rational &) { return Rational(0); }
inline Rational ring_one(const Rational &) { return Rational(1); }
inline bool is_zero(const Rational &r) { return r.is_zero(); }
inline Rational ring_inv(const Rational &r) { return r.inv(); }

// content-style height control used by the polynomial gcd loop
inline Rational coeff_height_scale(const Rational &r) { return r.abs(); }
inline Rational combine_height_scales(const Rational &a, const Rational &b) {
    Int n = Int::gcd(a.num(), b.num());
    Int l = Int::div_exact(a.den() * b.den(), Int::gcd(a.den(), b.den()));
    return Rational(n, l);
}
inline Rational height_scale_to_ring(const Rational &s, const Rational &) { return s.inv(); }

} // namespace anharmonia

#endif
