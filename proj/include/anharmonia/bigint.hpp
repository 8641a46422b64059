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

#ifndef ANHARMONIA_BIGINT_HPP
#define ANHARMONIA_BIGINT_HPP

#include <gmp.h>

#include <cstdint>
#include <string>
#include <utility>

#include "anharmonia/util.hpp"

namespace anharmonia {

// Value-semantic arbitrary-precision integer over GMP's mpz layer.
class Int {
  public:
    Int() { mpz_init(z_); }
    Int(long v) { mpz_init_set_si(z_, v); } // NOLINT: implicit by design
    explicit Int(const std::string &s) {
        if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
            mpz_clear(z_);
            throw DegenerateInputError("Int: unparsable integer literal '" + s + "'");
        }
    }
    Int(const Int &o) { mpz_init_set(z_, o.z_); }
    Int(Int &&o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    Int &operator=(const Int &o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    Int &operator=(Int &&o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~Int() { mpz_clear(z_); }

    friend Int operator+(const Int &a, const Int &b) {
        Int r;
        mpz_add(r.z_, a.z_, b.z_);
        return r;
    }
    friend Int operator-(const Int &a, const Int &b) {
        Int r;
        mpz_sub(r.z_, a.z_, b.z_);
        return r;
    }
    friend Int operator*(const Int &a, const Int &b) {
        Int r;
        mpz_mul(r.z_, a.z_, b.z_);
        return r;
    }
    Int operator-() const {
        Int r;
        mpz_neg(r.z_, z_);
        return r;
    }
    Int &operator+=(const Int &o) {
        mpz_add(z_, z_, o.z_);
        return *this;
    }
    Int &operator-=(const Int &o) {
        mpz_sub(z_, z_, o.z_);
        return *this;
    }
    Int &operator*=(const Int &o) {
        mpz_mul(z_, z_, o.z_);
        return *this;
    }

    // Truncated division (quotient rounded toward zero, as in C).
    friend Int operator/(const Int &a, const Int &b) {
        if (b.is_zero()) throw DegenerateInputError("Int: division by zero");
        Int r;
        mpz_tdiv_q(r.z_, a.z_, b.z_);
        return r;
    }
    friend Int operator%(const Int &a, const Int &b) {
        if (b.is_zero()) throw DegenerateInputError("Int: modulo by zero");
        Int r;
        mpz_tdiv_r(r.z_, a.z_, b.z_);
        return r;
    }

    // Exact division; caller guarantees divisibility.
    static Int div_exact(const Int &a, const Int &b) {
        if (b.is_zero()) throw DegenerateInputError("Int: exact division by zero");
        Int r;
        mpz_divexact(r.z_, a.z_, b.z_);
        return r;
    }

    static Int gcd(const Int &a, const Int &b) {
        Int r;
        mpz_gcd(r.z_, a.z_, b.z_);
        return r;
    }

    static Int pow(const Int &a, unsigned long e) {
        Int r;
        mpz_pow_ui(r.z_, a.z_, e);
        return r;
    }

    // Exact k-th root; returns {root, true} when a is a perfect k-th power.
    static std::pair<Int, bool> kth_root(const Int &a, unsigned long k) {
        Int r;
        int exact = mpz_root(r.z_, a.z_, k);
        return {std::move(r), exact != 0};
    }

    bool is_zero() const { return mpz_sgn(z_) == 0; }
    bool is_one() const { return mpz_cmp_ui(z_, 1) == 0; }
    int sign() const { return mpz_sgn(z_); }
    Int abs() const {
        Int r;
        mpz_abs(r.z_, z_);
        return r;
    }

    bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const {
        if (!fits_long()) throw Error("Int: value does not fit in long");
        return mpz_get_si(z_);
    }
    double to_double() const { return mpz_get_d(z_); }

    friend bool operator==(const Int &a, const Int &b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend bool operator!=(const Int &a, const Int &b) { return !(a == b); }
    friend bool operator<(const Int &a, const Int &b) { return mpz_cmp(a.z_, b.z_) < 0; }
    friend bool operator<=(const Int &a, const Int &b) { return mpz_cmp(a.z_, b.z_) <= 0; }
    friend bool operator>(const Int &a, const Int &b) { return mpz_cmp(a.z_, b.z_) > 0; }
    friend bool operator>=(const Int &a, const Int &b) { return mpz_cmp(a.z_, b.z_) >= 0; }

    std::string str() const {
        char *raw = mpz_get_str(nullptr, 10, z_);
        std::string s(raw);
        void (*freefn)(void *, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(raw, s.size() + 1);
        return s;
    }

    std::size_t hash() const {
        // cheap rolling hash over the limbs
        std::size_t h = static_cast<std::size_t>(mpz_sgn(z_)) + 0x9e3779b97f4a7c15ULL;
        for (std::size_t i = 0; i < mpz_size(z_); ++i)
            h = h * 1099511628211ULL ^ static_cast<std::size_t>(mpz_getlimbn(z_, i));
        return h;
    }

    const mpz_t &raw() const { return z_; }
    mpz_t &raw() { return z_; }

  private:
    mpz_t z_;
};

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.raw(), n, k);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.raw(), n);
    return r;
}

} // namespace anharmonia

#endif
