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

#ifndef ANHARMONIA_RATFUN_HPP
#define ANHARMONIA_RATFUN_HPP

#include <string>
#include <utility>

#include "anharmonia/poly.hpp"
#include "anharmonia/util.hpp"

namespace anharmonia {

// Rational function num/den over a coefficient field; kept reduced
// (gcd(num, den) = 1) with a monic denominator.
template <class R>
    requires FieldLike<R>
class RatFun {
  public:
    RatFun() = default;
    RatFun(Poly<R> num, Poly<R> den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }
    RatFun(const Poly<R> &num) : num_(num), den_(ring_one(num)) {} // NOLINT: implicit by design

    static RatFun constant(const std::string &var, const R &c) {
        return RatFun(Poly<R>::constant(var, c));
    }
    static RatFun variable(const std::string &var, const R &proto) {
        return RatFun(Poly<R>::variable(var, proto));
    }

    const Poly<R> &num() const { return num_; }
    const Poly<R> &den() const { return den_; }
    const std::string &var() const { return num_.is_constant() ? den_.var() : num_.var(); }
    bool is_zero() const { return num_.is_zero_poly(); }
    bool is_poly() const { return den_.degree() == 0; }

    friend RatFun operator+(const RatFun &a, const RatFun &b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun &a, const RatFun &b) {
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator*(const RatFun &a, const RatFun &b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun &a, const RatFun &b) {
        if (b.is_zero()) throw DegenerateInputError("RatFun: division by zero");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFun operator-() const { return RatFun(-num_, den_, already_reduced{}); }
    friend RatFun operator*(const RatFun &a, const R &s) { return RatFun(a.num_ * s, a.den_); }
    friend RatFun operator*(const R &s, const RatFun &a) { return a * s; }

    RatFun inv() const {
        if (is_zero()) throw DegenerateInputError("RatFun: inverse of zero");
        return RatFun(den_, num_);
    }

    // derivative by the quotient rule, reduced
    RatFun derivative() const {
        return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    R eval(const R &x) const {
        R d = den_.eval(x);
        if (anharmonia::is_zero(d)) throw DegenerateInputError("RatFun: evaluation at a pole");
        return num_.eval(x) * ring_inv(d);
    }

    friend bool operator==(const RatFun &a, const RatFun &b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RatFun &a, const RatFun &b) { return !(a == b); }

    std::string str() const {
        if (is_poly()) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

  private:
    struct already_reduced {};
    RatFun(Poly<R> num, Poly<R> den, already_reduced) : num_(std::move(num)), den_(std::move(den)) {}

    void reduce() {
        if (den_.is_zero_poly()) throw DegenerateInputError("RatFun: zero denominator");
        if (num_.is_zero_poly()) {
            den_ = ring_one(den_);
            return;
        }
        Poly<R> g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        R lcinv = ring_inv(den_.lc());
        num_ = num_ * lcinv;
        den_ = den_ * lcinv;
    }

    Poly<R> num_{}, den_ = ring_one(Poly<R>{});
};

template <class R>
RatFun<R> ring_zero(const RatFun<R> &p) {
    return RatFun<R>(ring_zero(p.num()));
}
template <class R>
RatFun<R> ring_one(const RatFun<R> &p) {
    return RatFun<R>(ring_one(p.num()));
}
template <class R>
bool is_zero(const RatFun<R> &p) {
    return p.is_zero();
}
template <class R>
RatFun<R> ring_inv(const RatFun<R> &p) {
    return p.inv();
}

} // namespace anharmonia

#endif
