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

#ifndef ANHARMONIA_CYCLOTOMIC_HPP
#define ANHARMONIA_CYCLOTOMIC_HPP

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "anharmonia/poly.hpp"
#include "anharmonia/rational.hpp"
#include "anharmonia/util.hpp"

namespace anharmonia {

namespace detail {

inline long euler_phi(long n) {
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

// Phi_N and the reduction rows for zeta^k, phi(N) <= k <= 2 phi(N) - 2.
struct CycTable {
    long conductor = 1;
    long phi = 1;
    Poly<Rational> minimal_poly{"z"};
    std::vector<std::vector<Rational>> rewrite; // rewrite[k - phi] expresses zeta^k in the power basis
};

inline Poly<Rational> cyclotomic_poly_uncached(long n) {
    // x^n - 1 divided by the product of Phi_d over proper divisors d of n
    std::vector<Rational> cs(static_cast<std::size_t>(n) + 1, Rational(0));
    cs[0] = Rational(-1);
    cs[static_cast<std::size_t>(n)] = Rational(1);
    Poly<Rational> num("z", cs);
    for (long d = 1; d < n; ++d)
        if (n % d == 0) num = num / cyclotomic_poly_uncached(d);
    return num;
}

inline const CycTable &cyc_table(long n) {
    static std::map<long, CycTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    CycTable t;
    t.conductor = n;
    t.phi = euler_phi(n);
    t.minimal_poly = cyclotomic_poly_uncached(n);
    long phi = t.phi;
    // zeta^phi = -(low coefficients of Phi)
    std::vector<Rational> row(static_cast<std::size_t>(phi), Rational(0));
    for (long i = 0; i < phi; ++i) row[static_cast<std::size_t>(i)] = -t.minimal_poly.coeff(i);
    t.rewrite.push_back(row);
    for (long k = phi + 1; k <= 2 * phi - 2; ++k) {
        const auto &prev = t.rewrite.back();
        std::vector<Rational> next(static_cast<std::size_t>(phi), Rational(0));
        // multiply prev by zeta, folding the overflow term through row 0
        Rational top = prev[static_cast<std::size_t>(phi - 1)];
        for (long i = phi - 1; i >= 1; --i) next[static_cast<std::size_t>(i)] = prev[static_cast<std::size_t>(i - 1)];
        next[0] = Rational(0);
        if (!top.is_zero())
            for (long i = 0; i < phi; ++i)
                next[static_cast<std::size_t>(i)] += top * t.rewrite[0][static_cast<std::size_t>(i)];
        t.rewrite.push_back(next);
    }
    auto [pos, inserted] = cache.emplace(n, std::move(t));
    (void)inserted;
    return pos->second;
}

inline Poly<Rational> cyclotomic_poly(long n) { return cyc_table(n).minimal_poly; }

} // namespace detail

// Element of the cyclotomic field Q(zeta_N), stored in the power basis of
// Q[z]/Phi_N(z). Arithmetic reduces canonically mod Phi_N; equality is
// coordinate equality. Mixing conductors throws, except that conductor 1
// (plain rationals) promotes silently into any field.
class Cyclotomic {
  public:
    Cyclotomic() : n_(1), c_(1, Rational(0)) {}
    explicit Cyclotomic(long conductor) : n_(conductor), c_(phi_size(conductor), Rational(0)) {}
    Cyclotomic(long conductor, std::vector<Rational> coords) : n_(conductor), c_(std::move(coords)) {
        if (c_.size() != phi_size(conductor))
            throw DegenerateInputError("Cyclotomic: coordinate count does not match phi(N)");
    }
    Cyclotomic(const Rational &r) : n_(1), c_(1, r) {} // NOLINT: implicit by design
    Cyclotomic(long conductor, const Rational &r) : n_(conductor), c_(phi_size(conductor), Rational(0)) { c_[0] = r; }

    static Cyclotomic zeta(long conductor) {
        Cyclotomic z(conductor);
        if (detail::cyc_table(conductor).phi == 1) {
            // conductor 1 or 2: zeta is rational
            z.c_[0] = conductor == 2 ? Rational(-1) : Rational(1);
        } else {
            z.c_[1] = Rational(1);
        }
        return z;
    }

    static Cyclotomic zeta_pow(long conductor, long k) {
        k %= conductor;
        if (k < 0) k += conductor;
        Cyclotomic r = one_of(conductor);
        Cyclotomic z = zeta(conductor);
        for (long i = 0; i < k; ++i) r = r * z;
        return r;
    }

    static Cyclotomic one_of(long conductor) {
        Cyclotomic z(conductor);
        z.c_[0] = Rational(1);
        return z;
    }

    long conductor() const { return n_; }
    const std::vector<Rational> &coords() const { return c_; }

    bool is_zero() const {
        for (const auto &x : c_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }
    Rational rational_value() const {
        if (!is_rational()) throw DegenerateInputError("Cyclotomic: value is not rational");
        return c_[0];
    }

    // embed into Q(zeta_M); requires N | M
    Cyclotomic promoted(long m) const {
        if (m == n_) return *this;
        if (m % n_ != 0) throw IncompatibleRingError("Cyclotomic: conductor does not divide target");
        Cyclotomic out(m);
        long step = m / n_;
        for (std::size_t j = 0; j < c_.size(); ++j) {
            if (c_[j].is_zero()) continue;
            Cyclotomic zp = zeta_pow(m, static_cast<long>(j) * step);
            for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += c_[j] * zp.c_[i];
        }
        return out;
    }

    friend Cyclotomic operator+(const Cyclotomic &a, const Cyclotomic &b) {
        auto [x, y] = aligned(a, b);
        for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
        return x;
    }
    friend Cyclotomic operator-(const Cyclotomic &a, const Cyclotomic &b) {
        auto [x, y] = aligned(a, b);
        for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
        return x;
    }
    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto &x : r.c_) x = -x;
        return r;
    }
    friend Cyclotomic operator*(const Cyclotomic &a, const Cyclotomic &b) {
        auto [x, y] = aligned(a, b);
        const auto &t = detail::cyc_table(x.n_);
        long phi = t.phi;
        std::vector<Rational> conv(static_cast<std::size_t>(2 * phi - 1), Rational(0));
        for (long i = 0; i < phi; ++i) {
            if (x.c_[static_cast<std::size_t>(i)].is_zero()) continue;
            for (long j = 0; j < phi; ++j) {
                if (y.c_[static_cast<std::size_t>(j)].is_zero()) continue;
                conv[static_cast<std::size_t>(i + j)] += x.c_[static_cast<std::size_t>(i)] * y.c_[static_cast<std::size_t>(j)];
            }
        }
        Cyclotomic r(x.n_);
        for (long i = 0; i < phi; ++i) r.c_[static_cast<std::size_t>(i)] = conv[static_cast<std::size_t>(i)];
        for (long k = phi; k <= 2 * phi - 2; ++k) {
            const Rational &v = conv[static_cast<std::size_t>(k)];
            if (v.is_zero()) continue;
            const auto &row = t.rewrite[static_cast<std::size_t>(k - phi)];
            for (long i = 0; i < phi; ++i) r.c_[static_cast<std::size_t>(i)] += v * row[static_cast<std::size_t>(i)];
        }
        return r;
    }
    friend Cyclotomic operator*(const Cyclotomic &a, const Rational &s) {
        Cyclotomic r = a;
        for (auto &x : r.c_) x *= s;
        return r;
    }
    friend Cyclotomic operator*(const Rational &s, const Cyclotomic &a) { return a * s; }

    Cyclotomic inv() const {
        if (is_zero()) throw DegenerateInputError("Cyclotomic: inverse of zero");
        if (n_ == 1 || is_rational()) {
            Cyclotomic r(n_);
            r.c_[0] = c_[0].inv();
            return r;
        }
        const auto &t = detail::cyc_table(n_);
        Poly<Rational> self("z", c_);
        auto [g, s, u] = poly_xgcd(self, t.minimal_poly);
        (void)u;
        if (g.degree() != 0) throw Error("Cyclotomic: gcd with minimal polynomial is nonconstant");
        Cyclotomic r(n_);
        for (long i = 0; i <= s.degree() && i < t.phi; ++i) r.c_[static_cast<std::size_t>(i)] = s.coeff(i);
        return r;
    }

    friend Cyclotomic operator/(const Cyclotomic &a, const Cyclotomic &b) { return a * b.inv(); }

    friend bool operator==(const Cyclotomic &a, const Cyclotomic &b) {
        if (a.n_ == b.n_) return a.c_ == b.c_;
        auto [x, y] = aligned(a, b);
        return x.c_ == y.c_;
    }
    friend bool operator!=(const Cyclotomic &a, const Cyclotomic &b) { return !(a == b); }

    std::string str() const {
        if (is_rational()) return c_[0].str();
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += c_[i].str();
            if (i > 0) s += "*w" + std::to_string(n_) + "^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(n_);
        for (const auto &x : c_) h = h * 1099511628211ULL ^ x.hash();
        return h;
    }

  private:
    static std::size_t phi_size(long conductor) {
        if (conductor < 1) throw DegenerateInputError("Cyclotomic: conductor must be positive");
        return static_cast<std::size_t>(detail::cyc_table(conductor).phi);
    }
    // bring both operands into a common conductor (only 1 -> N promotion is implicit)
    static std::pair<Cyclotomic, Cyclotomic> aligned(const Cyclotomic &a, const Cyclotomic &b) {
        if (a.n_ == b.n_) return {a, b};
        if (a.n_ == 1) return {a.promoted(b.n_), b};
        if (b.n_ == 1) return {a, b.promoted(a.n_)};
        throw IncompatibleRingError("Cyclotomic: mixed conductors " + std::to_string(a.n_) + " and " +
                                    std::to_string(b.n_));
    }

    long n_;
    std::vector<Rational> c_;
};

inline Cyclotomic ring_zero(const Cyclotomic &p) { return Cyclotomic(p.conductor()); }
inline Cyclotomic ring_one(const Cyclotomic &p) { return Cyclotomic::one_of(p.conductor()); }
inline bool is_zero(const Cyclotomic &p) { return p.is_zero(); }
inline Cyclotomic ring_inv(const Cyclotomic &p) { return p.inv(); }

inline Rational coeff_height_scale(const Cyclotomic &c) {
    Rational acc(0);
    bool first = true;
    for (const auto &x : c.coords()) {
        if (x.is_zero()) continue;
        if (first) {
            acc = x.abs();
            first = false;
        } else {
            acc = combine_height_scales(acc, x.abs());
        }
    }
    return first ? Rational(1) : acc;
}
inline Cyclotomic height_scale_to_ring(const Rational &s, const Cyclotomic &proto) {
    return Cyclotomic(proto.conductor(), s.inv());
}

} // namespace anharmonia

#endif
