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

#ifndef ANHARMONIA_SERIES_HPP
#define ANHARMONIA_SERIES_HPP

#include <string>
#include <vector>

#include "anharmonia/rational.hpp"
#include "anharmonia/util.hpp"

namespace anharmonia {

// Truncated series in s = q^(1/r) with exact rational coefficients and a
// signed valuation. r is 1 for ordinary q-expansions and 2 for the
// half-integer expansions coming from theta constants. Arithmetic
// propagates the weakest truncation of the operands, so every represented
// coefficient of a result is exact.
class FracSeries {
  public:
    // zero series known up to (exclusive) s-order
    FracSeries(int ram, long order_s) : r_(ram), val_(order_s), order_(order_s) { check_ram(); }
    FracSeries(int ram, long val_s, long order_s, std::vector<Rational> coeffs)
        : r_(ram), val_(val_s), order_(order_s), c_(std::move(coeffs)) {
        check_ram();
        if (static_cast<long>(c_.size()) != order_ - val_)
            throw DegenerateInputError("FracSeries: coefficient count does not match span");
        normalize();
    }

    static FracSeries zero(int ram, long order_s) { return FracSeries(ram, order_s); }
    static FracSeries constant(const Rational &c, int ram, long order_s) {
        if (order_s <= 0 || c.is_zero()) return zero(ram, order_s);
        std::vector<Rational> cs(static_cast<std::size_t>(order_s), Rational(0));
        cs[0] = c;
        return FracSeries(ram, 0, order_s, std::move(cs));
    }
    // the monomial c * s^k
    static FracSeries monomial(const Rational &c, long k, int ram, long order_s) {
        if (k >= order_s || c.is_zero()) return zero(ram, order_s);
        std::vector<Rational> cs(static_cast<std::size_t>(order_s - k), Rational(0));
        cs[0] = c;
        return FracSeries(ram, k, order_s, std::move(cs));
    }

    int ramification() const { return r_; }
    long valuation() const { return val_; } // in s-units; equals order() for the zero series
    long order() const { return order_; }   // exclusive, in s-units
    bool is_zero() const { return c_.empty(); }

    // coefficient of s^k (k in s-units)
    Rational coeff_s(long k) const {
        if (k >= order_) throw DegenerateInputError("FracSeries: coefficient beyond truncation");
        if (k < val_ || k >= order_) return Rational(0);
        return c_[static_cast<std::size_t>(k - val_)];
    }
    // coefficient of q^k (integer exponent)
    Rational coeff_q(long k) const { return coeff_s(k * r_); }

    FracSeries lifted(int ram) const {
        if (ram == r_) return *this;
        if (ram % r_ != 0) throw IncompatibleRingError("FracSeries: incompatible ramifications");
        int f = ram / r_;
        FracSeries out(ram, order_ * f);
        out.val_ = val_ * f;
        out.c_.assign(static_cast<std::size_t>((order_ - val_) * f), Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i * static_cast<std::size_t>(f)] = c_[i];
        out.normalize();
        return out;
    }

    FracSeries truncated(long order_s) const {
        if (order_s >= order_) return *this;
        FracSeries out(r_, order_s);
        if (val_ >= order_s) return out;
        out.val_ = val_;
        out.c_.assign(c_.begin(), c_.begin() + static_cast<long>(order_s - val_));
        out.normalize();
        return out;
    }

    friend FracSeries operator+(const FracSeries &a, const FracSeries &b) {
        auto [x, y] = aligned(a, b);
        long order = std::min(x.order_, y.order_);
        long val = std::min(x.val_, y.val_);
        val = std::min(val, order);
        FracSeries out(x.r_, order);
        out.val_ = val;
        out.c_.assign(static_cast<std::size_t>(order - val), Rational(0));
        for (long k = val; k < order; ++k) {
            Rational s(0);
            if (k >= x.val_ && k < x.order_) s += x.c_[static_cast<std::size_t>(k - x.val_)];
            if (k >= y.val_ && k < y.order_) s += y.c_[static_cast<std::size_t>(k - y.val_)];
            out.c_[static_cast<std::size_t>(k - val)] = s;
        }
        out.normalize();
        return out;
    }
    friend FracSeries operator-(const FracSeries &a, const FracSeries &b) { return a + (-b); }
    FracSeries operator-() const {
        FracSeries out = *this;
        for (auto &x : out.c_) x = -x;
        return out;
    }

    friend FracSeries operator*(const FracSeries &a, const FracSeries &b) {
        auto [x, y] = aligned(a, b);
        // min over operands of (own truncation + other's valuation)
        long order = std::min(x.order_ + y.val_, y.order_ + x.val_);
        if (x.is_zero() || y.is_zero()) return zero(x.r_, order);
        long val = x.val_ + y.val_;
        FracSeries out(x.r_, order);
        out.val_ = val;
        out.c_.assign(static_cast<std::size_t>(order - val), Rational(0));
        for (std::size_t i = 0; i < x.c_.size(); ++i) {
            if (x.c_[i].is_zero()) continue;
            long ei = x.val_ + static_cast<long>(i);
            for (std::size_t j = 0; j < y.c_.size(); ++j) {
                long e = ei + y.val_ + static_cast<long>(j);
                if (e >= order) break;
                if (y.c_[j].is_zero()) continue;
                out.c_[static_cast<std::size_t>(e - val)] += x.c_[i] * y.c_[j];
            }
        }
        out.normalize();
        return out;
    }
    friend FracSeries operator*(const FracSeries &a, const Rational &s) {
        FracSeries out = a;
        if (s.is_zero()) return zero(a.r_, a.order_);
        for (auto &x : out.c_) x *= s;
        out.normalize();
        return out;
    }
    friend FracSeries operator*(const Rational &s, const FracSeries &a) { return a * s; }

    friend FracSeries operator/(const FracSeries &a, const FracSeries &b) {
        auto [x, y] = aligned(a, b);
        if (y.is_zero()) throw DegenerateInputError("FracSeries: division by zero series");
        // quotient coefficients are reliable up to min(a.order - b.val, a.val + b.order - 2 b.val)
        long order = std::min(x.order_ - y.val_, x.val_ + y.order_ - 2 * y.val_);
        if (x.is_zero()) return zero(x.r_, order);
        long val = x.val_ - y.val_;
        if (val >= order) return zero(x.r_, order);
        std::vector<Rational> q(static_cast<std::size_t>(order - val), Rational(0));
        Rational lead = y.c_[0].inv();
        for (long k = 0; k < order - val; ++k) {
            Rational acc = (static_cast<std::size_t>(k) < x.c_.size()) ? x.c_[static_cast<std::size_t>(k)] : Rational(0);
            for (long j = 1; j <= k && static_cast<std::size_t>(j) < y.c_.size(); ++j)
                acc -= y.c_[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(k - j)];
            q[static_cast<std::size_t>(k)] = acc * lead;
        }
        return FracSeries(x.r_, val, order, std::move(q));
    }

    FracSeries pow(unsigned long e) const {
        FracSeries out = constant(Rational(1), r_, e == 0 ? order_ : order_ + static_cast<long>(e - 1) * val_);
        FracSeries base = *this;
        // exponentiation by squaring; truncation bookkeeping rides along
        FracSeries acc = out;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    // s -> -s (flips the sign of odd s-coefficients)
    FracSeries mirrored() const {
        FracSeries out = *this;
        for (std::size_t i = 0; i < out.c_.size(); ++i)
            if ((out.val_ + static_cast<long>(i)) % 2 != 0) out.c_[i] = -out.c_[i];
        return out;
    }

    // D = q d/dq; acts on s^k as multiplication by k/r
    FracSeries D() const {
        FracSeries out = *this;
        for (std::size_t i = 0; i < out.c_.size(); ++i)
            out.c_[i] *= Rational(out.val_ + static_cast<long>(i), out.r_);
        out.normalize();
        return out;
    }

    // equality of all represented coefficients up to the common truncation
    friend bool operator==(const FracSeries &a, const FracSeries &b) { return (a - b).is_zero(); }
    friend bool operator!=(const FracSeries &a, const FracSeries &b) { return !(a == b); }

    // first s-exponent (< common order) at which the two differ, or -1
    static long first_mismatch(const FracSeries &a, const FracSeries &b) {
        FracSeries d = a - b;
        return d.is_zero() ? -1 : d.val_;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            long k = val_ + static_cast<long>(i);
            std::string term = c_[i].str();
            if (k != 0) {
                term += " q";
                if (k != r_) {
                    if (k % r_ == 0) {
                        term += "^" + std::to_string(k / r_);
                    } else {
                        term += "^(" + std::to_string(k) + "/" + std::to_string(r_) + ")";
                    }
                }
            }
            s += s.empty() ? term : " + " + term;
        }
        return s.empty() ? "0" : s;
    }

  private:
    void check_ram() const {
        if (r_ != 1 && r_ != 2) throw DegenerateInputError("FracSeries: ramification must be 1 or 2");
    }
    void normalize() {
        std::size_t lead = 0;
        while (lead < c_.size() && c_[lead].is_zero()) ++lead;
        if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
            val_ += static_cast<long>(lead);
        }
        if (c_.empty()) val_ = order_;
    }
    static std::pair<FracSeries, FracSeries> aligned(const FracSeries &a, const FracSeries &b) {
        if (a.r_ == b.r_) return {a, b};
        int ram = std::max(a.r_, b.r_);
        return {a.lifted(ram), b.lifted(ram)};
    }

    int r_;
    long val_;
    long order_;
    std::vector<Rational> c_;
};

} // namespace anharmonia

#endif
