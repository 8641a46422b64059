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

#ifndef ANHARMONIA_POLY_HPP
#define ANHARMONIA_POLY_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "anharmonia/util.hpp"

namespace anharmonia {

template <class R>
concept FieldLike = requires(const R &a) {
    { ring_inv(a) } -> std::convertible_to<R>;
};

template <class R>
concept ExactDivRing = requires(const R &a, const R &b) {
    { ring_divexact(a, b) } -> std::convertible_to<R>;
};

// Dense univariate polynomial over an exact coefficient ring R.
// Invariant: no trailing zero coefficients (the zero polynomial has an
// empty list); a ring prototype is kept so zero/one can be formed even
// for runtime-parameterized rings (cyclotomic conductors, variable sets).
template <class R>
class Poly {
  public:
    Poly() : var_("x"), proto_{} {}
    explicit Poly(std::string var, R proto = R{}) : var_(std::move(var)), proto_(std::move(proto)) {}
    Poly(std::string var, std::vector<R> coeffs)
        : var_(std::move(var)), proto_(coeffs.empty() ? R{} : ring_zero(coeffs.front())), coeffs_(std::move(coeffs)) {
        trim();
    }

    static Poly constant(const std::string &var, R value) {
        Poly p(var, ring_zero(value));
        if (!is_zero(value)) p.coeffs_.push_back(std::move(value));
        return p;
    }
    // the monomial c * var^k
    static Poly monomial(const std::string &var, R c, long k) {
        Poly p(var, ring_zero(c));
        if (is_zero(c)) return p;
        p.coeffs_.assign(static_cast<std::size_t>(k), ring_zero(c));
        p.coeffs_.push_back(std::move(c));
        return p;
    }
    static Poly variable(const std::string &var, const R &proto) {
        return monomial(var, ring_one(proto), 1);
    }

    const std::string &var() const { return var_; }
    const R &proto() const { return proto_; }
    bool is_zero_poly() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; } // -1 for the zero polynomial
    const std::vector<R> &coeffs() const { return coeffs_; }

    const R &lc() const {
        if (coeffs_.empty()) throw DegenerateInputError("Poly: leading coefficient of zero polynomial");
        return coeffs_.back();
    }
    R coeff(long k) const {
        if (k < 0 || k >= static_cast<long>(coeffs_.size())) return ring_zero(proto_);
        return coeffs_[static_cast<std::size_t>(k)];
    }

    bool is_constant() const { return coeffs_.size() <= 1; }

    friend Poly operator+(const Poly &a, const Poly &b) {
        Poly r(merged_var(a, b), a.proto_any(b));
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), ring_zero(r.proto_));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] = r.coeffs_[i] + b.coeffs_[i];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly &a, const Poly &b) { return a + (-b); }
    Poly operator-() const {
        Poly r(*this);
        for (auto &c : r.coeffs_) c = -c;
        return r;
    }
    friend Poly operator*(const Poly &a, const Poly &b) {
        Poly r(merged_var(a, b), a.proto_any(b));
        if (a.is_zero_poly() || b.is_zero_poly()) return r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, ring_zero(r.proto_));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        r.trim();
        return r;
    }
    friend Poly operator*(const Poly &a, const R &s) {
        Poly r(a);
        for (auto &c : r.coeffs_) c = c * s;
        r.trim();
        return r;
    }
    friend Poly operator*(const R &s, const Poly &a) { return a * s; }

    friend bool operator==(const Poly &a, const Poly &b) {
        if (a.coeffs_.size() != b.coeffs_.size()) return false;
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            if (!is_zero(a.coeffs_[i] - b.coeffs_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly &a, const Poly &b) { return !(a == b); }

    Poly pow(unsigned long e) const {
        Poly r = constant(var_, ring_one(proto_));
        Poly base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    Poly derivative() const {
        Poly r(var_, proto_);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            r.coeffs_.push_back(coeffs_[i] * scalar(static_cast<long>(i)));
        r.trim();
        return r;
    }

    R eval(const R &x) const {
        R acc = ring_zero(proto_);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    // Horner evaluation into any ring S that can absorb R coefficients:
    // needs S*S, S+R and a zero from `acc0`.
    template <class S>
    S eval_in(const S &x, const S &acc0) const {
        S acc = acc0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    // substitute another polynomial for the variable
    Poly compose(const Poly &inner) const {
        Poly acc = constant(inner.var(), ring_zero(proto_));
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            acc = acc * inner + constant(inner.var(), coeffs_[i]);
        return acc;
    }

    // Division with remainder; requires the divisor's leading coefficient
    // to be invertible (field coefficients or a monic divisor).
    friend std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b)
        requires FieldLike<R>
    {
        if (b.is_zero_poly()) throw DegenerateInputError("Poly: division by zero polynomial");
        Poly q(merged_var(a, b), a.proto_any(b));
        Poly r = a;
        R lcb_inv = ring_inv(b.lc());
        long db = b.degree();
        while (!r.is_zero_poly() && r.degree() >= db) {
            long shift = r.degree() - db;
            R c = r.lc() * lcb_inv;
            // r -= c x^shift b ; q += c x^shift
            if (q.degree() < shift) q.coeffs_.resize(static_cast<std::size_t>(shift) + 1, ring_zero(q.proto_));
            q.coeffs_[static_cast<std::size_t>(shift)] = q.coeffs_[static_cast<std::size_t>(shift)] + c;
            for (long i = 0; i <= db; ++i) {
                auto idx = static_cast<std::size_t>(i + shift);
                r.coeffs_[idx] = r.coeffs_[idx] - c * b.coeffs_[static_cast<std::size_t>(i)];
            }
            r.trim();
        }
        q.trim();
        return {q, r};
    }

    friend Poly operator/(const Poly &a, const Poly &b)
        requires FieldLike<R>
    {
        return divmod(a, b).first;
    }
    friend Poly operator%(const Poly &a, const Poly &b)
        requires FieldLike<R>
    {
        return divmod(a, b).second;
    }

    // Exact division over a non-field ring; throws if not exact.
    static Poly div_exact(const Poly &a, const Poly &b) {
        if (b.is_zero_poly()) throw DegenerateInputError("Poly: exact division by zero polynomial");
        Poly q(merged_var(a, b), a.proto_any(b));
        Poly r = a;
        long db = b.degree();
        while (!r.is_zero_poly() && r.degree() >= db) {
            long shift = r.degree() - db;
            R c = coeff_divexact(r.lc(), b.lc());
            if (q.degree() < shift) q.coeffs_.resize(static_cast<std::size_t>(shift) + 1, ring_zero(q.proto_));
            q.coeffs_[static_cast<std::size_t>(shift)] = q.coeffs_[static_cast<std::size_t>(shift)] + c;
            for (long i = 0; i <= db; ++i) {
                auto idx = static_cast<std::size_t>(i + shift);
                r.coeffs_[idx] = r.coeffs_[idx] - c * b.coeffs_[static_cast<std::size_t>(i)];
            }
            r.trim();
        }
        if (!r.is_zero_poly()) throw DegenerateInputError("Poly: division not exact");
        q.trim();
        return q;
    }

    Poly monic() const
        requires FieldLike<R>
    {
        if (is_zero_poly()) return *this;
        return *this * ring_inv(lc());
    }

    std::string str() const {
        if (is_zero_poly()) return "0";
        std::string s;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            if (is_zero(coeffs_[i])) continue;
            if (!s.empty()) s += " + ";
            s += "(" + coeff_str(coeffs_[i]) + ")";
            if (i > 0) s += "*" + var_ + "^" + std::to_string(i);
        }
        return s;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
    }
    R scalar(long k) const {
        R acc = ring_zero(proto_);
        R one = ring_one(proto_);
        bool neg = k < 0;
        for (long i = 0; i < (neg ? -k : k); ++i) acc = acc + one;
        return neg ? -acc : acc;
    }
    R proto_any(const Poly &other) const { return coeffs_.empty() && !other.coeffs_.empty() ? other.proto_ : proto_; }
    static std::string merged_var(const Poly &a, const Poly &b) {
        if (a.is_constant()) return b.var_;
        if (b.is_constant()) return a.var_;
        if (a.var_ != b.var_)
            throw IncompatibleRingError("Poly: mixed variables '" + a.var_ + "' and '" + b.var_ + "'");
        return a.var_;
    }
    static R coeff_divexact(const R &a, const R &b) {
        if constexpr (FieldLike<R>) {
            return a * ring_inv(b);
        } else {
            return ring_divexact(a, b);
        }
    }
    template <class T>
    static auto coeff_str(const T &c) -> decltype(c.str()) {
        return c.str();
    }

    std::string var_;
    R proto_;
    std::vector<R> coeffs_;
};

// --- ring-trait shims so Poly itself can serve as a coefficient ring ---

template <class R>
Poly<R> ring_zero(const Poly<R> &p) {
    return Poly<R>(p.var(), p.proto());
}
template <class R>
Poly<R> ring_one(const Poly<R> &p) {
    return Poly<R>::constant(p.var(), ring_one(p.proto()));
}
template <class R>
bool is_zero(const Poly<R> &p) {
    return p.is_zero_poly();
}
template <class R>
Poly<R> ring_divexact(const Poly<R> &a, const Poly<R> &b) {
    return Poly<R>::div_exact(a, b);
}

// Optional coefficient-height control hook for the Euclid loop; rings can
// provide `coeff_height_scale` returning a scalar to divide a polynomial by
// (a content-like quantity). Keeps remainder coefficients from exploding.
template <class R>
Poly<R> poly_height_normalized(const Poly<R> &p) {
    if constexpr (requires(const R &c) { coeff_height_scale(c); }) {
        if (p.is_zero_poly()) return p;
        auto scale = coeff_height_scale(p.lc());
        for (long k = 0; k < p.degree(); ++k) {
            if (is_zero(p.coeff(k))) continue;
            scale = combine_height_scales(scale, coeff_height_scale(p.coeff(k)));
        }
        if (scale.is_one()) return p;
        R inv = height_scale_to_ring(scale, p.lc());
        return p * inv;
    } else {
        return p;
    }
}

// Monic gcd over field coefficients (Euclid with remainder normalization).
template <class R>
    requires FieldLike<R>
Poly<R> poly_gcd(const Poly<R> &a, const Poly<R> &b) {
    Poly<R> x = poly_height_normalized(a), y = poly_height_normalized(b);
    while (!y.is_zero_poly()) {
        auto [q, r] = divmod(x, y);
        (void)q;
        x = y;
        y = poly_height_normalized(r);
    }
    if (x.is_zero_poly()) return x;
    return x.monic();
}

// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic. Remainders
// are height-normalized each step (the Bezout pair is scaled alongside, so
// the identity is preserved).
template <class R>
    requires FieldLike<R>
std::tuple<Poly<R>, Poly<R>, Poly<R>> poly_xgcd(const Poly<R> &a, const Poly<R> &b) {
    Poly<R> r0 = a, r1 = b;
    Poly<R> s0 = ring_one(a), s1 = ring_zero(a);
    Poly<R> t0 = ring_zero(a), t1 = ring_one(a);
    while (!r1.is_zero_poly()) {
        auto [q, r] = divmod(r0, r1);
        r0 = r1;
        r1 = r;
        Poly<R> s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        Poly<R> t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
        if (!r1.is_zero_poly()) {
            R lead = r1.lc();
            if constexpr (requires(const R &c) { coeff_height_scale(c); }) {
                auto scale = coeff_height_scale(lead);
                for (long k = 0; k < r1.degree(); ++k)
                    if (!is_zero(r1.coeff(k))) scale = combine_height_scales(scale, coeff_height_scale(r1.coeff(k)));
                if (!scale.is_one()) {
                    R inv = height_scale_to_ring(scale, lead);
                    r1 = r1 * inv;
                    s1 = s1 * inv;
                    t1 = t1 * inv;
                }
            }
        }
    }
    if (!r0.is_zero_poly()) {
        R c = ring_inv(r0.lc());
        r0 = r0 * c;
        s0 = s0 * c;
        t0 = t0 * c;
    }
    return {r0, s0, t0};
}

// Sylvester-determinant resultant, evaluated by fraction-free Bareiss
// elimination. Valid over any exact-division integral domain; this is the
// definitional route and the cross-check oracle for the faster one below.
template <class R>
R poly_resultant_bareiss(const Poly<R> &a, const Poly<R> &b) {
    if (a.is_zero_poly() || b.is_zero_poly())
        throw DegenerateInputError("resultant: zero input polynomial");
    const long m = a.degree(), n = b.degree();
    R zero = ring_zero(a.lc());
    R one = ring_one(zero);
    if (m == 0 && n == 0) return one;
    if (m == 0) return ring_pow(a.lc(), static_cast<unsigned long>(n));
    if (n == 0) return ring_pow(b.lc(), static_cast<unsigned long>(m));
    const long size = m + n;
    std::vector<std::vector<R>> s(static_cast<std::size_t>(size), std::vector<R>(static_cast<std::size_t>(size), zero));
    for (long row = 0; row < n; ++row)
        for (long k = 0; k <= m; ++k) s[row][row + k] = a.coeff(m - k);
    for (long row = 0; row < m; ++row)
        for (long k = 0; k <= n; ++k) s[n + row][row + k] = b.coeff(n - k);

    // Bareiss fraction-free elimination
    R denom = one;
    int sign = 1;
    for (long k = 0; k + 1 < size; ++k) {
        if (is_zero(s[k][k])) {
            long piv = -1;
            for (long i = k + 1; i < size; ++i)
                if (!is_zero(s[i][k])) {
                    piv = i;
                    break;
                }
            if (piv < 0) return zero;
            std::swap(s[static_cast<std::size_t>(k)], s[static_cast<std::size_t>(piv)]);
            sign = -sign;
        }
        for (long i = k + 1; i < size; ++i) {
            for (long j = k + 1; j < size; ++j) {
                R t = s[i][j] * s[k][k] - s[i][k] * s[k][j];
                s[i][j] = poly_resultant_detail_div(t, denom);
            }
            s[i][k] = zero;
        }
        denom = s[k][k];
    }
    R det = s[static_cast<std::size_t>(size - 1)][static_cast<std::size_t>(size - 1)];
    return sign < 0 ? -det : det;
}

template <class R>
R poly_resultant_detail_div(const R &t, const R &denom) {
    if (is_zero(t)) return t;
    if constexpr (FieldLike<R>) {
        return t * ring_inv(denom);
    } else {
        return ring_divexact(t, denom);
    }
}

template <class R>
R ring_pow(const R &a, unsigned long e) {
    R r = ring_one(a);
    R base = a;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

// Euclid-based resultant over a coefficient field. Same sign convention as
// the Sylvester determinant.
template <class R>
    requires FieldLike<R>
R poly_resultant(const Poly<R> &a, const Poly<R> &b) {
    if (a.is_zero_poly() || b.is_zero_poly())
        throw DegenerateInputError("resultant: zero input polynomial");
    Poly<R> x = a, y = b;
    R acc = ring_one(a.lc());
    bool negate = false;
    while (true) {
        long m = x.degree(), n = y.degree();
        if (n == 0) {
            acc = acc * ring_pow(y.lc(), static_cast<unsigned long>(m));
            break;
        }
        Poly<R> r = x % y;
        if (r.is_zero_poly()) return ring_zero(acc); // common factor
        // Res(x, y) = lc(y)^{m - deg r} (-1)^{mn} Res(y, r)
        acc = acc * ring_pow(y.lc(), static_cast<unsigned long>(m - r.degree()));
        if ((m % 2) && (n % 2)) negate = !negate;
        x = y;
        y = r;
    }
    return negate ? -acc : acc;
}

template <class R>
    requires(!FieldLike<R>)
R poly_resultant(const Poly<R> &a, const Poly<R> &b) {
    return poly_resultant_bareiss(a, b);
}

// Exact k-th root by coefficient recursion from the leading term; the
// result is re-powered to verify, so non-power inputs fail loudly.
template <class R>
    requires FieldLike<R>
Poly<R> poly_kth_root(const Poly<R> &p, unsigned long k) {
    if (k == 0) throw DegenerateInputError("poly_kth_root: k must be positive");
    if (k == 1) return p;
    if (p.is_zero_poly()) return p;
    long d = p.degree();
    if (d % static_cast<long>(k) != 0)
        throw NotAPowerError("poly_kth_root: degree not divisible by k", d);
    long dr = d / static_cast<long>(k);
    R lead = ring_kth_root_or_throw(p.lc(), k, d);
    std::vector<R> rc(static_cast<std::size_t>(dr) + 1, ring_zero(p.proto()));
    rc[static_cast<std::size_t>(dr)] = lead;
    Poly<R> r(p.var(), rc);
    R klead = ring_pow(lead, k - 1);
    R kfac = ring_zero(p.proto());
    for (unsigned long i = 0; i < k; ++i) kfac = kfac + ring_one(p.proto());
    R denom_inv = ring_inv(kfac * klead);
    for (long j = dr - 1; j >= 0; --j) {
        Poly<R> cur = r.pow(k);
        long idx = j + (static_cast<long>(k) - 1) * dr;
        R needed = p.coeff(idx) - cur.coeff(idx);
        R cj = needed * denom_inv;
        r = r + Poly<R>::monomial(p.var(), cj, j);
    }
    Poly<R> check = r.pow(k);
    if (check != p) {
        long bad = 0;
        for (long i = 0; i <= d; ++i)
            if (!is_zero(check.coeff(i) - p.coeff(i))) {
                bad = i;
                break;
            }
        throw NotAPowerError("poly_kth_root: input is not an exact k-th power", bad);
    }
    return r;
}

template <class R>
R ring_kth_root_or_throw(const R &a, unsigned long k, long where) {
    if (is_zero(a - ring_one(a))) return a;
    if constexpr (requires(const R &x) { R::kth_root(x, k); }) {
        auto [root, ok] = R::kth_root(a, k);
        if (!ok) throw NotAPowerError("poly_kth_root: leading coefficient is not a k-th power", where);
        return root;
    } else {
        throw NotAPowerError("poly_kth_root: cannot take k-th root of leading coefficient", where);
    }
}

} // namespace anharmonia

#endif
