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

#ifndef ANHARMONIA_MVPOLY_HPP
#define ANHARMONIA_MVPOLY_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "anharmonia/rational.hpp"
#include "anharmonia/util.hpp"

namespace anharmonia {

// Sparse multivariate polynomial over Q. Terms are kept in a map ordered
// lexicographically on the exponent vector, so iteration order (and thus
// printing and hashing) is deterministic. Binary operations merge the two
// variable sets, so polynomials built over different variable lists compose
// freely.
class MvPoly {
  public:
    using Exp = std::vector<int>;

    MvPoly() = default;
    explicit MvPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MvPoly constant(const Rational &c) {
        MvPoly p;
        if (!c.is_zero()) p.terms_[{}] = c;
        return p;
    }
    static MvPoly variable(const std::string &name) {
        MvPoly p;
        p.vars_ = {name};
        p.terms_[{1}] = Rational(1);
        return p;
    }
    static MvPoly monomial(const std::vector<std::string> &vars, Exp e, Rational c) {
        MvPoly p;
        p.vars_ = vars;
        if (!c.is_zero()) p.terms_[std::move(e)] = std::move(c);
        return p;
    }

    const std::vector<std::string> &vars() const { return vars_; }
    const std::map<Exp, Rational> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp(vars_.size(), 0)); }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw DegenerateInputError("MvPoly: not a constant");
        return terms_.begin()->second;
    }

    long degree_in(const std::string &var) const {
        long vi = var_index(var);
        if (vi < 0) return 0;
        long d = 0;
        for (const auto &[e, c] : terms_) d = std::max(d, static_cast<long>(e[static_cast<std::size_t>(vi)]));
        return d;
    }
    long total_degree() const {
        long d = 0;
        for (const auto &[e, c] : terms_) {
            long s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    friend MvPoly operator+(const MvPoly &a, const MvPoly &b) {
        auto [x, y] = aligned(a, b);
        for (const auto &[e, c] : y.terms_) x.add_term(e, c);
        return x;
    }
    friend MvPoly operator-(const MvPoly &a, const MvPoly &b) {
        auto [x, y] = aligned(a, b);
        for (const auto &[e, c] : y.terms_) x.add_term(e, -c);
        return x;
    }
    MvPoly operator-() const {
        MvPoly r = *this;
        for (auto &[e, c] : r.terms_) c = -c;
        return r;
    }
    friend MvPoly operator*(const MvPoly &a, const MvPoly &b) {
        auto [x, y] = aligned(a, b);
        MvPoly r;
        r.vars_ = x.vars_;
        for (const auto &[e1, c1] : x.terms_)
            for (const auto &[e2, c2] : y.terms_) {
                Exp e = e1;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }
    friend MvPoly operator*(const MvPoly &a, const Rational &s) {
        MvPoly r = a;
        if (s.is_zero()) {
            r.terms_.clear();
            return r;
        }
        for (auto &[e, c] : r.terms_) c *= s;
        return r;
    }
    friend MvPoly operator*(const Rational &s, const MvPoly &a) { return a * s; }

    friend bool operator==(const MvPoly &a, const MvPoly &b) { return (a - b).is_zero(); }
    friend bool operator!=(const MvPoly &a, const MvPoly &b) { return !(a == b); }

    MvPoly pow(unsigned long e) const {
        MvPoly r = constant(Rational(1));
        MvPoly base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    MvPoly derivative(const std::string &var) const {
        long vi = var_index(var);
        MvPoly r;
        r.vars_ = vars_;
        if (vi < 0) return r;
        for (const auto &[e, c] : terms_) {
            int k = e[static_cast<std::size_t>(vi)];
            if (k == 0) continue;
            Exp e2 = e;
            e2[static_cast<std::size_t>(vi)] = k - 1;
            r.add_term(e2, c * Rational(k));
        }
        return r;
    }

    MvPoly substitute(const std::string &var, const MvPoly &value) const {
        long vi = var_index(var);
        if (vi < 0) return *this;
        MvPoly r;
        r.vars_ = vars_;
        for (const auto &[e, c] : terms_) {
            int k = e[static_cast<std::size_t>(vi)];
            Exp e2 = e;
            e2[static_cast<std::size_t>(vi)] = 0;
            MvPoly term = monomial(vars_, e2, c);
            if (k > 0) term = term * value.pow(static_cast<unsigned long>(k));
            r = r + term;
        }
        return r;
    }

    Rational eval(const std::map<std::string, Rational> &point) const {
        Rational acc(0);
        for (const auto &[e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                auto it = point.find(vars_[i]);
                if (it == point.end()) throw DegenerateInputError("MvPoly: missing value for " + vars_[i]);
                t *= Rational::pow(it->second, e[i]);
            }
            acc += t;
        }
        return acc;
    }

    // exact division (throws when not exact); greedy lex leading-term loop
    static MvPoly div_exact(const MvPoly &a, const MvPoly &b) {
        if (b.is_zero()) throw DegenerateInputError("MvPoly: division by zero");
        auto [f, g] = aligned(a, b);
        MvPoly q;
        q.vars_ = f.vars_;
        const auto &ltg = g.lead();
        while (!f.is_zero()) {
            const auto &ltf = f.lead();
            Exp e(f.vars_.size());
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ltf.first[i] - ltg.first[i];
                if (e[i] < 0) throw DegenerateInputError("MvPoly: division not exact");
            }
            Rational c = ltf.second / ltg.second;
            MvPoly t = monomial(f.vars_, e, c);
            q = q + t;
            f = f - t * g;
        }
        return q;
    }

    // rational content: gcd of numerators over lcm of denominators
    Rational content() const {
        if (terms_.empty()) return Rational(1);
        Int g(0), l(1);
        for (const auto &[e, c] : terms_) {
            g = Int::gcd(g, c.num());
            l = Int::div_exact(l * c.den(), Int::gcd(l, c.den()));
        }
        return Rational(g, l);
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!s.empty()) s += " + ";
            s += it->second.str();
            for (std::size_t i = 0; i < it->first.size(); ++i) {
                if (it->first[i] == 0) continue;
                s += "*" + vars_[i];
                if (it->first[i] != 1) s += "^" + std::to_string(it->first[i]);
            }
        }
        return s;
    }

  private:
    long var_index(const std::string &var) const {
        auto it = std::find(vars_.begin(), vars_.end(), var);
        return it == vars_.end() ? -1 : static_cast<long>(it - vars_.begin());
    }
    void add_term(const Exp &e, const Rational &c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    const std::pair<const Exp, Rational> &lead() const { return *terms_.rbegin(); }

    // remap both polynomials onto the union of their variable lists
    static std::pair<MvPoly, MvPoly> aligned(const MvPoly &a, const MvPoly &b) {
        if (a.vars_ == b.vars_) return {a, b};
        std::vector<std::string> u = a.vars_;
        for (const auto &v : b.vars_)
            if (std::find(u.begin(), u.end(), v) == u.end()) u.push_back(v);
        std::sort(u.begin(), u.end());
        return {a.remapped(u), b.remapped(u)};
    }
    MvPoly remapped(const std::vector<std::string> &u) const {
        MvPoly r;
        r.vars_ = u;
        std::vector<std::size_t> pos(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i)
            pos[i] = static_cast<std::size_t>(std::find(u.begin(), u.end(), vars_[i]) - u.begin());
        for (const auto &[e, c] : terms_) {
            Exp e2(u.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) e2[pos[i]] = e[i];
            r.terms_.emplace(std::move(e2), c);
        }
        return r;
    }

    std::vector<std::string> vars_;
    std::map<Exp, Rational> terms_;
};

inline MvPoly ring_zero(const MvPoly &p) { return MvPoly(p.vars()); }
inline MvPoly ring_one(const MvPoly &p) {
    (void)p;
    return MvPoly::constant(Rational(1));
}
inline bool is_zero(const MvPoly &p) { return p.is_zero(); }
inline MvPoly ring_divexact(const MvPoly &a, const MvPoly &b) { return MvPoly::div_exact(a, b); }

// Fraction field over MvPoly. Fractions are not gcd-reduced (multivariate
// gcd is out of scope); the rational content is stripped to keep integer
// growth in check, and equality is decided by cross-multiplication.
class MvFrac {
  public:
    MvFrac() : num_(), den_(MvPoly::constant(Rational(1))) {}
    MvFrac(MvPoly num, MvPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
    MvFrac(const MvPoly &p) : num_(p), den_(MvPoly::constant(Rational(1))) {} // NOLINT
    MvFrac(const Rational &r) : num_(MvPoly::constant(r)), den_(MvPoly::constant(Rational(1))) {} // NOLINT
    static MvFrac variable(const std::string &name) { return MvFrac(MvPoly::variable(name)); }

    const MvPoly &num() const { return num_; }
    const MvPoly &den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend MvFrac operator+(const MvFrac &a, const MvFrac &b) {
        return MvFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend MvFrac operator-(const MvFrac &a, const MvFrac &b) {
        return MvFrac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend MvFrac operator*(const MvFrac &a, const MvFrac &b) { return MvFrac(a.num_ * b.num_, a.den_ * b.den_); }
    friend MvFrac operator/(const MvFrac &a, const MvFrac &b) {
        if (b.is_zero()) throw DegenerateInputError("MvFrac: division by zero");
        return MvFrac(a.num_ * b.den_, a.den_ * b.num_);
    }
    MvFrac operator-() const { return MvFrac(-num_, den_); }

    MvFrac inv() const {
        if (is_zero()) throw DegenerateInputError("MvFrac: inverse of zero");
        return MvFrac(den_, num_);
    }

    friend bool operator==(const MvFrac &a, const MvFrac &b) { return (a.num_ * b.den_ - b.num_ * a.den_).is_zero(); }
    friend bool operator!=(const MvFrac &a, const MvFrac &b) { return !(a == b); }

    std::string str() const {
        if (den_ == MvPoly::constant(Rational(1))) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

  private:
    void normalize() {
        if (den_.is_zero()) throw DegenerateInputError("MvFrac: zero denominator");
        if (num_.is_zero()) {
            den_ = MvPoly::constant(Rational(1));
            return;
        }
        // scale both sides by the denominator's content so den has content 1
        Rational cd = den_.content();
        if (cd.sign() < 0) cd = -cd;
        if (!cd.is_one()) {
            Rational f = cd.inv();
            num_ = num_ * f;
            den_ = den_ * f;
        }
    }

    MvPoly num_, den_;
};

inline MvFrac ring_zero(const MvFrac &) { return MvFrac(Rational(0)); }
inline MvFrac ring_one(const MvFrac &) { return MvFrac(Rational(1)); }
inline bool is_zero(const MvFrac &p) { return p.is_zero(); }
inline MvFrac ring_inv(const MvFrac &p) { return p.inv(); }

// partial derivative of a fraction by the quotient rule
inline MvFrac derivative(const MvFrac &f, const std::string &var) {
    return MvFrac(f.num().derivative(var) * f.den() - f.num() * f.den().derivative(var),
                  f.den() * f.den());
}

} // namespace anharmonia

#endif
