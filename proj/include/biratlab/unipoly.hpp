#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "rational.hpp"

namespace biratlab {

/// Dense univariate polynomial, coefficients from constant to leading term.
/// The zero polynomial has an empty coefficient list; otherwise the leading
/// coefficient is nonzero.
template <typename C>
struct UniPoly {
    std::vector<C> c;

    UniPoly() = default;
    explicit UniPoly(std::vector<C> coeffs) : c(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly{}; }
    static UniPoly constant(const C& v) { return UniPoly(std::vector<C>{v}); }
    /// The monomial x^n.
    static UniPoly xpow(std::size_t n) {
        std::vector<C> v(n + 1, C(0));
        v[n] = C(1);
        return UniPoly(std::move(v));
    }

    void trim() {
        while (!c.empty() && c.back() == C(0)) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    /// Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const C& lead() const { return c.back(); }
    C coeff(std::size_t i) const { return i < c.size() ? c[i] : C(0); }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<C> r(std::max(a.c.size(), b.c.size()), C(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<C> r(std::max(a.c.size(), b.c.size()), C(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a) {
        std::vector<C> r = a.c;
        for (auto& v : r) v = -v;
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<C> r(a.c.size() + b.c.size() - 1, C(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == C(0)) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        }
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const UniPoly& a, const C& s) {
        std::vector<C> r = a.c;
        for (auto& v : r) v = v * s;
        return UniPoly(std::move(r));
    }
    UniPoly& operator+=(const UniPoly& o) { *this = *this + o; return *this; }
    UniPoly& operator-=(const UniPoly& o) { *this = *this - o; return *this; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c == b.c; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    C eval(const C& x) const {
        C acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UniPoly derivative() const {
        if (c.size() <= 1) return zero();
        std::vector<C> r(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i) r[i - 1] = c[i] * C(static_cast<long>(i));
        return UniPoly(std::move(r));
    }

    /// x^k * this.
    UniPoly shift(std::size_t k) const {
        if (is_zero()) return zero();
        std::vector<C> r(c.size() + k, C(0));
        std::copy(c.begin(), c.end(), r.begin() + static_cast<long>(k));
        return UniPoly(std::move(r));
    }

    std::string str(const std::string& var = "x") const;
};

/// Quotient and remainder over a coefficient field.
template <typename C>
std::pair<UniPoly<C>, UniPoly<C>> divmod(const UniPoly<C>& a, const UniPoly<C>& b) {
    if (b.is_zero()) throw DivisionByZero();
    UniPoly<C> r = a;
    if (a.degree() < b.degree()) return {UniPoly<C>::zero(), r};
    std::vector<C> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, C(0));
    C binv = C(1) / b.lead();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        std::size_t k = static_cast<std::size_t>(r.degree() - b.degree());
        C f = r.lead() * binv;
        q[k] = f;
        for (std::size_t i = 0; i < b.c.size(); ++i)
            r.c[k + i] -= f * b.c[i];
        r.trim();
    }
    return {UniPoly<C>(std::move(q)), r};
}

template <typename C>
UniPoly<C> monic(const UniPoly<C>& p) {
    if (p.is_zero()) return p;
    return p * (C(1) / p.lead());
}

/// Monic gcd over a coefficient field.
template <typename C>
UniPoly<C> gcd(UniPoly<C> a, UniPoly<C> b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

template <typename C>
std::string UniPoly<C>::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const C& v = c[static_cast<std::size_t>(i)];
        if (v == C(0)) continue;
        std::ostringstream term;
        term << v;
        std::string coeff_s = term.str();
        bool neg = !coeff_s.empty() && coeff_s[0] == '-';
        if (!out.empty()) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        if (neg) coeff_s = coeff_s.substr(1);
        if (i == 0) {
            out += coeff_s;
        } else {
            if (coeff_s != "1") out += coeff_s + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

using UniPolyZ = UniPoly<BigInt>;
using UniPolyQ = UniPoly<Rational>;
using UniPolyG = UniPoly<GaussianRational>;

inline UniPolyQ to_rational(const UniPolyZ& p) {
    std::vector<Rational> v(p.c.size());
    for (std::size_t i = 0; i < p.c.size(); ++i) v[i] = Rational(p.c[i]);
    return UniPolyQ(std::move(v));
}

/// Integer polynomial from low-to-high coefficients given as longs.
inline UniPolyZ zpoly(std::initializer_list<long> coeffs) {
    std::vector<BigInt> v;
    v.reserve(coeffs.size());
    for (long x : coeffs) v.emplace_back(x);
    return UniPolyZ(std::move(v));
}

} // namespace biratlab
