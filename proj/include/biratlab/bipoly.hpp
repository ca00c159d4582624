#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "unipoly.hpp"

namespace biratlab {

/// Sparse bivariate polynomial in affine variables x, y over Q(i).
struct BiPoly {
    // (x-exponent, y-exponent) -> nonzero coefficient
    std::map<std::pair<int, int>, GaussianRational> terms;

    BiPoly() = default;

    static BiPoly constant(const GaussianRational& c) {
        BiPoly p;
        if (!c.is_zero()) p.terms[{0, 0}] = c;
        return p;
    }
    static BiPoly var_x() { return monomial(1, 0, GaussianRational(1)); }
    static BiPoly var_y() { return monomial(0, 1, GaussianRational(1)); }
    static BiPoly monomial(int i, int j, const GaussianRational& c) {
        BiPoly p;
        if (!c.is_zero()) p.terms[{i, j}] = c;
        return p;
    }

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const {
        return terms.empty() || (terms.size() == 1 && terms.begin()->first == std::make_pair(0, 0));
    }

    int deg_x() const {
        int d = -1;
        for (const auto& [e, c] : terms) d = std::max(d, e.first);
        return d;
    }
    int deg_y() const {
        int d = -1;
        for (const auto& [e, c] : terms) d = std::max(d, e.second);
        return d;
    }
    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms) d = std::max(d, e.first + e.second);
        return d;
    }

    void add_term(int i, int j, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(i, j);
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [e, c] : b.terms) r.add_term(e.first, e.second, c);
        return r;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [e, c] : b.terms) r.add_term(e.first, e.second, -c);
        return r;
    }
    friend BiPoly operator-(const BiPoly& a) {
        BiPoly r;
        for (const auto& [e, c] : a.terms) r.terms[e] = -c;
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms)
                r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const GaussianRational& s) {
        if (s.is_zero()) return BiPoly();
        BiPoly r;
        for (const auto& [e, c] : a.terms) r.terms[e] = c * s;
        return r;
    }
    BiPoly& operator+=(const BiPoly& o) { for (const auto& [e, c] : o.terms) add_term(e.first, e.second, c); return *this; }
    BiPoly& operator-=(const BiPoly& o) { for (const auto& [e, c] : o.terms) add_term(e.first, e.second, -c); return *this; }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms == b.terms; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    GaussianRational eval(const GaussianRational& x, const GaussianRational& y) const {
        GaussianRational acc(0);
        for (const auto& [e, c] : terms)
            acc += c * pow(x, static_cast<unsigned>(e.first)) * pow(y, static_cast<unsigned>(e.second));
        return acc;
    }

    BiPoly pow_int(unsigned n) const {
        BiPoly acc = constant(GaussianRational(1));
        BiPoly base = *this;
        while (n) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    /// View as a polynomial in y with coefficients in Q(i)[x].
    std::vector<UniPolyG> y_coeffs() const {
        std::vector<UniPolyG> out(static_cast<std::size_t>(std::max(0, deg_y() + 1)));
        for (const auto& [e, c] : terms) {
            auto& p = out[static_cast<std::size_t>(e.second)];
            if (p.c.size() <= static_cast<std::size_t>(e.first))
                p.c.resize(static_cast<std::size_t>(e.first) + 1, GaussianRational(0));
            p.c[static_cast<std::size_t>(e.first)] = c;
        }
        for (auto& p : out) p.trim();
        return out;
    }

    static BiPoly from_y_coeffs(const std::vector<UniPolyG>& ys) {
        BiPoly r;
        for (std::size_t j = 0; j < ys.size(); ++j)
            for (std::size_t i = 0; i < ys[j].c.size(); ++i)
                r.add_term(static_cast<int>(i), static_cast<int>(j), ys[j].c[i]);
        return r;
    }

    std::string str() const;
};

namespace detail {

// y-polynomials with coefficients in Q(i)[x], used by the primitive PRS.
using YPoly = std::vector<UniPolyG>; // index = y-degree

inline void ytrim(YPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline UniPolyG ycontent(const YPoly& p) {
    UniPolyG g;
    for (const auto& c : p) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? monic(c) : gcd(g, c);
        if (g.degree() == 0) return UniPolyG::constant(GaussianRational(1));
    }
    return g;
}

inline YPoly ydiv_exact(const YPoly& p, const UniPolyG& d) {
    YPoly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].is_zero()) continue;
        auto [q, r] = divmod(p[i], d);
        if (!r.is_zero()) throw Error("bivariate content division not exact");
        out[i] = q;
    }
    return out;
}

inline YPoly yscale(const YPoly& p, const UniPolyG& s) {
    YPoly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i] * s;
    return out;
}

/// Pseudo-remainder of a by b (deg a >= deg b >= 0 in y).
inline YPoly yprem(YPoly a, const YPoly& b) {
    int da = static_cast<int>(a.size()) - 1;
    int db = static_cast<int>(b.size()) - 1;
    const UniPolyG& lb = b.back();
    while (da >= db && !a.empty()) {
        UniPolyG la = a.back();
        a = yscale(a, lb);
        // lb*a - la * y^{da-db} * b cancels the leading term
        for (int i = 0; i <= db; ++i)
            a[static_cast<std::size_t>(da - db + i)] -= la * b[static_cast<std::size_t>(i)];
        ytrim(a);
        da = static_cast<int>(a.size()) - 1;
    }
    return a;
}

inline YPoly yprimitive_gcd(YPoly a, YPoly b) {
    ytrim(a);
    ytrim(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    while (true) {
        if (b.size() == 1) {
            // gcd with an element of Q(i)[x]
            if (b[0].degree() == 0) return {UniPolyG::constant(GaussianRational(1))};
            return {gcd(ycontent(a), b[0])};
        }
        YPoly r = yprem(a, b);
        ytrim(r);
        if (r.empty()) return ydiv_exact(b, ycontent(b));
        a = std::move(b);
        b = ydiv_exact(r, ycontent(r));
    }
}

} // namespace detail

/// gcd over Q(i)[x,y] up to a scalar unit; the result is normalized so its
/// lexicographically first term (in (x,y) exponent order) has coefficient 1.
inline BiPoly gcd(const BiPoly& P, const BiPoly& Q) {
    if (P.is_zero() && Q.is_zero()) throw Error("gcd(0,0) undefined");
    auto normalize = [](BiPoly g) {
        if (!g.is_zero()) {
            GaussianRational s = g.terms.begin()->second.inv();
            g = g * s;
        }
        return g;
    };
    if (P.is_zero()) return normalize(Q);
    if (Q.is_zero()) return normalize(P);

    detail::YPoly a = P.y_coeffs(), b = Q.y_coeffs();
    UniPolyG ca = detail::ycontent(a), cb = detail::ycontent(b);
    detail::YPoly pa = detail::ydiv_exact(a, ca), pb = detail::ydiv_exact(b, cb);
    detail::YPoly g = detail::yprimitive_gcd(pa, pb);
    UniPolyG cg = gcd(ca, cb);
    detail::YPoly full = detail::yscale(detail::ydiv_exact(g, detail::ycontent(g)), cg);
    return normalize(BiPoly::from_y_coeffs(full));
}

/// Exact division; throws InexactDivision when q does not divide p.
inline BiPoly div_exact(const BiPoly& p, const BiPoly& q) {
    if (q.is_zero()) throw DivisionByZero();
    BiPoly r = p, out;
    // leading term in graded-lex on (total degree, x-exponent)
    auto lead = [](const BiPoly& f) {
        auto best = f.terms.begin();
        for (auto it = f.terms.begin(); it != f.terms.end(); ++it) {
            int dt = it->first.first + it->first.second;
            int db = best->first.first + best->first.second;
            if (dt > db || (dt == db && it->first.first > best->first.first)) best = it;
        }
        return best;
    };
    auto lq = lead(q);
    while (!r.is_zero()) {
        auto lr = lead(r);
        int di = lr->first.first - lq->first.first;
        int dj = lr->first.second - lq->first.second;
        if (di < 0 || dj < 0) throw InexactDivision("bivariate division leaves a remainder");
        GaussianRational c = lr->second / lq->second;
        BiPoly m = BiPoly::monomial(di, dj, c);
        out += m;
        r -= m * q;
    }
    return out;
}

inline std::string BiPoly::str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        std::string coeff = it->second.str();
        std::string mono;
        if (it->first.first > 0) {
            mono += "x";
            if (it->first.first > 1) mono += "^" + std::to_string(it->first.first);
        }
        if (it->first.second > 0) {
            if (!mono.empty()) mono += "*";
            mono += "y";
            if (it->first.second > 1) mono += "^" + std::to_string(it->first.second);
        }
        std::string term;
        if (mono.empty()) term = coeff;
        else if (coeff == "1") term = mono;
        else if (coeff == "-1") term = "-" + mono;
        else {
            bool needs_parens = it->second.im != 0 || (it->second.re != 0 && it->second.im != 0);
            term = (needs_parens ? "(" + coeff + ")" : coeff) + "*" + mono;
        }
        if (out.empty()) out = term;
        else if (!term.empty() && term[0] == '-') out += " - " + term.substr(1);
        else out += " + " + term;
    }
    return out;
}

} // namespace biratlab
