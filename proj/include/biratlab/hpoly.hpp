#pragma once

#include <array>
#include <map>
#include <string>

#include "bipoly.hpp"
#include "projective.hpp"

namespace biratlab {

using Exp3 = std::array<int, 3>;

/// Sparse homogeneous polynomial in x0, x1, x2 over Q(i).  Every stored
/// coefficient is nonzero and all exponent triples sum to the degree.
/// The zero polynomial has empty terms and degree tag -1.
struct HomogeneousPoly3 {
    int deg = -1;
    std::map<Exp3, GaussianRational> terms;

    HomogeneousPoly3() = default;
    explicit HomogeneousPoly3(int degree) : deg(degree) {}

    static HomogeneousPoly3 zero() { return HomogeneousPoly3(); }
    static HomogeneousPoly3 monomial(const Exp3& e, const GaussianRational& c) {
        HomogeneousPoly3 p(e[0] + e[1] + e[2]);
        p.add_term(e, c);
        return p;
    }
    /// Linear form c0*x0 + c1*x1 + c2*x2.
    static HomogeneousPoly3 linear_form(const Vec3& c) {
        HomogeneousPoly3 p(1);
        p.add_term({1, 0, 0}, c[0]);
        p.add_term({0, 1, 0}, c[1]);
        p.add_term({0, 0, 1}, c[2]);
        if (p.terms.empty()) return zero();
        return p;
    }

    bool is_zero() const { return terms.empty(); }
    int degree() const { return is_zero() ? -1 : deg; }

    void add_term(const Exp3& e, const GaussianRational& c) {
        if (c.is_zero()) return;
        if (deg < 0) deg = e[0] + e[1] + e[2];
        if (e[0] + e[1] + e[2] != deg)
            throw DegreeMismatch("term degree does not match polynomial degree");
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
        if (terms.empty()) deg = -1;
    }

    friend HomogeneousPoly3 operator+(const HomogeneousPoly3& a, const HomogeneousPoly3& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.deg != b.deg) throw DegreeMismatch("cannot add forms of different degrees");
        HomogeneousPoly3 r = a;
        for (const auto& [e, c] : b.terms) r.add_term(e, c);
        return r;
    }
    friend HomogeneousPoly3 operator-(const HomogeneousPoly3& a, const HomogeneousPoly3& b) {
        return a + (b * GaussianRational(-1));
    }
    friend HomogeneousPoly3 operator*(const HomogeneousPoly3& a, const HomogeneousPoly3& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        HomogeneousPoly3 r(a.deg + b.deg);
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms)
                r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        return r;
    }
    friend HomogeneousPoly3 operator*(const HomogeneousPoly3& a, const GaussianRational& s) {
        if (s.is_zero()) return zero();
        HomogeneousPoly3 r(a.deg);
        for (const auto& [e, c] : a.terms) r.terms[e] = c * s;
        return r;
    }
    friend bool operator==(const HomogeneousPoly3& a, const HomogeneousPoly3& b) {
        return a.terms == b.terms;
    }
    friend bool operator!=(const HomogeneousPoly3& a, const HomogeneousPoly3& b) { return !(a == b); }

    GaussianRational eval(const Vec3& p) const {
        GaussianRational acc(0);
        for (const auto& [e, c] : terms) {
            GaussianRational t = c;
            for (int v = 0; v < 3; ++v)
                t *= pow(p[static_cast<std::size_t>(v)], static_cast<unsigned>(e[static_cast<std::size_t>(v)]));
            acc += t;
        }
        return acc;
    }

    /// Scale so the lexicographically first stored term has coefficient 1.
    HomogeneousPoly3 normalized() const {
        if (is_zero()) return *this;
        return *this * terms.begin()->second.inv();
    }

    /// Divide every coefficient by the rational content of the real and
    /// imaginary parts (keeps iterate coefficients small; projectively a no-op).
    HomogeneousPoly3 content_reduced() const {
        if (is_zero()) return *this;
        Rational g(0);
        for (const auto& [e, c] : terms) {
            g = rational_gcd(g, c.re);
            g = rational_gcd(g, c.im);
        }
        if (g == 0 || g == 1) return *this;
        return *this * GaussianRational(Rational(1) / g);
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (const auto& [e, c] : terms) {
            std::string mono;
            const char* names[3] = {"x0", "x1", "x2"};
            for (int v = 0; v < 3; ++v) {
                int k = e[static_cast<std::size_t>(v)];
                if (k == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names[v];
                if (k > 1) mono += "^" + std::to_string(k);
            }
            std::string term = mono.empty() ? c.str() : ("(" + c.str() + ")*" + mono);
            out += out.empty() ? term : (" + " + term);
        }
        return out;
    }
};

/// Exact division p / q; throws InexactDivision when q does not divide p.
inline HomogeneousPoly3 exact_div(const HomogeneousPoly3& p, const HomogeneousPoly3& q) {
    if (q.is_zero()) throw DivisionByZero();
    if (p.is_zero()) return HomogeneousPoly3::zero();
    if (p.deg < q.deg) throw InexactDivision("divisor degree exceeds dividend degree");
    HomogeneousPoly3 r = p, out(p.deg - q.deg);
    const auto lq = *q.terms.rbegin(); // largest exponent triple in lex order
    while (!r.is_zero()) {
        const auto lr = *r.terms.rbegin();
        Exp3 e{lr.first[0] - lq.first[0], lr.first[1] - lq.first[1], lr.first[2] - lq.first[2]};
        if (e[0] < 0 || e[1] < 0 || e[2] < 0)
            throw InexactDivision("division leaves a remainder");
        GaussianRational c = lr.second / lq.second;
        HomogeneousPoly3 m = HomogeneousPoly3::monomial(e, c);
        out.add_term(e, c);
        r = r - m * q;
    }
    return out;
}

namespace detail {

inline BiPoly dehomogenize(const HomogeneousPoly3& p) {
    BiPoly out;
    for (const auto& [e, c] : p.terms) out.add_term(e[1], e[2], c);
    return out;
}

inline HomogeneousPoly3 homogenize(const BiPoly& p) {
    int d = p.total_degree();
    HomogeneousPoly3 out(d);
    for (const auto& [e, c] : p.terms)
        out.add_term({d - e.first - e.second, e.first, e.second}, c);
    return out;
}

} // namespace detail

/// gcd of homogeneous polynomials, normalized so the lexicographically first
/// term has coefficient 1.  Monomial content is handled separately, the rest
/// goes through the bivariate primitive PRS.
inline HomogeneousPoly3 hpoly_gcd(const HomogeneousPoly3& p, const HomogeneousPoly3& q) {
    if (p.is_zero() && q.is_zero()) throw Error("gcd(0,0) undefined");
    if (p.is_zero()) return q.normalized();
    if (q.is_zero()) return p.normalized();

    Exp3 mp{p.deg, p.deg, p.deg}, mq{q.deg, q.deg, q.deg};
    for (const auto& [e, c] : p.terms)
        for (int v = 0; v < 3; ++v) mp[static_cast<std::size_t>(v)] = std::min(mp[static_cast<std::size_t>(v)], e[static_cast<std::size_t>(v)]);
    for (const auto& [e, c] : q.terms)
        for (int v = 0; v < 3; ++v) mq[static_cast<std::size_t>(v)] = std::min(mq[static_cast<std::size_t>(v)], e[static_cast<std::size_t>(v)]);
    Exp3 common{std::min(mp[0], mq[0]), std::min(mp[1], mq[1]), std::min(mp[2], mq[2])};

    auto strip = [](const HomogeneousPoly3& f, const Exp3& m) {
        HomogeneousPoly3 out(f.deg - m[0] - m[1] - m[2]);
        for (const auto& [e, c] : f.terms)
            out.add_term({e[0] - m[0], e[1] - m[1], e[2] - m[2]}, c);
        return out;
    };
    HomogeneousPoly3 ps = strip(p, mp), qs = strip(q, mq);

    BiPoly g2 = gcd(detail::dehomogenize(ps), detail::dehomogenize(qs));
    HomogeneousPoly3 g = detail::homogenize(g2);
    HomogeneousPoly3 mono = HomogeneousPoly3::monomial(common, GaussianRational(1));
    return (g * mono).normalized();
}

inline HomogeneousPoly3 hpoly_gcd3(const HomogeneousPoly3& a, const HomogeneousPoly3& b,
                                   const HomogeneousPoly3& c) {
    return hpoly_gcd(hpoly_gcd(a, b), c);
}

/// Component-wise restriction of a map to the line base + t*dir, with the
/// maximal common power of t stripped.
struct LineRestriction {
    std::array<UniPolyG, 3> comp;
    int stripped_power = 0;

    /// Coefficient triple of t^j (post-strip).
    Vec3 coeff(std::size_t j) const {
        return {comp[0].coeff(j), comp[1].coeff(j), comp[2].coeff(j)};
    }
    Vec3 value_at_zero() const { return coeff(0); }
    int max_order() const {
        int m = -1;
        for (const auto& c : comp) m = std::max(m, c.degree());
        return m;
    }
};

inline LineRestriction restrict_to_line(const std::array<HomogeneousPoly3, 3>& components,
                                        const Vec3& base, const Vec3& dir) {
    if (is_zero(base)) throw ZeroVector();
    if (proportional(dir, base)) throw Error("direction is proportional to the base point");

    std::array<UniPolyG, 3> lin;
    for (std::size_t v = 0; v < 3; ++v)
        lin[v] = UniPolyG({base[v], dir[v]});

    LineRestriction out;
    for (std::size_t k = 0; k < 3; ++k) {
        UniPolyG acc;
        for (const auto& [e, c] : components[k].terms) {
            UniPolyG term = UniPolyG::constant(c);
            for (std::size_t v = 0; v < 3; ++v)
                for (int rep = 0; rep < e[v]; ++rep) term = term * lin[v];
            acc += term;
        }
        out.comp[k] = acc;
    }

    int val = INT32_MAX;
    for (const auto& c : out.comp) {
        if (c.is_zero()) continue;
        int v = 0;
        while (c.coeff(static_cast<std::size_t>(v)).is_zero()) ++v;
        val = std::min(val, v);
    }
    if (val == INT32_MAX)
        throw IdenticallyZero("all components vanish on the whole line");
    if (val > 0) {
        for (auto& c : out.comp) {
            if (c.is_zero()) continue;
            c.c.erase(c.c.begin(), c.c.begin() + val);
        }
    }
    out.stripped_power = val;
    return out;
}

} // namespace biratlab
