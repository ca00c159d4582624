#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unipoly.hpp"

namespace biratlab {

/// Isolating interval for one real root.  When `exact` is set the root is
/// the rational lo == hi itself.
struct RootInterval {
    Rational lo;
    Rational hi;
    bool exact = false;

    bool contains(const Rational& x) const {
        if (exact) return x == lo;
        return lo < x && x <= hi;
    }
};

namespace detail {

inline int sgn(const Rational& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

inline std::vector<UniPolyQ> sturm_chain(const UniPolyQ& p) {
    std::vector<UniPolyQ> chain;
    chain.push_back(p);
    UniPolyQ d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        const UniPolyQ& a = chain[chain.size() - 2];
        const UniPolyQ& b = chain[chain.size() - 1];
        auto [q, r] = divmod(a, b);
        (void)q;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

inline int sign_variations(const std::vector<UniPolyQ>& chain, const Rational& x) {
    int vars = 0, prev = 0;
    for (const auto& s : chain) {
        int cur = sgn(s.eval(x));
        if (cur == 0) continue;
        if (prev != 0 && cur != prev) ++vars;
        prev = cur;
    }
    return vars;
}

} // namespace detail

/// Square-free part p / gcd(p, p').
inline UniPolyQ squarefree_part(const UniPolyQ& p) {
    if (p.is_zero()) throw Error("square-free part of zero polynomial");
    UniPolyQ g = gcd(p, p.derivative());
    if (g.degree() == 0) return monic(p);
    auto [q, r] = divmod(p, g);
    if (!r.is_zero()) throw Error("square-free division not exact");
    return monic(q);
}

/// Cauchy bound: every real root lies in (-B, B].
inline Rational root_bound(const UniPolyQ& p) {
    Rational m(0);
    for (std::size_t i = 0; i + 1 < p.c.size(); ++i) {
        Rational a = boost::multiprecision::abs(p.c[i] / p.lead());
        if (a > m) m = a;
    }
    return m + 1;
}

/// Number of distinct real roots of the square-free `sf` in (lo, hi],
/// assuming sf(lo) != 0.
inline int sturm_count(const UniPolyQ& sf, const Rational& lo, const Rational& hi) {
    auto chain = detail::sturm_chain(sf);
    return detail::sign_variations(chain, lo) - detail::sign_variations(chain, hi);
}

/// Disjoint isolating intervals for all distinct real roots, sorted
/// in increasing order.  Works on the square-free part, so multiple roots
/// are reported once.
inline std::vector<RootInterval> isolate_real_roots(const UniPolyQ& p) {
    if (p.is_zero()) throw Error("cannot isolate roots of the zero polynomial");
    UniPolyQ sf = squarefree_part(p);
    if (sf.degree() == 0) return {};
    auto chain = detail::sturm_chain(sf);
    auto count = [&](const Rational& a, const Rational& b) {
        return detail::sign_variations(chain, a) - detail::sign_variations(chain, b);
    };

    Rational bound = root_bound(sf);
    std::vector<RootInterval> out;

    // Depth-first bisection of half-open intervals (lo, hi].
    struct Seg { Rational lo, hi; int n; };
    std::vector<Seg> stack;
    int total = count(-bound, bound);
    if (total == 0) return {};
    stack.push_back({-bound, bound, total});
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.n == 0) continue;
        if (s.n == 1) {
            // Shrink until the endpoints certify, then emit.
            Rational lo = s.lo, hi = s.hi;
            if (sf.eval(hi) == 0) {
                out.push_back({hi, hi, true});
                continue;
            }
            out.push_back({lo, hi, false});
            continue;
        }
        Rational mid = (s.lo + s.hi) / 2;
        if (sf.eval(mid) == 0) {
            // Exact root at the midpoint: carve out a shrinking ball around it
            // until the ball contains only this root.
            Rational w = (s.hi - s.lo) / 4;
            while (count(mid - w, mid + w) != 1) w /= 2;
            stack.push_back({s.lo, mid - w, count(s.lo, mid - w)});
            out.push_back({mid, mid, true});
            stack.push_back({mid + w, s.hi, count(mid + w, s.hi)});
        } else {
            stack.push_back({mid, s.hi, count(mid, s.hi)});
            stack.push_back({s.lo, mid, count(s.lo, mid)});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

/// Gateway for Q(i)-coefficient polynomials; rejects nonzero imaginary parts.
inline std::vector<RootInterval> isolate_real_roots(const UniPolyG& p) {
    std::vector<Rational> coeffs(p.c.size());
    for (std::size_t i = 0; i < p.c.size(); ++i) {
        if (p.c[i].im != 0) throw NonRealCoefficients();
        coeffs[i] = p.c[i].re;
    }
    return isolate_real_roots(UniPolyQ(std::move(coeffs)));
}

struct LargestRoot {
    Rational approx;   // within tol of the true largest real root
    Rational lo, hi;   // certifying interval: exact root, or sign change of the square-free part
    bool exact = false;
};

/// Largest real root refined to width <= tol by rational bisection.
inline LargestRoot largest_real_root(const UniPolyQ& p, const Rational& tol) {
    auto roots = isolate_real_roots(p);
    if (roots.empty()) throw NoRealRoot();
    RootInterval last = roots.back();
    if (last.exact) return {last.lo, last.lo, last.lo, true};

    UniPolyQ sf = squarefree_part(p);
    Rational lo = last.lo, hi = last.hi;
    int slo = detail::sgn(sf.eval(lo));
    int shi = detail::sgn(sf.eval(hi));
    if (shi == 0) return {hi, hi, hi, true};
    if (slo == shi) throw Error("isolating interval lost its sign change");
    while (hi - lo > tol) {
        Rational mid = (lo + hi) / 2;
        int sm = detail::sgn(sf.eval(mid));
        if (sm == 0) return {mid, mid, mid, true};
        if (sm == slo) lo = mid;
        else hi = mid;
    }
    return {(lo + hi) / 2, lo, hi, false};
}

inline LargestRoot largest_real_root(const UniPolyZ& p, const Rational& tol) {
    return largest_real_root(to_rational(p), tol);
}

/// Fixed-precision decimal rendering of a rational, round half away from
/// zero, trailing zeros trimmed.  Deterministic: no floating point involved.
inline std::string decimal_string(const Rational& r, unsigned digits = 15) {
    BigInt scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    Rational scaled = boost::multiprecision::abs(r) * scale;
    // round half away from zero
    BigInt units = num(scaled) / den(scaled);
    Rational frac = scaled - units;
    if (2 * num(frac) >= den(frac)) ++units;
    BigInt ip = units / scale;
    BigInt fp = units % scale;
    std::ostringstream os;
    if (r < 0 && units != 0) os << '-';
    os << ip;
    std::string fsr = fp.str();
    std::string frac_s = std::string(digits - fsr.size(), '0') + fsr;
    while (!frac_s.empty() && frac_s.back() == '0') frac_s.pop_back();
    if (!frac_s.empty()) os << '.' << frac_s;
    return os.str();
}

} // namespace biratlab
