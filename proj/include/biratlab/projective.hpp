#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace biratlab {

using Vec3 = std::array<GaussianRational, 3>;

inline bool is_zero(const Vec3& v) {
    return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

inline GaussianRational dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

inline Vec3 operator*(const Vec3& v, const GaussianRational& s) {
    return {v[0] * s, v[1] * s, v[2] * s};
}

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline bool proportional(const Vec3& a, const Vec3& b) {
    return is_zero(cross(a, b));
}

namespace detail {
/// Scale so the first nonzero coordinate becomes 1.  Canonical representative
/// of the projective class; idempotent.
inline Vec3 canonicalize(const Vec3& raw) {
    if (is_zero(raw)) throw ZeroVector();
    for (int i = 0; i < 3; ++i) {
        if (!raw[static_cast<std::size_t>(i)].is_zero()) {
            GaussianRational s = raw[static_cast<std::size_t>(i)].inv();
            return raw * s;
        }
    }
    throw ZeroVector();
}
} // namespace detail

/// Point of P^2 over Q(i) in canonical form (first nonzero coordinate is 1).
struct ProjPoint {
    Vec3 v;

    ProjPoint() : v{GaussianRational(1), GaussianRational(0), GaussianRational(0)} {}
    explicit ProjPoint(const Vec3& raw) : v(detail::canonicalize(raw)) {}
    ProjPoint(GaussianRational a, GaussianRational b, GaussianRational c)
        : ProjPoint(Vec3{std::move(a), std::move(b), std::move(c)}) {}

    /// Index of the pivot coordinate (the one normalized to 1).
    int pivot() const {
        for (int i = 0; i < 3; ++i)
            if (!v[static_cast<std::size_t>(i)].is_zero()) return i;
        return -1;
    }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.v == b.v; }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
        for (int i = 0; i < 3; ++i) {
            const auto& x = a.v[static_cast<std::size_t>(i)];
            const auto& y = b.v[static_cast<std::size_t>(i)];
            if (x != y) return x < y;
        }
        return false;
    }

    std::string str() const {
        return "[" + v[0].str() + ":" + v[1].str() + ":" + v[2].str() + "]";
    }
};

/// Line of P^2, stored by the coefficients of its linear form, same
/// canonical form as points.  Incidence is the exact dot-product test.
struct ProjLine {
    Vec3 v;

    ProjLine() : v{GaussianRational(1), GaussianRational(0), GaussianRational(0)} {}
    explicit ProjLine(const Vec3& raw) : v(detail::canonicalize(raw)) {}
    ProjLine(GaussianRational a, GaussianRational b, GaussianRational c)
        : ProjLine(Vec3{std::move(a), std::move(b), std::move(c)}) {}

    bool contains(const ProjPoint& p) const { return dot(v, p.v).is_zero(); }

    friend bool operator==(const ProjLine& a, const ProjLine& b) { return a.v == b.v; }
    friend bool operator!=(const ProjLine& a, const ProjLine& b) { return !(a == b); }

    std::string str() const {
        return "{" + v[0].str() + "*x0 + " + v[1].str() + "*x1 + " + v[2].str() + "*x2 = 0}";
    }
};

inline ProjPoint normalize_point(const Vec3& raw) { return ProjPoint(raw); }

inline ProjLine line_through(const ProjPoint& p, const ProjPoint& q) {
    return ProjLine(cross(p.v, q.v));
}

inline ProjPoint intersect(const ProjLine& l, const ProjLine& m) {
    return ProjPoint(cross(l.v, m.v));
}

/// Deterministic rational points on a line, skipping a caller-supplied
/// avoid list.  The line always carries infinitely many Q(i)-points; two
/// independent generators are combined with small integer weights.
inline std::vector<ProjPoint> points_on_line(const ProjLine& line,
                                             const std::vector<ProjPoint>& avoid,
                                             std::size_t count) {
    const Vec3& l = line.v;
    std::array<Vec3, 3> cands = {
        Vec3{GaussianRational(0), l[2], -l[1]},
        Vec3{l[2], GaussianRational(0), -l[0]},
        Vec3{l[1], -l[0], GaussianRational(0)}};
    std::vector<Vec3> gens;
    for (const auto& c : cands) {
        if (is_zero(c)) continue;
        bool dup = false;
        for (const auto& g : gens)
            if (proportional(c, g)) { dup = true; break; }
        if (!dup) gens.push_back(c);
        if (gens.size() == 2) break;
    }
    if (gens.size() < 2) throw Error("degenerate line");

    std::vector<ProjPoint> out;
    auto push_if_ok = [&](const Vec3& raw) {
        if (is_zero(raw)) return;
        ProjPoint p(raw);
        for (const auto& a : avoid)
            if (a == p) return;
        for (const auto& o : out)
            if (o == p) return;
        out.push_back(p);
    };
    for (long t = 0; out.size() < count && t < 64; ++t) {
        if (t == 0) {
            push_if_ok(gens[0]);
            push_if_ok(gens[1]);
        } else {
            push_if_ok(gens[0] + gens[1] * GaussianRational(t));
        }
    }
    if (out.size() < count) throw Error("could not sample enough points on line");
    return out;
}

} // namespace biratlab
