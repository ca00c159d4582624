#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bipoly.hpp"
#include "hpoly.hpp"
#include "projective.hpp"

namespace biratlab {

/// The nine parameters of f(x,y) = (a0+a1x+a2y, (b0+b1x+b2y)/(c0+c1x+c2y)).
struct MapParams {
    Vec3 alpha;
    Vec3 beta;
    Vec3 gamma;

    std::string str() const {
        auto t = [](const Vec3& v) {
            return "[" + v[0].str() + ", " + v[1].str() + ", " + v[2].str() + "]";
        };
        return "alpha=" + t(alpha) + " beta=" + t(beta) + " gamma=" + t(gamma);
    }
};

/// 2x2 minor u_i v_j - u_j v_i.
inline GaussianRational minor_ij(const Vec3& u, const Vec3& v, int i, int j) {
    return u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)]
         - u[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(i)];
}

/// A projective map given by three homogeneous components of equal degree.
struct ProjMap3 {
    std::array<HomogeneousPoly3, 3> comp;

    Vec3 eval_raw(const ProjPoint& p) const {
        return {comp[0].eval(p.v), comp[1].eval(p.v), comp[2].eval(p.v)};
    }
    bool indeterminate_at(const ProjPoint& p) const { return is_zero(eval_raw(p)); }
    ProjPoint eval(const ProjPoint& p) const {
        Vec3 img = eval_raw(p);
        if (is_zero(img)) throw IndeterminatePoint("map undefined at " + p.str());
        return ProjPoint(img);
    }
};

/// A validated member of the family: projective extension, inverse,
/// indeterminacy points O_i, inverse-indeterminacy points A_i and the
/// exceptional lines S_i, T_i.
struct QuadraticMap {
    MapParams params;
    std::array<HomogeneousPoly3, 3> comp;      // F1, F2, F3 of the extension
    std::array<HomogeneousPoly3, 3> inv_comp;  // extension of f^{-1}
    std::array<ProjPoint, 3> O;                // indeterminacy of F
    bool degenerate = false;
    std::string degeneracy_witness;

    // populated only for non-degenerate maps
    std::optional<std::array<ProjPoint, 3>> A;
    std::optional<std::array<ProjLine, 3>> S;
    std::optional<std::array<ProjLine, 3>> T;

    Vec3 eval_raw(const ProjPoint& p) const {
        return {comp[0].eval(p.v), comp[1].eval(p.v), comp[2].eval(p.v)};
    }
    bool in_indeterminacy(const ProjPoint& p) const { return is_zero(eval_raw(p)); }

    ProjMap3 forward() const { return ProjMap3{comp}; }
    ProjMap3 inverse() const { return ProjMap3{inv_comp}; }

    const std::array<ProjPoint, 3>& a_points() const {
        if (!A) throw DegenerateMap(degeneracy_witness);
        return *A;
    }
    const std::array<ProjLine, 3>& s_lines() const {
        if (!S) throw DegenerateMap(degeneracy_witness);
        return *S;
    }
    const std::array<ProjLine, 3>& t_lines() const {
        if (!T) throw DegenerateMap(degeneracy_witness);
        return *T;
    }

    /// Index j with O_j == p, or -1.
    int which_O(const ProjPoint& p) const {
        for (int i = 0; i < 3; ++i)
            if (O[static_cast<std::size_t>(i)] == p) return i;
        return -1;
    }
};

inline ProjPoint eval_point(const QuadraticMap& map, const ProjPoint& p) {
    return map.forward().eval(p);
}

inline BiPoly jacobian_numerator(const QuadraticMap& m, bool forward) {
    const Vec3 &al = m.params.alpha, &be = m.params.beta, &ga = m.params.gamma;
    GaussianRational bg01 = minor_ij(be, ga, 0, 1);
    GaussianRational bg02 = minor_ij(be, ga, 0, 2);
    GaussianRational bg12 = minor_ij(be, ga, 1, 2);
    BiPoly p;
    if (forward) {
        p.add_term(0, 0, al[1] * bg02 - al[2] * bg01);
        p.add_term(1, 0, al[1] * bg12);
        p.add_term(0, 1, al[2] * bg12);
    } else {
        p.add_term(0, 0, al[0] * bg12 - al[1] * bg02 + al[2] * bg01);
        p.add_term(0, 1, -bg12);
    }
    return p;
}

namespace detail {

inline std::array<HomogeneousPoly3, 3> family_components(const MapParams& pr) {
    HomogeneousPoly3 x0 = HomogeneousPoly3::monomial({1, 0, 0}, GaussianRational(1));
    HomogeneousPoly3 A = HomogeneousPoly3::linear_form(pr.alpha);
    HomogeneousPoly3 B = HomogeneousPoly3::linear_form(pr.beta);
    HomogeneousPoly3 C = HomogeneousPoly3::linear_form(pr.gamma);
    return {x0 * C, A * C, x0 * B};
}

inline std::array<HomogeneousPoly3, 3> inverse_components(const MapParams& pr) {
    const Vec3 &al = pr.alpha, &be = pr.beta, &ga = pr.gamma;
    GaussianRational ab01 = minor_ij(al, be, 0, 1), ab02 = minor_ij(al, be, 0, 2),
                     ab12 = minor_ij(al, be, 1, 2);
    GaussianRational ag01 = minor_ij(al, ga, 0, 1), ag02 = minor_ij(al, ga, 0, 2),
                     ag12 = minor_ij(al, ga, 1, 2);

    HomogeneousPoly3 g1(2), g2(2), g3(2);
    g1.add_term({2, 0, 0}, ab12);
    g1.add_term({1, 0, 1}, -ag12);

    g2.add_term({2, 0, 0}, -ab02);
    g2.add_term({1, 1, 0}, be[2]);
    g2.add_term({1, 0, 1}, ag02);
    g2.add_term({0, 1, 1}, -ga[2]);

    g3.add_term({2, 0, 0}, ab01);
    g3.add_term({1, 1, 0}, -be[1]);
    g3.add_term({1, 0, 1}, -ag01);
    g3.add_term({0, 1, 1}, ga[1]);
    return {g1, g2, g3};
}

} // namespace detail

/// Validates Lemma-1 conditions and assembles the full derived data.
/// Degeneracy is flagged, not thrown; classification refuses it downstream.
inline QuadraticMap build_map(const MapParams& pr) {
    const Vec3 &al = pr.alpha, &be = pr.beta, &ga = pr.gamma;

    if (ga[1].is_zero() && ga[2].is_zero())
        throw NotBirational("(gamma1,gamma2)=(0,0): the denominator does not depend on (x,y)");
    if (al[1].is_zero() && al[2].is_zero())
        throw NotBirational("(alpha1,alpha2)=(0,0): the first component does not depend on (x,y)");

    GaussianRational bg01 = minor_ij(be, ga, 0, 1), bg02 = minor_ij(be, ga, 0, 2),
                     bg12 = minor_ij(be, ga, 1, 2);
    GaussianRational ab12 = minor_ij(al, be, 1, 2);
    GaussianRational ag12 = minor_ij(al, ga, 1, 2);

    if (bg01.is_zero() && bg02.is_zero() && bg12.is_zero())
        throw NotBirational("beta and gamma are linearly dependent");
    if (ab12.is_zero() && ag12.is_zero())
        throw NotBirational("((alpha*beta)_{12},(alpha*gamma)_{12})=(0,0): f depends only on alpha1*x+alpha2*y");
    if (ag12.is_zero() && bg12.is_zero())
        throw NotBirational("((alpha*gamma)_{12},(beta*gamma)_{12})=(0,0): f depends only on gamma1*x+gamma2*y");
    if (ab12.is_zero() && bg12.is_zero() && !(be[1].is_zero() && be[2].is_zero()))
        throw NotBirational("((alpha*beta)_{12},(beta*gamma)_{12})=(0,0) with (beta1,beta2)!=(0,0)");

    QuadraticMap m;
    m.params = pr;
    m.comp = detail::family_components(pr);
    m.inv_comp = detail::inverse_components(pr);

    HomogeneousPoly3 g = hpoly_gcd3(m.comp[0], m.comp[1], m.comp[2]);
    if (g.degree() > 0)
        throw DegreeDrop("the three components share the factor " + g.str());

    m.degenerate = bg12.is_zero() || ag12.is_zero();
    if (bg12.is_zero()) m.degeneracy_witness = "(beta*gamma)_{12}=0";
    else if (ag12.is_zero()) m.degeneracy_witness = "(alpha*gamma)_{12}=0";

    m.O = {ProjPoint(bg12, minor_ij(be, ga, 2, 0), bg01),
           ProjPoint(GaussianRational(0), al[2], -al[1]),
           ProjPoint(GaussianRational(0), ga[2], -ga[1])};

    if (!m.degenerate) {
        GaussianRational inner = al[0] * bg12 - al[1] * bg02 + al[2] * bg01;
        Vec3 a2_raw{bg12 * ag12, inner * ag12, ab12 * bg12};
        if (is_zero(a2_raw))
            throw Inconsistency("A_2 formula vanished on a non-degenerate map");
        std::array<ProjPoint, 3> A = {
            ProjPoint(GaussianRational(0), GaussianRational(1), GaussianRational(0)),
            ProjPoint(GaussianRational(0), GaussianRational(0), GaussianRational(1)),
            ProjPoint(a2_raw)};

        std::array<ProjLine, 3> S = {
            ProjLine(GaussianRational(1), GaussianRational(0), GaussianRational(0)),
            ProjLine(ga),
            ProjLine(al[1] * bg02 - al[2] * bg01, al[1] * bg12, al[2] * bg12)};
        GaussianRational ab01 = minor_ij(al, be, 0, 1), ab02 = minor_ij(al, be, 0, 2);
        std::array<ProjLine, 3> T = {
            ProjLine(ga[0] * ab12 - ga[1] * ab02 + ga[2] * ab01, -bg12, GaussianRational(0)),
            ProjLine(ab12, GaussianRational(0), -ag12),
            ProjLine(GaussianRational(1), GaussianRational(0), GaussianRational(0))};

        // The displayed O_0 must sit on S_1 and S_2; validated rather than trusted.
        if (!S[1].contains(m.O[0]) || !S[2].contains(m.O[0]))
            throw Inconsistency("O_0 is not the intersection of S_1 and S_2");

        std::vector<ProjPoint> avoid(m.O.begin(), m.O.end());
        for (int i = 0; i < 3; ++i) {
            for (const auto& pt : points_on_line(S[static_cast<std::size_t>(i)], avoid, 2)) {
                if (eval_point(m, pt) != A[static_cast<std::size_t>(i)])
                    throw Inconsistency("S_" + std::to_string(i) + " does not collapse onto A_" + std::to_string(i));
            }
        }
        std::vector<ProjPoint> avoid_inv(A.begin(), A.end());
        ProjMap3 inv = m.inverse();
        for (int i = 0; i < 3; ++i) {
            for (const auto& pt : points_on_line(T[static_cast<std::size_t>(i)], avoid_inv, 2)) {
                if (inv.eval(pt) != m.O[static_cast<std::size_t>(i)])
                    throw Inconsistency("T_" + std::to_string(i) + " does not collapse onto O_" + std::to_string(i));
            }
        }
        m.A = A;
        m.S = S;
        m.T = T;
    }

    if (jacobian_numerator(m, true).is_zero() || jacobian_numerator(m, false).is_zero())
        throw Inconsistency("a Jacobian numerator vanished identically on a birational map");

    return m;
}

/// (O_0,O_1,O_2), (A_0,A_1,A_2) for a non-degenerate map.
inline std::pair<std::array<ProjPoint, 3>, std::array<ProjPoint, 3>>
special_points(const QuadraticMap& m) {
    return {m.O, m.a_points()};
}

/// (S_0,S_1,S_2), (T_0,T_1,T_2) for a non-degenerate map.
inline std::pair<std::array<ProjLine, 3>, std::array<ProjLine, 3>>
exceptional_lines(const QuadraticMap& m) {
    return {m.s_lines(), m.t_lines()};
}

/// The homogenized inverse; checks the round trip on 5 sample points off the
/// exceptional sets before returning.
inline ProjMap3 invert_map(const QuadraticMap& m) {
    ProjMap3 inv = m.inverse();
    ProjMap3 fwd = m.forward();
    static const long samples[][2] = {{1, 2},  {2, 3},  {-1, 3}, {3, -2}, {2, -5},
                                      {5, 7},  {-3, -4}, {4, 9},  {7, -6}, {9, 11},
                                      {-7, 5}, {11, -13}, {13, 17}, {-11, -17}, {6, -1}};
    int ok = 0;
    for (const auto& s : samples) {
        ProjPoint p(GaussianRational(1), GaussianRational(s[0]), GaussianRational(s[1]));
        try {
            if (inv.eval(fwd.eval(p)) != p) throw Inconsistency("inverse round trip failed at " + p.str());
        } catch (const IndeterminatePoint&) {
            continue; // sample hit an exceptional configuration; try the next one
        }
        if (++ok == 5) break;
    }
    if (ok < 5) throw Inconsistency("could not find 5 regular sample points for the round trip");
    return inv;
}

} // namespace biratlab
