#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "biratlab/blowup.hpp"
#include "support.hpp"

using namespace biratlab;
using namespace testsupport;

namespace {

GaussianRational g(long n) { return GaussianRational(n); }

/// Independent oracle: bare projective iteration without any blow-up logic.
std::optional<int> bare_orbit_hits(const QuadraticMap& m, ProjPoint p, int depth) {
    for (int step = 0; step <= depth; ++step) {
        if (m.in_indeterminacy(p)) return step;
        if (step == depth) break;
        p = eval_point(m, p);
    }
    return std::nullopt;
}

} // namespace

TEST_CASE("direction reduction is canonical and lift-independent") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> d(-6, 6);
    for (int trial = 0; trial < 100; ++trial) {
        Vec3 braw{g(d(rng)), g(d(rng)), g(d(rng))};
        if (is_zero(braw)) continue;
        ProjPoint base(braw);
        Vec3 raw{g(d(rng)), g(d(rng)), g(d(rng))};
        if (is_zero(raw) || proportional(raw, base.v)) continue;
        Vec3 r1 = reduce_direction(base, raw);
        Vec3 lift = raw + base.v * g(d(rng)); // another lift of the same class
        Vec3 r2 = reduce_direction(base, lift);
        CHECK(r1 == r2);
        CHECK(reduce_direction(base, r1) == r1); // idempotent
    }
}

TEST_CASE("fibre evaluation on the gamma1=0, alpha2=0 branch") {
    // alpha=(3,5,0), beta=(7,1,4), gamma=(0,0,1): gamma0=0, gamma2=1, beta1=1,
    // so the worked displays apply literally.
    QuadraticMap m = build_map(mp({3, 5, 0}, {7, 1, 4}, {0, 0, 1}));
    BlowupRegistry reg;
    reg.add(m.a_points()[0]); // A_0 = O_2
    reg.add(m.a_points()[1]); // A_1 = O_1

    SECTION("fibre point over A_0 maps to [0 : alpha1*v : u] on S_0") {
        InfNearPoint fp(m.a_points()[0], Vec3{g(2), g(0), g(3)}); // [u:v] = [2:3]
        InfNearPoint img = extended_eval(m, reg, fp);
        CHECK_FALSE(img.is_fibre_point());
        CHECK(img.base == ProjPoint(g(0), g(15), g(2))); // [0 : 5*3 : 2]
    }

    SECTION("point of S_0 maps to the fibre point [x2 : x1 + beta2*x2] over A_0") {
        InfNearPoint p(pt(0, 2, 3));
        InfNearPoint img = extended_eval(m, reg, p);
        REQUIRE(img.is_fibre_point());
        CHECK(img.base == m.a_points()[0]);
        auto [u, v] = img.fibre_coords();
        CHECK(u * g(14) == v * g(3)); // [3 : 2 + 4*3] = [3:14]
    }

    SECTION("fibre point over A_1 lands on T_1") {
        InfNearPoint fp(m.a_points()[1], Vec3{g(1), g(2), g(0)}); // [u:v] = [1:2]
        InfNearPoint img = extended_eval(m, reg, fp);
        CHECK_FALSE(img.is_fibre_point());
        CHECK(img.base == ProjPoint(g(1), g(13), g(4))); // [u : a0*u + a1*v : b2*u]
        CHECK(m.t_lines()[1].contains(img.base));
    }

    SECTION("point of S_1 maps to the fibre point [x0 : a0*x0 + a1*x1] over A_1") {
        InfNearPoint p(pt(1, 2, 0)); // S_1 = {x2 = 0} here
        InfNearPoint img = extended_eval(m, reg, p);
        REQUIRE(img.is_fibre_point());
        CHECK(img.base == m.a_points()[1]);
        auto [u, v] = img.fibre_coords();
        CHECK(u * g(13) == v * g(1)); // [1 : 3 + 5*2] = [1:13]
    }
}

TEST_CASE("blow-down compatibility off the registry") {
    QuadraticMap m = build_map(t1_generic());
    BlowupRegistry empty;
    for (long x = -2; x <= 2; ++x) {
        ProjPoint p(g(1), g(x), g(x * x + 1));
        if (m.in_indeterminacy(p)) continue;
        InfNearPoint img = extended_eval(m, empty, InfNearPoint(p));
        CHECK_FALSE(img.is_fibre_point());
        CHECK(img.base == eval_point(m, p));
    }
}

TEST_CASE("track_orbit on the Lyness map") {
    QuadraticMap m = build_map(lyness());
    BlowupRegistry reg;
    OrbitRecord rec = track_orbit(m, reg, InfNearPoint(pt(1, -1, 0)), 10);
    CHECK(rec.outcome == OrbitRecord::Outcome::HitIndeterminacy);
    CHECK(rec.hit_target == 0);
    CHECK(rec.hit_step == 1);
    CHECK(rec.length() == 2);
    CHECK(rec.points.back().base == pt(1, 0, -1));
}

TEST_CASE("track_orbit exhausts the budget on a hit-free instance") {
    QuadraticMap m = build_map(t1_generic());
    BlowupRegistry reg;
    ProjPoint a2 = m.a_points()[2];
    CHECK_FALSE(bare_orbit_hits(m, a2, 20).has_value());
    OrbitRecord rec = track_orbit(m, reg, InfNearPoint(a2), 20);
    CHECK(rec.outcome == OrbitRecord::Outcome::BudgetExhausted);
}

TEST_CASE("fixed seed cycles with period 1") {
    QuadraticMap m = build_map(t1_generic());
    CHECK(eval_point(m, m.a_points()[0]) == m.a_points()[0]);
    BlowupRegistry reg;
    OrbitRecord rec = track_orbit(m, reg, InfNearPoint(m.a_points()[0]), 10);
    CHECK(rec.outcome == OrbitRecord::Outcome::Cycle);
    CHECK(rec.period == 1);
}

TEST_CASE("condition-k closed form") {
    CHECK(condition_k(build_map(mp({0, 1, 1}, {0, -1, 1}, {0, 0, 1})), 8) == 1);
    CHECK(condition_k(build_map(mp({0, 1, 1}, {0, -2, 1}, {0, 0, 1})), 8) == 2);
    // alpha1 = 1 with gamma0 + beta2 = 0 and alpha2*beta1 != 0: no k exists
    CHECK_FALSE(condition_k(build_map(mp({0, 1, 1}, {0, 1, -1}, {1, 0, 1})), 16).has_value());
    CHECK_THROWS_AS(condition_k(build_map(lyness()), 8), WrongBranch);
}

TEST_CASE("regularize the Lyness map") {
    QuadraticMap m = build_map(lyness());
    RegularizedModel M = regularize(m, 10);
    REQUIRE(M.tau.size() == 3);
    CHECK(M.tau.at(0) == 1);
    CHECK(M.tau.at(1) == 2);
    CHECK(M.tau.at(2) == 0);
    CHECK(M.orbit_length(0) == 1);
    CHECK(M.orbit_length(1) == 1);
    CHECK(M.orbit_length(2) == 2);
    CHECK(M.as_certificate);
    CHECK(M.residual_orbits.empty());
}

TEST_CASE("regularize a hit-free four-nonzero instance") {
    RegularizedModel M = regularize(build_map(t1_generic()), 20);
    CHECK(M.tau.empty());
    CHECK(M.as_certificate);
    CHECK(M.residual_orbits.size() == 3);
}

TEST_CASE("regularize refuses degenerate maps") {
    QuadraticMap m = build_map(mp({0, 1, 1}, {1, 2, 1}, {1, 1, 1}));
    CHECK_THROWS_AS(regularize(m, 10), DegenerateMap);
}

TEST_CASE("condition-k instance is confirmed by orbit tracking") {
    QuadraticMap m = build_map(mp({0, 1, 1}, {0, -1, 1}, {0, 0, 1}));
    RegularizedModel M = regularize(m, 20);
    REQUIRE(M.seed_is_se(0));
    CHECK(M.tau.at(0) == 2); // A_0 = O_2
    REQUIRE(M.seed_is_se(1));
    CHECK(M.tau.at(1) == 1);
    CHECK(M.orbit_length(1) == 3); // A_1, fibre over A_0, O_1: 2k+1 with k=1
    CHECK(M.se_orbits.at(1).points[1].is_fibre_point());
    CHECK(condition_k(m, 8) == 1);
}

TEST_CASE("re-tracking a blown-up chain passes through the fibres and exits") {
    QuadraticMap m = build_map(lyness());
    RegularizedModel M = regularize(m, 16);
    auto sample = points_on_line(m.s_lines()[2], {m.O[0], m.O[1], m.O[2]}, 1);
    OrbitRecord rec = track_orbit(m, M.registry, InfNearPoint(sample[0]), 16);
    CHECK(rec.outcome != OrbitRecord::Outcome::HitIndeterminacy);
    REQUIRE(rec.length() >= 3);
    CHECK(rec.points[1].is_fibre_point());
    CHECK(rec.points[1].base == m.a_points()[2]);
    bool visits_o0_fibre = false;
    for (const auto& p : rec.points)
        if (p.is_fibre_point() && p.base == m.O[0]) visits_o0_fibre = true;
    CHECK(visits_o0_fibre);
}

TEST_CASE("orbit of A_2 never meets O_1 or O_2 when all four parameters are nonzero") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long> d(-4, 4);
    int checked = 0;
    while (checked < 15) {
        MapParams p = mp({d(rng), d(rng), d(rng)}, {d(rng), d(rng), d(rng)},
                         {d(rng), d(rng), d(rng)});
        QuadraticMap m;
        try {
            m = build_map(p);
        } catch (const Error&) {
            continue;
        }
        if (m.degenerate) continue;
        if (p.alpha[1].is_zero() || p.alpha[2].is_zero() || p.gamma[1].is_zero() ||
            p.gamma[2].is_zero())
            continue;
        ++checked;
        BlowupRegistry reg;
        OrbitRecord rec = track_orbit(m, reg, InfNearPoint(m.a_points()[2]), 24);
        for (const auto& q : rec.points) {
            if (q.is_fibre_point()) continue;
            CHECK(q.base != m.O[1]);
            CHECK(q.base != m.O[2]);
        }
    }
}

TEST_CASE("orbit of A_1 never meets O_2 on the gamma1*gamma2!=0, alpha1=0 branch") {
    std::mt19937_64 rng(88);
    std::uniform_int_distribution<long> d(-4, 4);
    int checked = 0;
    while (checked < 10) {
        MapParams p = mp({d(rng), 0, d(rng)}, {d(rng), d(rng), d(rng)},
                         {d(rng), d(rng), d(rng)});
        QuadraticMap m;
        try {
            m = build_map(p);
        } catch (const Error&) {
            continue;
        }
        if (m.degenerate || p.gamma[1].is_zero() || p.gamma[2].is_zero() || p.alpha[2].is_zero())
            continue;
        ++checked;
        BlowupRegistry reg;
        reg.add(m.a_points()[0]); // A_0 = O_1 on this branch
        OrbitRecord rec;
        try {
            rec = track_orbit(m, reg, InfNearPoint(m.a_points()[1]), 24);
        } catch (const Error&) {
            continue;
        }
        for (const auto& q : rec.points) {
            if (q.is_fibre_point()) continue;
            CHECK(q.base != m.O[2]);
        }
    }
}
