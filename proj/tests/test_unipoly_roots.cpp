#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "biratlab/roots.hpp"

using namespace biratlab;

namespace {

// Independent oracle: plain bisection on exact rationals, no Sturm machinery.
Rational bisect_root(const UniPolyQ& p, Rational lo, Rational hi, const Rational& tol) {
    auto sgn = [&](const Rational& x) {
        Rational v = p.eval(x);
        return v == 0 ? 0 : (v > 0 ? 1 : -1);
    };
    int slo = sgn(lo);
    REQUIRE(slo != 0);
    REQUIRE(sgn(hi) == -slo);
    while (hi - lo > tol) {
        Rational mid = (lo + hi) / 2;
        int sm = sgn(mid);
        if (sm == 0) return mid;
        if (sm == slo) lo = mid;
        else hi = mid;
    }
    return (lo + hi) / 2;
}

Rational approx(const char* decimal) {
    // parse "[-]d.ddd" into an exact rational
    std::string s(decimal);
    bool neg = !s.empty() && s[0] == '-';
    if (neg) s = s.substr(1);
    auto dot = s.find('.');
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    while (digits.size() > 1 && digits[0] == '0') digits.erase(digits.begin());
    BigInt numer(digits);
    BigInt denom = 1;
    for (std::size_t i = dot + 1; i < s.size(); ++i) denom *= 10;
    Rational r(numer, denom);
    return neg ? -r : r;
}

} // namespace

TEST_CASE("unipoly basics") {
    UniPolyQ p({Rational(-1), Rational(-1), Rational(1)}); // x^2 - x - 1
    CHECK(p.degree() == 2);
    CHECK(p.eval(Rational(2)) == Rational(1));
    CHECK(p.derivative() == UniPolyQ({Rational(-1), Rational(2)}));

    auto [q, r] = divmod(p, UniPolyQ({Rational(1), Rational(1)}));
    CHECK(q == UniPolyQ({Rational(-2), Rational(1)}));
    CHECK(r == UniPolyQ({Rational(1)}));

    CHECK(gcd(p * p, p) == monic(p));
    CHECK(zpoly({-1, 0, 0, 0, 0, 1}).str() == "x^5 - 1");
}

TEST_CASE("isolation: quadratic with golden-mean roots") {
    UniPolyQ p({Rational(-1), Rational(-1), Rational(1)});
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].contains(approx("-0.618033988749895")));
    CHECK(roots[1].contains(approx("1.618033988749895")));
}

TEST_CASE("isolation: x^5-1 has a single real root") {
    auto roots = isolate_real_roots(to_rational(zpoly({-1, 0, 0, 0, 0, 1})));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].contains(Rational(1)));
}

TEST_CASE("isolation: plastic cubic x^3-x-1") {
    UniPolyQ p({Rational(-1), Rational(-1), Rational(0), Rational(1)});
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 1);
    Rational oracle = bisect_root(p, Rational(1), Rational(2), Rational(1, 1000000));
    if (roots[0].exact) CHECK(p.eval(roots[0].lo) == 0);
    else CHECK(roots[0].contains(oracle));
}

TEST_CASE("largest real root to 1e-12") {
    Rational tol(1, BigInt("1000000000000")); // 1e-12

    auto golden = largest_real_root(zpoly({-1, -1, 1}), tol);
    CHECK(boost::multiprecision::abs(golden.approx - approx("1.618033988749895")) <= tol);
    // the defining identity nearly holds at the returned approximation
    Rational defect = golden.approx * golden.approx - golden.approx - 1;
    CHECK(boost::multiprecision::abs(defect) < 10 * tol);

    auto plastic = largest_real_root(zpoly({-1, -1, 0, 1}), tol);
    Rational oracle = bisect_root(UniPolyQ({Rational(-1), Rational(-1), Rational(0), Rational(1)}),
                                  Rational(1), Rational(2), tol / 4);
    CHECK(boost::multiprecision::abs(plastic.approx - oracle) <= tol);

    // rendering at 15 decimals needs a refinement finer than the display grid
    Rational fine(1, BigInt("1000000000000000000")); // 1e-18
    CHECK(decimal_string(largest_real_root(zpoly({-1, -1, 1}), fine).approx, 15) ==
          "1.618033988749895");
    CHECK(decimal_string(largest_real_root(zpoly({-1, -1, 0, 1}), fine).approx, 15) ==
          "1.324717957244746");

    auto one = largest_real_root(zpoly({1, -2, 1}), tol); // (x-1)^2
    CHECK(one.approx == Rational(1));
    CHECK(one.exact);

    CHECK_THROWS_AS(largest_real_root(zpoly({1, 0, 1}), tol), NoRealRoot); // x^2+1
}

TEST_CASE("non-real coefficients rejected") {
    UniPolyG p({GaussianRational(1), gaussian_i()});
    CHECK_THROWS_AS(isolate_real_roots(p), NonRealCoefficients);
}

TEST_CASE("interval properties on random integer polynomials") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::uniform_int_distribution<int> degree(1, 6);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Rational> c(static_cast<std::size_t>(degree(rng)) + 1);
        for (auto& v : c) v = Rational(coeff(rng));
        UniPolyQ p(std::move(c));
        if (p.is_zero() || p.degree() == 0) continue;

        UniPolyQ sf = squarefree_part(p);
        auto roots = isolate_real_roots(p);
        Rational b = root_bound(sf);
        CHECK(static_cast<int>(roots.size()) == sturm_count(sf, -b, b));

        for (std::size_t i = 0; i < roots.size(); ++i) {
            if (roots[i].exact) {
                CHECK(sf.eval(roots[i].lo) == 0);
            } else {
                CHECK(detail::sgn(sf.eval(roots[i].lo)) * detail::sgn(sf.eval(roots[i].hi)) == -1);
            }
            if (i + 1 < roots.size()) CHECK(roots[i].hi <= roots[i + 1].lo);
        }
    }
}

TEST_CASE("decimal rendering") {
    CHECK(decimal_string(Rational(1), 15) == "1");
    CHECK(decimal_string(Rational(-5, 4), 15) == "-1.25");
    CHECK(decimal_string(Rational(2, 3), 6) == "0.666667");
    CHECK(decimal_string(Rational(0), 15) == "0");
}
