#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <sstream>
#include <string>

#include "errors.hpp"

namespace biratlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Renders a rational as "p" or "p/q" with q > 0.
inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << num(r);
    if (den(r) != 1) os << "/" << den(r);
    return os.str();
}

/// Exact element of Q(i).  Both parts are arbitrary-precision rationals kept
/// in lowest terms by the underlying representation, so equality is structural.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(long v) : re(v), im(0) {}               // NOLINT(google-explicit-constructor)
    GaussianRational(const Rational& r) : re(r), im(0) {}    // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    /// |z|^2 as a rational.
    Rational norm() const { return re * re + im * im; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussianRational inv() const {
        if (is_zero()) throw DivisionByZero();
        Rational n = norm();
        return {re / n, -im / n};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) throw DivisionByZero();
        return a * b.inv();
    }
    GaussianRational& operator+=(const GaussianRational& o) { re += o.re; im += o.im; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { re -= o.re; im -= o.im; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    /// Canonical text form: "a", "bi" or "a+bi"/"a-bi" with rational parts.
    std::string str() const {
        if (im == 0) return biratlab::to_string(re);
        std::string i_part = biratlab::to_string(im) + "i";
        if (re == 0) return i_part;
        if (im > 0) return biratlab::to_string(re) + "+" + i_part;
        return biratlab::to_string(re) + i_part; // sign carried by im
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
        return os << z.str();
    }
};

inline GaussianRational gaussian_i() { return {Rational(0), Rational(1)}; }

/// z^n for n >= 0.
inline GaussianRational pow(const GaussianRational& z, unsigned n) {
    GaussianRational acc(1), base = z;
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

/// gcd on rationals: gcd of numerators over lcm of denominators.  Used to
/// extract the content of a coefficient list.
inline Rational rational_gcd(const Rational& a, const Rational& b) {
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    if (a == 0) return boost::multiprecision::abs(b);
    if (b == 0) return boost::multiprecision::abs(a);
    return Rational(gcd(num(a), num(b)), lcm(den(a), den(b)));
}

} // namespace biratlab
