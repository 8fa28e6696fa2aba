// Exact arithmetic over the field Q(i, sqrt(3)).
#pragma once

#include <array>
#include <ostream>
#include <stdexcept>
#include <string>

#include "rational.hpp"

namespace su3mult {

/** Element w + x*i + y*sqrt(3) + z*i*sqrt(3) with rational components. */
struct Scalar {
    Rational w, x, y, z;

    Scalar() : w(0), x(0), y(0), z(0) {}
    Scalar(Rational w_, Rational x_ = Rational(0), Rational y_ = Rational(0),
           Rational z_ = Rational(0))
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
    explicit Scalar(long n) : w(n), x(0), y(0), z(0) {}

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(Rational(1)); }
    static Scalar i() { return Scalar(Rational(0), Rational(1)); }
    static Scalar sqrt3() { return Scalar(Rational(0), Rational(0), Rational(1)); }

    bool is_zero() const { return w == 0 && x == 0 && y == 0 && z == 0; }
    bool is_rational() const { return x == 0 && y == 0 && z == 0; }
    // Real means fixed by complex conjugation, i.e. lies in Q(sqrt(3)).
    bool is_real() const { return x == 0 && z == 0; }

    Scalar operator+(const Scalar& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
    Scalar operator-(const Scalar& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
    Scalar operator-() const { return {-w, -x, -y, -z}; }

    // Multiplication table: i^2 = -1, sqrt(3)^2 = 3, the two commute.
    Scalar operator*(const Scalar& o) const {
        return {w * o.w - x * o.x + 3 * (y * o.y - z * o.z),
                w * o.x + x * o.w + 3 * (y * o.z + z * o.y),
                w * o.y + y * o.w - (x * o.z + z * o.x),
                w * o.z + z * o.w + x * o.y + y * o.x};
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const {
        return w == o.w && x == o.x && y == o.y && z == o.z;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar conj() const { return {w, -x, y, -z}; }

    // Multiplicative inverse: a * conj(a) lands in Q(sqrt(3)), whose inverse
    // is classical; the composition solves the multiplication-by-a system.
    Scalar invert() const {
        if (is_zero()) throw std::domain_error("Scalar::invert: zero");
        Scalar n = *this * conj();  // u + v*sqrt(3), real
        Rational u = n.w, v = n.y;
        Rational norm = u * u - 3 * v * v;  // nonzero: sqrt(3) is irrational
        Scalar sconj(u / norm, Rational(0), -v / norm, Rational(0));
        return conj() * sconj;
    }

    Scalar operator/(const Scalar& o) const { return *this * o.invert(); }

    // Sign of a real element u + v*sqrt(3); requires is_real().
    int sign() const {
        if (!is_real()) throw std::domain_error("Scalar::sign: not real");
        int su = sgn(w), sv = sgn(y);
        if (sv == 0) return su;
        if (su == 0) return sv;
        if (su == sv) return su;
        // Opposite signs: compare |u|^2 against 3 v^2.
        Rational d = w * w - 3 * y * y;
        int sd = sgn(d);
        return sd == 0 ? 0 : (sd > 0 ? su : sv);
    }

    std::string str() const {
        if (is_rational()) return to_string(w);
        return to_string(w) + " + " + to_string(x) + "*i + " + to_string(y) + "*r3 + " +
               to_string(z) + "*i*r3";
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }
};

inline Scalar operator*(const Rational& r, const Scalar& s) { return Scalar(r) * s; }

}  // namespace su3mult
