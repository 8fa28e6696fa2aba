#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "su3mult/scalar.hpp"

using namespace su3mult;

namespace {

Scalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 5);
    auto r = [&] { return rational(num(rng), den(rng)); };
    return Scalar(r(), r(), r(), r());
}

}  // namespace

TEST_CASE("rational construction stays canonical") {
    CHECK(rational(2, 4) == rational(1, 2));
    CHECK(rational(-2, -4) == rational(1, 2));
    CHECK(rational(3, -6) == rational(-1, 2));
    CHECK(rational(3, -6).get_den() == 2);   // positive denominator
    CHECK(rational(0, 7) == 0);
    CHECK_THROWS_AS(rational(1, 0), std::domain_error);
}

TEST_CASE("rational string round trip") {
    CHECK(to_string(rational(3, 4)) == "3/4");
    CHECK(to_string(rational(-3, 4)) == "-3/4");
    CHECK(to_string(rational(5)) == "5");
    CHECK(to_string(rational(0)) == "0");
    CHECK(rational_from_string("3/4") == rational(3, 4));
    CHECK(rational_from_string("-7") == rational(-7));
    CHECK(rational_from_string("6/8") == rational(3, 4));
    CHECK_THROWS(rational_from_string("1/0"));
    CHECK_THROWS(rational_from_string("abc"));
    CHECK_THROWS(rational_from_string(""));
}

TEST_CASE("basis element multiplication table") {
    Scalar i = Scalar::i(), r3 = Scalar::sqrt3(), one = Scalar::one();
    CHECK(i * i == -one);
    CHECK(r3 * r3 == Scalar(3));
    CHECK(i * r3 == Scalar(Rational(0), Rational(0), Rational(0), Rational(1)));
    CHECK((i * r3) * (i * r3) == Scalar(-3));
    CHECK(i * (i * r3) == -r3);
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937 rng(20260815);
    for (int trial = 0; trial < 200; ++trial) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Scalar::zero() == a);
        CHECK(a * Scalar::one() == a);
        CHECK(a - a == Scalar::zero());
    }
}

TEST_CASE("conjugation is a ring homomorphism fixing the real subfield") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Scalar a = random_scalar(rng), b = random_scalar(rng);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
        CHECK(a.conj().conj() == a);
        Scalar real_part = a + a.conj();
        CHECK(real_part.is_real());
    }
}

TEST_CASE("inversion") {
    Scalar v(Rational(1), Rational(0), Rational(1), Rational(0));  // 1 + sqrt(3)
    Scalar expected(rational(-1, 2), Rational(0), rational(1, 2), Rational(0));
    CHECK(v.invert() == expected);

    CHECK_THROWS_AS(Scalar::zero().invert(), std::domain_error);

    std::mt19937 rng(99);
    int nonzero = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Scalar a = random_scalar(rng);
        if (a.is_zero()) continue;
        ++nonzero;
        CHECK(a * a.invert() == Scalar::one());
    }
    CHECK(nonzero > 150);
}

TEST_CASE("serialization format") {
    CHECK(Scalar(rational(3, 4)).str() == "3/4");
    CHECK(Scalar(rational(-2)).str() == "-2");
    Scalar s(rational(1, 2), rational(-1, 3), Rational(0), Rational(2));
    CHECK(s.str() == "1/2 + -1/3*i + 0*r3 + 2*i*r3");
    CHECK(Scalar::i().str() == "0 + 1*i + 0*r3 + 0*i*r3");
}

TEST_CASE("sign of real elements") {
    auto real = [](long a, long b, long c, long d) {
        return Scalar(rational(a, b), Rational(0), rational(c, d), Rational(0));
    };
    CHECK(real(1, 1, 0, 1).sign() == 1);
    CHECK(real(-1, 1, 0, 1).sign() == -1);
    CHECK(real(0, 1, 0, 1).sign() == 0);
    CHECK(real(0, 1, 1, 1).sign() == 1);
    CHECK(real(-3, 1, 2, 1).sign() == 1);    // 2*sqrt(3) > 3
    CHECK(real(-7, 2, 2, 1).sign() == -1);   // 2*sqrt(3) < 7/2
    CHECK(real(7, 4, -1, 1).sign() == 1);    // 7/4 > sqrt(3)
    CHECK(real(12, 7, -1, 1).sign() == -1);  // 12/7 < sqrt(3)
    CHECK_THROWS_AS(Scalar::i().sign(), std::domain_error);
}
