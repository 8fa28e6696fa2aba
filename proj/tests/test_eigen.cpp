#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include <su3mult/eigen.hpp>

using namespace su3mult;

namespace {

DenseMatrix diag2(const Scalar& a, const Scalar& b) {
    DenseMatrix m(2, 2);
    m.at(0, 0) = a;
    m.at(1, 1) = b;
    return m;
}

}  // namespace

TEST_CASE("diagonal pencil with identity gram") {
    EigenResult r = generalized_eigen(diag2(Scalar(rational(3, 4)), Scalar(0)),
                                      DenseMatrix::identity(2));
    REQUIRE(r.spaces.size() == 2);
    REQUIRE(r.spaces[0].value.exact);
    REQUIRE(r.spaces[0].value.value.is_zero());
    REQUIRE(r.spaces[0].multiplicity == 1);
    REQUIRE(r.spaces[0].vectors.size() == 1);
    REQUIRE(r.spaces[0].vectors[0][0].is_zero());
    REQUIRE(r.spaces[0].vectors[0][1] == Scalar::one());
    REQUIRE(r.spaces[1].value.value == Scalar(rational(3, 4)));
    REQUIRE(r.spaces[1].vectors[0][0] == Scalar::one());
    REQUIRE(r.spaces[1].vectors[0][1].is_zero());
}

TEST_CASE("one-dimensional pencil divides through the gram weight") {
    DenseMatrix h(1, 1), g(1, 1);
    h.at(0, 0) = Scalar(3);
    g.at(0, 0) = Scalar(2);
    EigenResult r = generalized_eigen(h, g);
    REQUIRE(r.spaces.size() == 1);
    REQUIRE(r.spaces[0].value.str() == "3/2");
}

TEST_CASE("nontrivial gram changes the spectrum") {
    EigenResult r = generalized_eigen(diag2(Scalar(1), Scalar(-1)),
                                      diag2(Scalar(1), Scalar(2)));
    REQUIRE(r.spaces.size() == 2);
    REQUIRE(r.spaces[0].value.value == Scalar(rational(-1, 2)));
    REQUIRE(r.spaces[1].value.value == Scalar::one());
}

TEST_CASE("complex hermitian pencil keeps a real spectrum") {
    DenseMatrix h(2, 2);
    h.at(0, 0) = Scalar(1);
    h.at(0, 1) = Scalar::i();
    h.at(1, 0) = -Scalar::i();
    h.at(1, 1) = Scalar(1);
    EigenResult r = generalized_eigen(h, DenseMatrix::identity(2));
    REQUIRE(r.spaces.size() == 2);
    REQUIRE(r.spaces[0].value.value.is_zero());
    REQUIRE(r.spaces[1].value.value == Scalar(2));
}

TEST_CASE("repeated eigenvalue carries its full eigenspace") {
    DenseMatrix h(3, 3);
    h.at(0, 0) = Scalar(1);
    h.at(1, 1) = Scalar(1);
    h.at(2, 2) = Scalar(2);
    EigenResult r = generalized_eigen(h, DenseMatrix::identity(3));
    REQUIRE(r.spaces.size() == 2);
    REQUIRE(r.spaces[0].multiplicity == 2);
    REQUIRE(r.spaces[0].vectors.size() == 2);
    REQUIRE(r.spaces[1].multiplicity == 1);

    // Proportional pencil: every direction is an eigenvector.
    DenseMatrix g(2, 2);
    g.at(0, 0) = Scalar(2);
    g.at(0, 1) = Scalar(1);
    g.at(1, 0) = Scalar(1);
    g.at(1, 1) = Scalar(1);
    EigenResult p = generalized_eigen(g, g);
    REQUIRE(p.spaces.size() == 1);
    REQUIRE(p.spaces[0].value.value == Scalar::one());
    REQUIRE(p.spaces[0].multiplicity == 2);
}

TEST_CASE("irrational eigenvalues come back as certified decimals") {
    DenseMatrix h(2, 2);
    h.at(0, 0) = Scalar(1);
    h.at(0, 1) = Scalar(2);
    h.at(1, 0) = Scalar(2);
    h.at(1, 1) = Scalar(-1);
    EigenResult r = generalized_eigen(h, DenseMatrix::identity(2));
    REQUIRE(r.spaces.size() == 2);
    REQUIRE_FALSE(r.spaces[0].value.exact);
    REQUIRE_FALSE(r.spaces[1].value.exact);
    REQUIRE(r.spaces[0].value.decimal ==
            "-2.23606797749978969640917366873127623544061835961152");
    REQUIRE(r.spaces[1].value.decimal ==
            "2.23606797749978969640917366873127623544061835961152");
    REQUIRE(r.spaces[0].value.digits == 50);
    REQUIRE(r.spaces[0].vectors.empty());
    REQUIRE(r.spaces[0].multiplicity == 1);
    REQUIRE(r.spaces[0].value.lo < r.spaces[0].value.hi);
}

TEST_CASE("quadratic-field entries still route through the decimal path") {
    DenseMatrix h(2, 2);
    h.at(0, 1) = Scalar::sqrt3();
    h.at(1, 0) = Scalar::sqrt3();
    EigenResult r = generalized_eigen(h, DenseMatrix::identity(2));
    REQUIRE(r.spaces.size() == 2);
    REQUIRE_FALSE(r.spaces[1].value.exact);
    REQUIRE(r.spaces[1].value.decimal ==
            "1.73205080756887729352744634150587236694280525381038");
    REQUIRE(r.spaces[0].value.decimal ==
            "-1.73205080756887729352744634150587236694280525381038");
}

TEST_CASE("mixed exact and certified eigenvalues sort together") {
    DenseMatrix h(3, 3);
    h.at(0, 0) = Scalar(1);
    h.at(0, 1) = Scalar(2);
    h.at(1, 0) = Scalar(2);
    h.at(1, 1) = Scalar(-1);
    h.at(2, 2) = Scalar(7);
    EigenResult r = generalized_eigen(h, DenseMatrix::identity(3));
    REQUIRE(r.spaces.size() == 3);
    REQUIRE_FALSE(r.spaces[0].value.exact);
    REQUIRE_FALSE(r.spaces[1].value.exact);
    REQUIRE(r.spaces[2].value.exact);
    REQUIRE(r.spaces[2].value.value == Scalar(7));
}

TEST_CASE("precondition violations are rejected") {
    DenseMatrix pd = DenseMatrix::identity(2);
    DenseMatrix notherm(2, 2);
    notherm.at(0, 1) = Scalar(1);
    REQUIRE_THROWS_AS(generalized_eigen(notherm, pd), std::invalid_argument);

    DenseMatrix indefinite(2, 2);
    indefinite.at(0, 0) = Scalar(1);
    indefinite.at(0, 1) = Scalar(2);
    indefinite.at(1, 0) = Scalar(2);
    indefinite.at(1, 1) = Scalar(1);
    REQUIRE_THROWS_AS(generalized_eigen(pd, indefinite), std::invalid_argument);
    REQUIRE_THROWS_AS(generalized_eigen(pd, DenseMatrix::identity(3)),
                      std::invalid_argument);

    REQUIRE(generalized_eigen(DenseMatrix(0, 0), DenseMatrix(0, 0)).spaces.empty());
}
