#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <stdexcept>

#include <su3mult/linear_operator.hpp>

using namespace su3mult;

namespace {

LinearOperator dot_create(Family f, Family g) {
    LinearOperator op;
    for (int c = 1; c <= 3; ++c)
        op = op + LinearOperator::creation(mode(f, c)) * LinearOperator::creation(mode(g, c));
    return op;
}

LinearOperator dot_annihilate(Family f, Family g) {
    LinearOperator op;
    for (int c = 1; c <= 3; ++c)
        op = op +
             LinearOperator::annihilation(mode(f, c)) * LinearOperator::annihilation(mode(g, c));
    return op;
}

// a-dagger dot c (color-contracted pair across non-conjugate families).
LinearOperator cross_create(Family f, Family g) {
    LinearOperator op;
    for (int c = 1; c <= 3; ++c)
        op = op +
             LinearOperator::creation(mode(f, c)) * LinearOperator::annihilation(mode(g, c));
    return op;
}

StateVector monomial_state(const FockMonomial& m) {
    StateVector v;
    v.add_term(m, Scalar::one());
    return v;
}

}  // namespace

TEST_CASE("mode indexing round trips") {
    for (int lin = 0; lin < 12; ++lin) {
        ModeIndex m = mode_from_linear(lin);
        REQUIRE(m.linear() == lin);
        REQUIRE(mode(m.family, m.color).linear() == lin);
    }
    REQUIRE(family_char(Family::a) == 'a');
    REQUIRE(family_char(Family::d) == 'd');
    REQUIRE(is_conjugate_family(Family::b));
    REQUIRE(is_conjugate_family(Family::d));
    REQUIRE_FALSE(is_conjugate_family(Family::a));
    REQUIRE_THROWS_AS(mode(Family::a, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(mode_from_linear(12), std::invalid_argument);
}

TEST_CASE("monomial weights follow the fundamental weight table") {
    auto single = [](Family f, int color) {
        FockMonomial m = vacuum_monomial();
        m.e[mode(f, color).linear()] = 1;
        return m;
    };
    REQUIRE(single(Family::a, 1).weight() == Weight{1, 1});
    REQUIRE(single(Family::a, 2).weight() == Weight{-1, 1});
    REQUIRE(single(Family::a, 3).weight() == Weight{0, -2});
    REQUIRE(single(Family::b, 1).weight() == Weight{-1, -1});
    REQUIRE(single(Family::c, 3).weight() == Weight{0, -2});
    REQUIRE(single(Family::d, 3).weight() == Weight{0, 2});
    REQUIRE(vacuum_monomial().weight() == Weight{0, 0});

    // threeY of any monomial is congruent to Na - Nb + Nc - Nd mod 3.
    for (const auto& m : enumerate_up_to_total(3)) {
        auto n = m.family_counts();
        long tri = n[0] - n[1] + n[2] - n[3];
        REQUIRE((m.weight().threeY - tri) % 3 == 0);
    }
}

TEST_CASE("monomial and state printing") {
    REQUIRE(vacuum_monomial().str() == "|0>");
    FockMonomial m = vacuum_monomial();
    m.e[mode(Family::a, 1).linear()] = 2;
    m.e[mode(Family::b, 3).linear()] = 1;
    REQUIRE(m.str() == "a1^2 b3");
    StateVector v;
    v.add_term(m, Scalar(rational(3, 4)));
    REQUIRE(v.str() == "(3/4) a1^2 b3");
}

TEST_CASE("sector enumeration counts and indexing") {
    REQUIRE(enumerate_sector(1, 0, 0, 0).dimension() == 3);
    REQUIRE(enumerate_sector(2, 1, 0, 0).dimension() == 18);
    REQUIRE(enumerate_sector(1, 1, 1, 1).dimension() == 81);
    REQUIRE(enumerate_sector(0, 0, 0, 0).dimension() == 1);

    SectorBasis basis = enumerate_sector(2, 1, 0, 0);
    for (size_t i = 0; i < basis.dimension(); ++i)
        REQUIRE(basis.index_of(basis.monomials[i]) == i);
    REQUIRE_THROWS_AS(basis.index_of(vacuum_monomial()), std::out_of_range);

    // Totals 0,1,2 contribute 1 + 12 + 78 monomials.
    REQUIRE(enumerate_up_to_total(2).size() == 91);
    REQUIRE(enumerate_up_to_total(0).size() == 1);
}

TEST_CASE("creation and annihilation conventions") {
    FockMonomial a1sq = vacuum_monomial();
    a1sq.e[0] = 2;

    StateVector up = apply(LinearOperator::creation(mode(Family::a, 1)), monomial_state(a1sq));
    FockMonomial a1cu = vacuum_monomial();
    a1cu.e[0] = 3;
    REQUIRE(up == monomial_state(a1cu));

    // Annihilation multiplies by the exponent before lowering it.
    StateVector down =
        apply(LinearOperator::annihilation(mode(Family::a, 1)), monomial_state(a1sq));
    FockMonomial a1 = vacuum_monomial();
    a1.e[0] = 1;
    REQUIRE(down == monomial_state(a1) * Scalar(2));

    REQUIRE(apply(LinearOperator::annihilation(mode(Family::b, 2)), monomial_state(a1sq))
                .is_zero());
}

TEST_CASE("gram inner product is factorial weighted and sesquilinear") {
    FockMonomial a1sq = vacuum_monomial();
    a1sq.e[0] = 2;
    StateVector u = monomial_state(a1sq);
    REQUIRE(gram_inner(u, u) == Scalar(2));

    FockMonomial mixed = vacuum_monomial();
    mixed.e[mode(Family::a, 1).linear()] = 1;
    mixed.e[mode(Family::b, 2).linear()] = 1;
    REQUIRE(gram_inner(monomial_state(mixed), monomial_state(mixed)) == Scalar::one());
    REQUIRE(gram_inner(u, monomial_state(mixed)).is_zero());

    StateVector iv = monomial_state(a1sq) * Scalar::i();
    REQUIRE(gram_inner(u, iv) == Scalar(2) * Scalar::i());
    REQUIRE(gram_inner(iv, u) == Scalar(-2) * Scalar::i());
}

TEST_CASE("pair annihilator against pair creator on the vacuum") {
    LinearOperator kplus = dot_create(Family::a, Family::b);
    LinearOperator kminus = dot_annihilate(Family::a, Family::b);
    StateVector vac = StateVector::vacuum();

    REQUIRE(apply(kminus * kplus, vac) == vac * Scalar(3));
    REQUIRE(apply(kminus, apply(kplus, vac)) == vac * Scalar(3));
    REQUIRE(apply(commutator(kminus, kplus), vac) == vac * Scalar(3));
}

TEST_CASE("cross-family su(2) commutator gives the count difference") {
    LinearOperator kappa_plus = cross_create(Family::a, Family::c);
    LinearOperator kappa_minus = cross_create(Family::c, Family::a);
    LinearOperator lhs = commutator(kappa_plus, kappa_minus);
    LinearOperator rhs =
        LinearOperator::number(Family::a) - LinearOperator::number(Family::c);
    for (const auto& m : enumerate_up_to_total(3)) {
        StateVector v = monomial_state(m);
        REQUIRE(apply(lhs, v) == apply(rhs, v));
    }
}

TEST_CASE("adjoint matches the gram pairing") {
    LinearOperator op = cross_create(Family::a, Family::c) +
                        dot_create(Family::c, Family::d) * Scalar::i() +
                        LinearOperator::number(Family::b) * Scalar(rational(2, 3));
    LinearOperator dag = op.adjoint();
    REQUIRE(dag.adjoint().str() == op.str());

    std::mt19937 rng(20260815);
    std::uniform_int_distribution<int> num(-4, 4);
    auto pool = enumerate_up_to_total(3);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    for (int trial = 0; trial < 12; ++trial) {
        StateVector u, v;
        for (int k = 0; k < 6; ++k) {
            u.add_term(pool[pick(rng)], Scalar(Rational(num(rng))));
            v.add_term(pool[pick(rng)], Scalar(Rational(num(rng))));
        }
        REQUIRE(gram_inner(apply(op, u), v) == gram_inner(u, apply(dag, v)));
    }
}

TEST_CASE("diagonal factors evaluate at the output counts") {
    OpTerm t;
    t.coeff = Scalar::one();
    t.word = {LadderSym{mode(Family::a, 1).linear(), true}};
    t.dfun = {{CountAffine{{1, 1, 0, 0}, 1}, -1}};
    LinearOperator op{{t}};

    FockMonomial a1 = vacuum_monomial();
    a1.e[0] = 1;
    REQUIRE(apply(op, StateVector::vacuum()) ==
            monomial_state(a1) * Scalar(rational(1, 2)));
    REQUIRE(op.str() == "(1) a1^ /(Na+Nb+1)");

    // Adjoint shifts the form by the word's family-count shift.
    LinearOperator dag = op.adjoint();
    REQUIRE(dag.str() == "(1) a1 /(Na+Nb+2)");
    REQUIRE(apply(dag, monomial_state(a1)) == StateVector::vacuum() * Scalar(rational(1, 2)));
    REQUIRE(gram_inner(apply(op, StateVector::vacuum()), monomial_state(a1)) ==
            gram_inner(StateVector::vacuum(), apply(dag, monomial_state(a1))));
}

TEST_CASE("diagonal factor with vanishing negative-power form throws") {
    OpTerm t;
    t.coeff = Scalar::one();
    t.dfun = {{CountAffine{{1, 0, 0, 0}, -1}, -1}};
    LinearOperator op{{t}};
    FockMonomial a1 = vacuum_monomial();
    a1.e[0] = 1;
    REQUIRE_THROWS_AS(apply(op, monomial_state(a1)), DiagDomainError);
    // Positive powers of a vanishing form just kill the term.
    op.terms[0].dfun[0].exponent = 1;
    REQUIRE(apply(op, monomial_state(a1)).is_zero());
}

TEST_CASE("composition agrees with sequential application") {
    OpTerm tb;
    tb.coeff = Scalar::one();
    tb.word = {LadderSym{mode(Family::a, 1).linear(), true}};
    tb.dfun = {{CountAffine{{1, 0, 0, 0}, 0}, -1}};
    LinearOperator B{{tb}};
    LinearOperator A = LinearOperator::creation(mode(Family::a, 1)) +
                       dot_annihilate(Family::a, Family::b) * Scalar::sqrt3();
    LinearOperator AB = A * B;

    for (const auto& m : enumerate_up_to_total(3)) {
        StateVector v = monomial_state(m);
        REQUIRE(apply(AB, v) == apply(A, apply(B, v)));
    }
}

TEST_CASE("normalization merges and cancels terms") {
    LinearOperator kplus = dot_create(Family::a, Family::b);
    REQUIRE((kplus - kplus).is_zero());
    REQUIRE((kplus + kplus).str() == (kplus * Scalar(2)).str());
    REQUIRE(LinearOperator::constant(Scalar::zero()).is_zero());

    // A constant diagonal factor folds into the coefficient.
    OpTerm t;
    t.coeff = Scalar(2);
    t.dfun = {{CountAffine{{0, 0, 0, 0}, 4}, -1}};
    LinearOperator op{{t}};
    op.normalize();
    REQUIRE(op.str() == "(1/2)");
}

TEST_CASE("uniform shift detection") {
    REQUIRE(dot_create(Family::a, Family::b).uniform_shift() ==
            std::array<int, 4>{1, 1, 0, 0});
    REQUIRE(cross_create(Family::a, Family::c).uniform_shift() ==
            std::array<int, 4>{1, 0, -1, 0});
    LinearOperator mixed =
        dot_create(Family::a, Family::b) + dot_annihilate(Family::a, Family::b);
    REQUIRE_FALSE(mixed.uniform_shift().has_value());
    REQUIRE(LinearOperator::number(Family::a).uniform_shift() ==
            std::array<int, 4>{0, 0, 0, 0});
}

TEST_CASE("weight bookkeeping on states") {
    LinearOperator kplus = dot_create(Family::a, Family::b);
    StateVector v = apply(kplus, StateVector::vacuum());
    REQUIRE(v.is_weight_homogeneous());
    REQUIRE(v.weight() == Weight{0, 0});

    FockMonomial a1 = vacuum_monomial();
    a1.e[0] = 1;
    StateVector mixed = StateVector::vacuum() + monomial_state(a1);
    REQUIRE_FALSE(mixed.is_weight_homogeneous());
    REQUIRE_THROWS_AS(mixed.weight(), std::logic_error);
}
