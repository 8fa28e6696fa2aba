// Operator builders: color-flux generators, the eighteen two-family
// invariants, the fifteen noncompact rotation generators and their quadratic
// and cubic invariants, the constraint-compatible dressed bosons, and the
// positive multiplicity-splitting invariant assembled from them.
#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "gell_mann.hpp"

namespace su3mult {

// Sum over all four families of the color flux of m, with the conjugate
// families contributing the negated transpose action.
inline LinearOperator flux_operator(const DenseMatrix& m) {
    if (m.rows != 3 || m.cols != 3)
        throw std::invalid_argument("flux_operator: matrix must be 3x3");
    LinearOperator op;
    for (Family f : {Family::a, Family::b, Family::c, Family::d}) {
        bool conj = is_conjugate_family(f);
        for (int al = 0; al < 3; ++al)
            for (int be = 0; be < 3; ++be) {
                const Scalar& v = m.at(al, be);
                if (v.is_zero()) continue;
                OpTerm t;
                if (!conj) {
                    t.coeff = v;
                    t.word = {LadderSym{mode(f, al + 1).linear(), true},
                              LadderSym{mode(f, be + 1).linear(), false}};
                } else {
                    t.coeff = -v;
                    t.word = {LadderSym{mode(f, be + 1).linear(), true},
                              LadderSym{mode(f, al + 1).linear(), false}};
                }
                op.terms.push_back(std::move(t));
            }
    }
    op.normalize();
    return op;
}

// Color generator a = 1..8 acting on all four families.
inline LinearOperator build_generator(int a) {
    if (a < 1 || a > 8) throw std::invalid_argument("build_generator: index must be 1..8");
    return flux_operator(gell_mann_basis()[a - 1] * Scalar(rational(1, 2)));
}

enum class InvariantKind {
    pair_raise,    // x-dagger dot y-dagger
    pair_lower,    // x dot y
    pair_weight,   // N_x + N_y + 3
    cross_raise,   // x-dagger dot y
    cross_lower,   // y-dagger dot x
    cross_weight,  // N_x - N_y
};

// The color-singlet invariant of the given kind on the family pair (f, g).
// Pair kinds pair one plain family with one conjugate family; cross kinds
// pair two families of the same type.
inline LinearOperator build_invariant(InvariantKind kind, Family f, Family g) {
    if (f == g) throw std::invalid_argument("build_invariant: families must differ");
    if ((kind == InvariantKind::pair_raise || kind == InvariantKind::pair_lower ||
         kind == InvariantKind::pair_weight) &&
        is_conjugate_family(f) == is_conjugate_family(g))
        throw std::invalid_argument("build_invariant: pair kinds need opposite-type families");
    if ((kind == InvariantKind::cross_raise || kind == InvariantKind::cross_lower ||
         kind == InvariantKind::cross_weight) &&
        is_conjugate_family(f) != is_conjugate_family(g))
        throw std::invalid_argument("build_invariant: cross kinds need same-type families");
    LinearOperator op;
    switch (kind) {
        case InvariantKind::pair_raise:
            for (int c = 1; c <= 3; ++c)
                op.terms.push_back({Scalar::one(),
                                    {LadderSym{mode(f, c).linear(), true},
                                     LadderSym{mode(g, c).linear(), true}},
                                    {}});
            break;
        case InvariantKind::pair_lower:
            for (int c = 1; c <= 3; ++c)
                op.terms.push_back({Scalar::one(),
                                    {LadderSym{mode(f, c).linear(), false},
                                     LadderSym{mode(g, c).linear(), false}},
                                    {}});
            break;
        case InvariantKind::pair_weight:
            op = LinearOperator::number(f) + LinearOperator::number(g) +
                 LinearOperator::constant(Scalar(3));
            break;
        case InvariantKind::cross_raise:
            for (int c = 1; c <= 3; ++c)
                op.terms.push_back({Scalar::one(),
                                    {LadderSym{mode(f, c).linear(), true},
                                     LadderSym{mode(g, c).linear(), false}},
                                    {}});
            break;
        case InvariantKind::cross_lower:
            for (int c = 1; c <= 3; ++c)
                op.terms.push_back({Scalar::one(),
                                    {LadderSym{mode(g, c).linear(), true},
                                     LadderSym{mode(f, c).linear(), false}},
                                    {}});
            break;
        case InvariantKind::cross_weight:
            op = LinearOperator::number(f) - LinearOperator::number(g);
            break;
    }
    op.normalize();
    return op;
}

inline LinearOperator constraint_ab() {
    return build_invariant(InvariantKind::pair_lower, Family::a, Family::b);
}

inline LinearOperator constraint_cd() {
    return build_invariant(InvariantKind::pair_lower, Family::c, Family::d);
}

inline LinearOperator total_number() {
    return LinearOperator::number(Family::a) + LinearOperator::number(Family::b) +
           LinearOperator::number(Family::c) + LinearOperator::number(Family::d);
}

inline int metric_sign(int mu) {
    if (mu < 1 || mu > 6) throw std::invalid_argument("metric_sign: index must be 1..6");
    return mu <= 4 ? 1 : -1;
}

namespace so42detail {

// Doubled spin vector of a same-type family pair.
inline LinearOperator spin_component(Family f, Family g, int k) {
    LinearOperator up = build_invariant(InvariantKind::cross_raise, f, g);
    LinearOperator dn = build_invariant(InvariantKind::cross_lower, f, g);
    switch (k) {
        case 1:
            return up + dn;
        case 2:
            return (up - dn) * -Scalar::i();
        default:
            return build_invariant(InvariantKind::cross_weight, f, g);
    }
}

inline LinearOperator translation_like(int i) {
    LinearOperator kab = build_invariant(InvariantKind::pair_raise, Family::a, Family::b);
    LinearOperator kcd = build_invariant(InvariantKind::pair_raise, Family::c, Family::d);
    LinearOperator kad = build_invariant(InvariantKind::pair_raise, Family::a, Family::d);
    LinearOperator kbc = build_invariant(InvariantKind::pair_raise, Family::b, Family::c);
    switch (i) {
        case 1:
            return kcd - kab;
        case 2:
            return (kab + kcd) * Scalar::i();
        default:
            return kad + kbc;
    }
}

inline LinearOperator special_conformal_like() {
    return build_invariant(InvariantKind::pair_raise, Family::a, Family::d) -
           build_invariant(InvariantKind::pair_raise, Family::b, Family::c);
}

}  // namespace so42detail

// Antisymmetric generator table of the rank-3 noncompact rotation algebra
// with metric (+,+,+,+,-,-).
inline LinearOperator build_L(int mu, int nu) {
    using namespace so42detail;
    if (mu < 1 || mu > 6 || nu < 1 || nu > 6)
        throw std::invalid_argument("build_L: indices must be 1..6");
    if (mu == nu) return LinearOperator::zero();
    if (mu > nu) return build_L(nu, mu) * Scalar(-1);
    Scalar half(rational(1, 2));
    if (nu <= 3) {
        // L_ij = (1/2) eps_ijk (SX_k + SY_k)
        int k = 6 - mu - nu;               // the remaining index
        int eps = (mu == 1 && nu == 2) || (mu == 2 && nu == 3) ? 1 : -1;  // eps_ijk
        LinearOperator s = spin_component(Family::a, Family::c, k) +
                           spin_component(Family::b, Family::d, k);
        return s * (half * Scalar(eps));
    }
    if (nu == 4) {
        LinearOperator s = spin_component(Family::a, Family::c, mu) -
                           spin_component(Family::b, Family::d, mu);
        return s * -half;
    }
    if (nu == 5 && mu <= 3) {
        LinearOperator p = translation_like(mu);
        return (p + p.adjoint()) * -half;
    }
    if (nu == 6 && mu <= 3) {
        LinearOperator p = translation_like(mu);
        return (p - p.adjoint()) * (-half * Scalar::i());
    }
    if (mu == 4 && nu == 5) {
        LinearOperator q = special_conformal_like();
        return (q - q.adjoint()) * (-half * Scalar::i());
    }
    if (mu == 4 && nu == 6) {
        LinearOperator q = special_conformal_like();
        return (q + q.adjoint()) * half;
    }
    // L_56 = (N + 6) / 2
    return (total_number() + LinearOperator::constant(Scalar(6))) * half;
}

inline const std::vector<std::pair<int, int>>& so42_index_pairs() {
    static const std::vector<std::pair<int, int>> pairs = [] {
        std::vector<std::pair<int, int>> p;
        for (int mu = 1; mu <= 6; ++mu)
            for (int nu = mu + 1; nu <= 6; ++nu) p.push_back({mu, nu});
        return p;
    }();
    return pairs;
}

// Quadratic invariant L_{mu nu} L^{mu nu}.
inline LinearOperator build_casimir2() {
    LinearOperator sum;
    for (const auto& [mu, nu] : so42_index_pairs()) {
        LinearOperator l = build_L(mu, nu);
        Scalar weight(Rational(2L * metric_sign(mu) * metric_sign(nu)));
        sum = sum + (l * l) * weight;
    }
    return sum;
}

namespace so42detail {

inline int permutation_sign(const std::array<int, 6>& p) {
    int sign = 1;
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = i + 1; j < 6; ++j)
            if (p[i] > p[j]) sign = -sign;
    return sign;
}

}  // namespace so42detail

// Cubic invariant contracted with the rank-6 alternating symbol: the sum over
// ordered triples of disjoint index pairs, each pair taken ascending, carries
// a factor 8 from the three pair swaps.
inline LinearOperator build_casimir3() {
    using so42detail::permutation_sign;
    const auto& pairs = so42_index_pairs();
    std::vector<LinearOperator> l(pairs.size());
    std::vector<int> gsign(pairs.size());
    for (size_t i = 0; i < pairs.size(); ++i) {
        l[i] = build_L(pairs[i].first, pairs[i].second);
        gsign[i] = metric_sign(pairs[i].first) * metric_sign(pairs[i].second);
    }
    LinearOperator sum;
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = 0; j < pairs.size(); ++j)
            for (size_t k = 0; k < pairs.size(); ++k) {
                std::array<int, 6> perm{pairs[i].first,  pairs[i].second,
                                        pairs[j].first,  pairs[j].second,
                                        pairs[k].first,  pairs[k].second};
                bool disjoint = true;
                for (size_t x = 0; x < 6 && disjoint; ++x)
                    for (size_t y = x + 1; y < 6; ++y)
                        if (perm[x] == perm[y]) {
                            disjoint = false;
                            break;
                        }
                if (!disjoint) continue;
                long coeff = 8L * permutation_sign(perm) * gsign[i] * gsign[j] * gsign[k];
                LinearOperator prod = (l[i] * (l[j] * l[k])) * Scalar(Rational(coeff));
                sum.terms.insert(sum.terms.end(), prod.terms.begin(), prod.terms.end());
            }
    sum.normalize();
    return sum;
}

// Dressed creation operator: the plain creation corrected by a pair creation
// against the partner family, weighted by the inverse shifted pair count so
// that both pair-annihilation constraints are preserved.
inline LinearOperator isb_creation(Family f, int color) {
    Family partner;
    std::array<long, 4> pair_coef{};
    switch (f) {
        case Family::a:
            partner = Family::b;
            pair_coef = {1, 1, 0, 0};
            break;
        case Family::b:
            partner = Family::a;
            pair_coef = {1, 1, 0, 0};
            break;
        case Family::c:
            partner = Family::d;
            pair_coef = {0, 0, 1, 1};
            break;
        default:
            partner = Family::c;
            pair_coef = {0, 0, 1, 1};
            break;
    }
    Family x = is_conjugate_family(f) ? partner : f;
    Family y = is_conjugate_family(f) ? f : partner;
    LinearOperator op = LinearOperator::creation(mode(f, color));
    for (int g = 1; g <= 3; ++g) {
        OpTerm t;
        t.coeff = Scalar(-1);
        t.word = {LadderSym{mode(x, g).linear(), true},
                  LadderSym{mode(y, g).linear(), true},
                  LadderSym{mode(partner, color).linear(), false}};
        t.dfun = {{CountAffine{pair_coef, 1}, -1}};
        op.terms.push_back(std::move(t));
    }
    op.normalize();
    return op;
}

inline LinearOperator isb_annihilation(Family f, int color) {
    return isb_creation(f, color).adjoint();
}

// Color contraction of dressed creations on two families.
inline LinearOperator isb_pair_create(Family f, Family g) {
    LinearOperator op;
    for (int c = 1; c <= 3; ++c) op = op + isb_creation(f, c) * isb_creation(g, c);
    return op;
}

// Color contraction of a dressed creation on f with a dressed annihilation
// on g.
inline LinearOperator isb_cross(Family f, Family g) {
    LinearOperator op;
    for (int c = 1; c <= 3; ++c) op = op + isb_creation(f, c) * isb_annihilation(g, c);
    return op;
}

/** Nonnegative mixing weights of the four positive blocks of the
 *  multiplicity-splitting invariant. */
struct C4PrimeWeights {
    Rational l1 = 1, l2 = 0, l3 = 0, l4 = 0;
};

// Hermitian positive-semidefinite invariant that separates repeated irrep
// copies: a weighted sum of blocks of the form M-dagger M in the dressed
// bosons. Families (a,b) pair against (c,d) crosswise.
inline LinearOperator build_c4prime(const C4PrimeWeights& w = {}) {
    LinearOperator sum;
    auto add_block = [&sum](const LinearOperator& m, const Rational& weight) {
        if (weight == 0) return;
        if (weight < 0)
            throw std::invalid_argument("build_c4prime: weights must be nonnegative");
        sum = sum + (m * m.adjoint()) * Scalar(weight);
    };
    if (w.l1 != 0) add_block(isb_cross(Family::a, Family::c), w.l1);
    if (w.l2 != 0) add_block(isb_cross(Family::b, Family::d), w.l2);
    if (w.l3 != 0) add_block(isb_pair_create(Family::a, Family::d), w.l3);
    if (w.l4 != 0) add_block(isb_pair_create(Family::b, Family::c), w.l4);
    return sum;
}

// Isospin projection, total isospin square, and hypercharge.
inline LinearOperator isospin_z() { return build_generator(3); }

inline LinearOperator isospin_squared() {
    LinearOperator sum;
    for (int a = 1; a <= 3; ++a) {
        LinearOperator j = build_generator(a);
        sum = sum + j * j;
    }
    return sum;
}

inline LinearOperator hypercharge() {
    DenseMatrix m(3, 3);
    m.at(0, 0) = Scalar(rational(1, 3));
    m.at(1, 1) = Scalar(rational(1, 3));
    m.at(2, 2) = Scalar(rational(-2, 3));
    return flux_operator(m);
}

// The three simple-plus-composite raising operators whose joint kernel on a
// weight space is the highest-weight multiplicity space.
inline std::array<LinearOperator, 3> raising_operators() {
    return {build_generator(1) + build_generator(2) * Scalar::i(),
            build_generator(4) + build_generator(5) * Scalar::i(),
            build_generator(6) - build_generator(7) * Scalar::i()};
}

}  // namespace su3mult
