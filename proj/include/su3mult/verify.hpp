// Exhaustive identity checks on interior truncations of the Fock space.
// Operators are applied exactly, so a state whose total quantum number is at
// least `margin` below the truncation ceiling cannot leak truncation error;
// each battery walks every interior state and reports per identity.
#pragma once

#include <string>
#include <vector>

#include "operators.hpp"

namespace su3mult {

struct Truncation {
    int nmax;
    int margin;

    Truncation(int n, int m) : nmax(n), margin(m) {
        if (n < 0 || m < 0) throw std::invalid_argument("Truncation: negative parameter");
        if (m > n) throw std::invalid_argument("Truncation: margin exceeds ceiling");
    }

    int interior_bound() const { return nmax - margin; }
};

struct VerificationReport {
    std::string identity;
    int nmax = 0;
    size_t states_checked = 0;
    bool passed = true;
    std::string counterexample;  // empty when passed
};

inline bool all_passed(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.passed) return false;
    return true;
}

namespace verifydetail {

// Checks that op annihilates every monomial in the pool.
inline VerificationReport check_zero_action(const std::string& identity,
                                            const LinearOperator& op,
                                            const std::vector<FockMonomial>& pool,
                                            int nmax) {
    VerificationReport rep;
    rep.identity = identity;
    rep.nmax = nmax;
    rep.states_checked = pool.size();
    for (const auto& m : pool) {
        StateVector v;
        v.add_term(m, Scalar::one());
        StateVector residual = apply(op, v);
        if (!residual.is_zero()) {
            rep.passed = false;
            std::string res = residual.str();
            if (res.size() > 160) res = res.substr(0, 160) + " ...";
            rep.counterexample = "on " + m.str() + ": " + res;
            return rep;
        }
    }
    return rep;
}

// Same check with the commutator applied sequentially, for heavy operators
// whose composed commutator would be wasteful to expand.
inline VerificationReport check_zero_commutator_seq(const std::string& identity,
                                                    const LinearOperator& x,
                                                    const LinearOperator& y,
                                                    const std::vector<FockMonomial>& pool,
                                                    int nmax) {
    VerificationReport rep;
    rep.identity = identity;
    rep.nmax = nmax;
    rep.states_checked = pool.size();
    for (const auto& m : pool) {
        StateVector v;
        v.add_term(m, Scalar::one());
        StateVector residual = commutator_apply(x, y, v);
        if (!residual.is_zero()) {
            rep.passed = false;
            std::string res = residual.str();
            if (res.size() > 160) res = res.substr(0, 160) + " ...";
            rep.counterexample = "on " + m.str() + ": " + res;
            return rep;
        }
    }
    return rep;
}

inline std::string l_name(int mu, int nu) {
    return "L_" + std::to_string(mu) + std::to_string(nu);
}

}  // namespace verifydetail

// Closure of the fifteen rotation generators under commutation against the
// diagonal metric (+,+,+,+,-,-): one report per unordered generator pair.
inline std::vector<VerificationReport> verify_so42_closure(const Truncation& t) {
    using namespace verifydetail;
    const auto& pairs = so42_index_pairs();
    std::vector<LinearOperator> l(pairs.size());
    for (size_t i = 0; i < pairs.size(); ++i)
        l[i] = build_L(pairs[i].first, pairs[i].second);
    auto pool = enumerate_up_to_total(t.interior_bound());
    std::vector<VerificationReport> out;
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = i + 1; j < pairs.size(); ++j) {
            auto [mu, nu] = pairs[i];
            auto [rho, sigma] = pairs[j];
            LinearOperator rhs;
            if (mu == rho)
                rhs = rhs + build_L(nu, sigma) * Scalar(metric_sign(mu));
            if (nu == sigma)
                rhs = rhs + build_L(mu, rho) * Scalar(metric_sign(nu));
            if (mu == sigma)
                rhs = rhs + build_L(rho, nu) * Scalar(metric_sign(mu));
            if (nu == rho)
                rhs = rhs + build_L(sigma, mu) * Scalar(metric_sign(nu));
            LinearOperator diff = commutator(l[i], l[j]) - rhs * Scalar::i();
            out.push_back(check_zero_action(
                "[" + l_name(mu, nu) + "," + l_name(rho, sigma) + "]", diff, pool, t.nmax));
        }
    return out;
}

// Every color generator commutes with every two-family invariant.
inline std::vector<VerificationReport> verify_invariance(const Truncation& t) {
    using namespace verifydetail;
    using IK = InvariantKind;
    struct Named {
        std::string name;
        LinearOperator op;
    };
    std::vector<Named> invariants;
    const std::vector<std::pair<Family, Family>> pair_pairs = {
        {Family::a, Family::b}, {Family::c, Family::d},
        {Family::a, Family::d}, {Family::b, Family::c}};
    const std::vector<std::pair<Family, Family>> cross_pairs = {
        {Family::a, Family::c}, {Family::b, Family::d}};
    auto tag = [](Family f, Family g) {
        return std::string(1, family_char(f)) + family_char(g);
    };
    for (auto [f, g] : pair_pairs) {
        invariants.push_back({"k+(" + tag(f, g) + ")",
                              build_invariant(IK::pair_raise, f, g)});
        invariants.push_back({"k-(" + tag(f, g) + ")",
                              build_invariant(IK::pair_lower, f, g)});
        invariants.push_back({"k0(" + tag(f, g) + ")",
                              build_invariant(IK::pair_weight, f, g)});
    }
    for (auto [f, g] : cross_pairs) {
        invariants.push_back({"x+(" + tag(f, g) + ")",
                              build_invariant(IK::cross_raise, f, g)});
        invariants.push_back({"x-(" + tag(f, g) + ")",
                              build_invariant(IK::cross_lower, f, g)});
        invariants.push_back({"x0(" + tag(f, g) + ")",
                              build_invariant(IK::cross_weight, f, g)});
    }
    auto pool = enumerate_up_to_total(t.interior_bound());
    std::vector<VerificationReport> out;
    for (int a = 1; a <= 8; ++a) {
        LinearOperator j = build_generator(a);
        for (const auto& inv : invariants) {
            LinearOperator diff = commutator(j, inv.op);
            out.push_back(check_zero_action(
                "[J" + std::to_string(a) + "," + inv.name + "]", diff, pool, t.nmax));
        }
    }
    return out;
}

// The three linear relations among the diagonal invariants.
inline std::vector<VerificationReport> verify_weight_identities(const Truncation& t) {
    using namespace verifydetail;
    using IK = InvariantKind;
    LinearOperator k0ab = build_invariant(IK::pair_weight, Family::a, Family::b);
    LinearOperator k0cd = build_invariant(IK::pair_weight, Family::c, Family::d);
    LinearOperator k0ad = build_invariant(IK::pair_weight, Family::a, Family::d);
    LinearOperator k0bc = build_invariant(IK::pair_weight, Family::b, Family::c);
    LinearOperator x0ac = build_invariant(IK::cross_weight, Family::a, Family::c);
    LinearOperator x0bd = build_invariant(IK::cross_weight, Family::b, Family::d);
    auto pool = enumerate_up_to_total(t.interior_bound());
    std::vector<VerificationReport> out;
    out.push_back(check_zero_action("x0(ac) - k0(ab) + k0(bc)", x0ac - (k0ab - k0bc), pool,
                                    t.nmax));
    out.push_back(check_zero_action("x0(bd) - k0(ab) + k0(ad)", x0bd - (k0ab - k0ad), pool,
                                    t.nmax));
    out.push_back(check_zero_action("k0(ab) + k0(cd) - k0(ad) - k0(bc)",
                                    (k0ab + k0cd) - (k0ad + k0bc), pool, t.nmax));
    return out;
}

// The quadratic invariant commutes with all fifteen generators, with both
// pair-annihilation constraints, and with each family count.
inline std::vector<VerificationReport> verify_casimir2_commutation(const Truncation& t) {
    using namespace verifydetail;
    LinearOperator c2 = build_casimir2();
    auto pool = enumerate_up_to_total(t.interior_bound());
    std::vector<VerificationReport> out;
    for (const auto& [mu, nu] : so42_index_pairs())
        out.push_back(check_zero_commutator_seq("[C2," + l_name(mu, nu) + "]", c2,
                                                build_L(mu, nu), pool, t.nmax));
    out.push_back(
        check_zero_commutator_seq("[C2,k-(ab)]", c2, constraint_ab(), pool, t.nmax));
    out.push_back(
        check_zero_commutator_seq("[C2,k-(cd)]", c2, constraint_cd(), pool, t.nmax));
    for (Family f : {Family::a, Family::b, Family::c, Family::d})
        out.push_back(check_zero_commutator_seq(
            std::string("[C2,N") + family_char(f) + "]", c2, LinearOperator::number(f), pool,
            t.nmax));
    return out;
}

// Same battery for the cubic invariant; meaningful only at small interiors.
inline std::vector<VerificationReport> verify_casimir3_commutation(const Truncation& t) {
    using namespace verifydetail;
    LinearOperator c3 = build_casimir3();
    auto pool = enumerate_up_to_total(t.interior_bound());
    std::vector<VerificationReport> out;
    for (const auto& [mu, nu] : so42_index_pairs())
        out.push_back(check_zero_commutator_seq("[C3," + l_name(mu, nu) + "]", c3,
                                                build_L(mu, nu), pool, t.nmax));
    out.push_back(
        check_zero_commutator_seq("[C3,k-(ab)]", c3, constraint_ab(), pool, t.nmax));
    out.push_back(
        check_zero_commutator_seq("[C3,k-(cd)]", c3, constraint_cd(), pool, t.nmax));
    return out;
}

}  // namespace su3mult
