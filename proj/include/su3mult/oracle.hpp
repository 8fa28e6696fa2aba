// Character-theoretic reference for su(3) weight systems and tensor product
// decompositions, in pure integer arithmetic. Weights live in the coordinates
// (x, y) = (two I3, three Y); the scaled pairing form6 below is six times the
// Killing-normalized inner product, so all intermediate values stay integral.
// This header deliberately depends on nothing but the label vocabulary.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "su3_labels.hpp"

namespace su3mult::oracle {

using Coord = std::pair<long long, long long>;

inline long long form6(const Coord& u, const Coord& v) {
    return 3 * u.first * v.first + u.second * v.second;
}

inline const Coord& simple_root(int i) {
    static const Coord b1{1, 3}, b2{1, -3};
    if (i == 1) return b1;
    if (i == 2) return b2;
    throw std::invalid_argument("simple_root: index must be 1 or 2");
}

inline Coord highest_weight(const IrrepLabel& r) {
    return {r.p + r.q, r.p - r.q};
}

// Reflection in the wall of simple root i; the coroot pairing of a weight
// (x, y) is (x + y)/2 against root 1 and (x - y)/2 against root 2.
inline Coord reflect(int i, const Coord& mu) {
    long long n;
    if (i == 1)
        n = mu.first + mu.second;
    else if (i == 2)
        n = mu.first - mu.second;
    else
        throw std::invalid_argument("reflect: index must be 1 or 2");
    if (n % 2 != 0) throw std::invalid_argument("reflect: weight outside the lattice");
    n /= 2;
    const Coord& b = simple_root(i);
    return {mu.first - n * b.first, mu.second - n * b.second};
}

using WeightSystem = std::map<Coord, long long>;

namespace oracledetail {

// Freudenthal recursion, filled level by level below the highest weight.
inline WeightSystem compute_weight_system(const IrrepLabel& r) {
    if (r.p < 0 || r.q < 0)
        throw std::invalid_argument("weight_system: negative label");
    const Coord lambda = highest_weight(r);
    const Coord rho{2, 0};
    const Coord positive_roots[3] = {simple_root(1), simple_root(2), {2, 0}};
    const int root_level[3] = {1, 1, 2};
    const Coord lr{lambda.first + rho.first, lambda.second + rho.second};
    const long long top_norm = form6(lr, lr);

    WeightSystem m;
    m[lambda] = 1;
    const long long depth = 2LL * (r.p + r.q);
    for (long long level = 1; level <= depth; ++level) {
        for (long long n1 = 0; n1 <= level; ++n1) {
            long long n2 = level - n1;
            Coord mu{lambda.first - n1 * simple_root(1).first - n2 * simple_root(2).first,
                     lambda.second - n1 * simple_root(1).second - n2 * simple_root(2).second};
            Coord mr{mu.first + rho.first, mu.second + rho.second};
            long long den = top_norm - form6(mr, mr);
            long long num = 0;
            for (int a = 0; a < 3; ++a) {
                const Coord& al = positive_roots[a];
                for (long long k = 1; k * root_level[a] <= level; ++k) {
                    Coord up{mu.first + k * al.first, mu.second + k * al.second};
                    auto it = m.find(up);
                    if (it == m.end()) continue;
                    num += 2 * it->second * form6(up, al);
                }
            }
            if (den <= 0) {
                if (num != 0)
                    throw std::logic_error("weight_system: nonzero sum at null denominator");
                continue;
            }
            if (num % den != 0)
                throw std::logic_error("weight_system: recursion not integral");
            long long mult = num / den;
            if (mult < 0) throw std::logic_error("weight_system: negative multiplicity");
            if (mult > 0) m[mu] = mult;
        }
    }
    return m;
}

}  // namespace oracledetail

inline const WeightSystem& weight_system(const IrrepLabel& r) {
    static std::map<IrrepLabel, WeightSystem> cache;
    auto it = cache.find(r);
    if (it == cache.end()) it = cache.emplace(r, oracledetail::compute_weight_system(r)).first;
    return it->second;
}

// Convolution of the two weight systems: the character of the tensor product.
inline WeightSystem tensor_weights(const IrrepLabel& r1, const IrrepLabel& r2) {
    WeightSystem bag;
    for (const auto& [u, mu] : weight_system(r1))
        for (const auto& [v, mv] : weight_system(r2))
            bag[{u.first + v.first, u.second + v.second}] += mu * mv;
    return bag;
}

// Peels dominant highest weights off the product character, largest in the
// lexicographic (x, then y) order first; that weight is always dominant and
// is the highest weight of an irreducible constituent.
inline std::map<IrrepLabel, long long> tensor_decompose(const IrrepLabel& r1,
                                                        const IrrepLabel& r2) {
    WeightSystem bag = tensor_weights(r1, r2);
    std::map<IrrepLabel, long long> out;
    while (!bag.empty()) {
        auto top = *bag.rbegin();
        const Coord& t = top.first;
        long long mult = top.second;
        if (mult <= 0) throw std::logic_error("tensor_decompose: nonpositive peak");
        if ((t.first + t.second) % 2 != 0)
            throw std::logic_error("tensor_decompose: weight off the irrep lattice");
        long long p = (t.first + t.second) / 2;
        long long q = (t.first - t.second) / 2;
        if (p < 0 || q < 0)
            throw std::logic_error("tensor_decompose: peak weight not dominant");
        IrrepLabel lab{static_cast<int>(p), static_cast<int>(q)};
        out[lab] += mult;
        for (const auto& [w, mw] : weight_system(lab)) {
            auto it = bag.find(w);
            if (it == bag.end() || it->second < mult * mw)
                throw std::logic_error("tensor_decompose: peel underflow");
            it->second -= mult * mw;
            if (it->second == 0) bag.erase(it);
        }
    }
    return out;
}

// Multiplicity of the irrep `target` inside r1 x r2.
inline long long tensor_multiplicity(const IrrepLabel& r1, const IrrepLabel& r2,
                                     const IrrepLabel& target) {
    auto dec = tensor_decompose(r1, r2);
    auto it = dec.find(target);
    return it == dec.end() ? 0 : it->second;
}

}  // namespace su3mult::oracle
