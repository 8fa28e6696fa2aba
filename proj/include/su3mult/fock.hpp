// Bosonic Fock space on twelve modes: four triplet families a, b, c, d.
// Basis monomials are unnormalized products of creation operators on the
// vacuum; the inner product carries the factorial weights.
#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace su3mult {

enum class Family : uint8_t { a = 0, b = 1, c = 2, d = 3 };

inline char family_char(Family f) { return "abcd"[static_cast<int>(f)]; }

// Families a, c carry a triplet (lower) color index; b, d the conjugate
// (upper) index. Weights below encode that distinction.
inline bool is_conjugate_family(Family f) { return f == Family::b || f == Family::d; }

struct ModeIndex {
    Family family;
    int color;  // 1..3

    int linear() const { return static_cast<int>(family) * 3 + (color - 1); }
};

inline ModeIndex mode(Family f, int color) {
    if (color < 1 || color > 3) throw std::invalid_argument("mode: color out of range");
    return ModeIndex{f, color};
}

inline ModeIndex mode_from_linear(int m) {
    if (m < 0 || m >= 12) throw std::invalid_argument("mode_from_linear: out of range");
    return ModeIndex{static_cast<Family>(m / 3), m % 3 + 1};
}

// Integer weight coordinates (2*I3, 3*Y); both are integral on every monomial.
struct Weight {
    long twoI3 = 0;
    long threeY = 0;
    auto operator<=>(const Weight&) const = default;
};

/** Occupation-number monomial prod_m (creation_m)^{e_m} |0>, unnormalized. */
struct FockMonomial {
    std::array<int, 12> e{};

    auto operator<=>(const FockMonomial&) const = default;

    int total() const {
        int t = 0;
        for (int v : e) t += v;
        return t;
    }

    int family_count(Family f) const {
        int base = static_cast<int>(f) * 3;
        return e[base] + e[base + 1] + e[base + 2];
    }

    std::array<int, 4> family_counts() const {
        return {family_count(Family::a), family_count(Family::b), family_count(Family::c),
                family_count(Family::d)};
    }

    // Eigenvalue of (2*I3, 3*Y): per quantum, triplet colors carry
    // (1,1), (-1,1), (0,-2); conjugate families the negatives.
    Weight weight() const {
        static constexpr long two_i3[3] = {1, -1, 0};
        static constexpr long three_y[3] = {1, 1, -2};
        Weight w;
        for (int m = 0; m < 12; ++m) {
            if (e[m] == 0) continue;
            int color = m % 3;
            long sign = is_conjugate_family(static_cast<Family>(m / 3)) ? -1 : 1;
            w.twoI3 += sign * two_i3[color] * e[m];
            w.threeY += sign * three_y[color] * e[m];
        }
        return w;
    }

    std::string str() const {
        std::string out;
        for (int m = 0; m < 12; ++m) {
            if (e[m] == 0) continue;
            if (!out.empty()) out += ' ';
            ModeIndex mi = mode_from_linear(m);
            out += family_char(mi.family);
            out += static_cast<char>('0' + mi.color);
            if (e[m] > 1) out += '^' + std::to_string(e[m]);
        }
        return out.empty() ? "|0>" : out;
    }
};

inline FockMonomial vacuum_monomial() { return FockMonomial{}; }

/** Finite Scalar-linear combination of monomials; zero terms are pruned. */
struct StateVector {
    std::map<FockMonomial, Scalar> terms;

    static StateVector vacuum() {
        StateVector v;
        v.terms[vacuum_monomial()] = Scalar::one();
        return v;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const FockMonomial& m, const Scalar& s) {
        if (s.is_zero()) return;
        auto [it, inserted] = terms.emplace(m, s);
        if (!inserted) {
            it->second += s;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    StateVector operator+(const StateVector& o) const {
        StateVector out = *this;
        for (const auto& [m, s] : o.terms) out.add_term(m, s);
        return out;
    }

    StateVector operator-(const StateVector& o) const {
        StateVector out = *this;
        for (const auto& [m, s] : o.terms) out.add_term(m, -s);
        return out;
    }

    StateVector operator*(const Scalar& s) const {
        StateVector out;
        if (s.is_zero()) return out;
        for (const auto& [m, c] : terms) out.terms.emplace(m, c * s);
        return out;
    }

    bool operator==(const StateVector& o) const { return terms == o.terms; }

    // All monomials share one weight; throws if mixed. Zero vectors have no weight.
    Weight weight() const {
        if (terms.empty()) throw std::domain_error("StateVector::weight: zero vector");
        Weight w = terms.begin()->first.weight();
        for (const auto& [m, s] : terms)
            if (m.weight() != w) throw std::domain_error("StateVector::weight: mixed weights");
        return w;
    }

    bool is_weight_homogeneous() const {
        if (terms.empty()) return true;
        Weight w = terms.begin()->first.weight();
        for (const auto& [m, s] : terms)
            if (m.weight() != w) return false;
        return true;
    }

    std::string str() const {
        if (terms.empty()) return "0";
        std::string out;
        for (const auto& [m, s] : terms) {
            if (!out.empty()) out += " + ";
            out += "(" + s.str() + ") " + m.str();
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const StateVector& v) {
        return os << v.str();
    }
};

// True Fock inner product in the unnormalized monomial convention:
// <u, v> = sum over shared monomials of conj(u_m) v_m prod_m e_m!.
inline Scalar gram_inner(const StateVector& u, const StateVector& v) {
    Scalar acc = Scalar::zero();
    auto iu = u.terms.begin();
    auto iv = v.terms.begin();
    while (iu != u.terms.end() && iv != v.terms.end()) {
        if (iu->first < iv->first) {
            ++iu;
        } else if (iv->first < iu->first) {
            ++iv;
        } else {
            mpz_class weight = 1;
            for (int x : iu->first.e)
                if (x > 1) weight *= factorial(static_cast<unsigned>(x));
            acc += iu->second.conj() * iv->second * Scalar(Rational(weight));
            ++iu;
            ++iv;
        }
    }
    return acc;
}

/** All monomials of one family-count sector, in lexicographic order. */
struct SectorBasis {
    std::array<int, 4> counts{};
    std::vector<FockMonomial> monomials;
    std::map<FockMonomial, int> index;

    int dimension() const { return static_cast<int>(monomials.size()); }

    int index_of(const FockMonomial& m) const {
        auto it = index.find(m);
        if (it == index.end())
            throw std::out_of_range("SectorBasis::index_of: monomial not in sector");
        return it->second;
    }

    bool operator==(const SectorBasis& o) const { return counts == o.counts; }
};

inline SectorBasis enumerate_sector(int na, int nb, int nc, int nd) {
    if (na < 0 || nb < 0 || nc < 0 || nd < 0)
        throw std::invalid_argument("enumerate_sector: negative count");
    SectorBasis basis;
    basis.counts = {na, nb, nc, nd};
    std::array<std::vector<std::array<int, 3>>, 4> family;
    for (int f = 0; f < 4; ++f) {
        int n = basis.counts[f];
        for (int e1 = 0; e1 <= n; ++e1)
            for (int e2 = 0; e1 + e2 <= n; ++e2) family[f].push_back({e1, e2, n - e1 - e2});
    }
    for (const auto& ea : family[0])
        for (const auto& eb : family[1])
            for (const auto& ec : family[2])
                for (const auto& ed : family[3]) {
                    FockMonomial m;
                    for (int i = 0; i < 3; ++i) {
                        m.e[i] = ea[i];
                        m.e[3 + i] = eb[i];
                        m.e[6 + i] = ec[i];
                        m.e[9 + i] = ed[i];
                    }
                    basis.monomials.push_back(m);
                }
    for (int i = 0; i < basis.dimension(); ++i) basis.index.emplace(basis.monomials[i], i);
    return basis;
}

// Every monomial with total quanta <= bound, lexicographically ordered.
inline std::vector<FockMonomial> enumerate_up_to_total(int bound) {
    std::vector<FockMonomial> out;
    FockMonomial m;
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == 12) {
            out.push_back(m);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            m.e[pos] = v;
            self(self, pos + 1, remaining - v);
        }
        m.e[pos] = 0;
    };
    rec(rec, 0, bound);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace su3mult
