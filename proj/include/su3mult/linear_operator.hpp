// Polynomial ladder operators with optional diagonal-function factors.
// A term applies its word right to left, then multiplies by the value of its
// diagonal function at the resulting family counts. Equality of operators is
// decided by action on bases, not by canonical forms of the words.
#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "fock.hpp"

namespace su3mult {

struct LadderSym {
    int mode;     // linear mode index 0..11
    bool create;  // true: creation, false: annihilation

    auto operator<=>(const LadderSym&) const = default;
};

// Integer-affine form on the four family counts.
struct CountAffine {
    std::array<long, 4> coef{};
    long constant = 0;

    long value(const std::array<int, 4>& counts) const {
        long v = constant;
        for (int f = 0; f < 4; ++f) v += coef[f] * counts[f];
        return v;
    }

    bool is_constant() const {
        return coef[0] == 0 && coef[1] == 0 && coef[2] == 0 && coef[3] == 0;
    }

    CountAffine shifted(const std::array<int, 4>& s) const {
        CountAffine out = *this;
        for (int f = 0; f < 4; ++f) out.constant += coef[f] * s[f];
        return out;
    }

    auto operator<=>(const CountAffine&) const = default;

    std::string str() const {
        static const char* names[4] = {"Na", "Nb", "Nc", "Nd"};
        std::string out;
        for (int f = 0; f < 4; ++f) {
            if (coef[f] == 0) continue;
            if (!out.empty() && coef[f] > 0) out += '+';
            if (coef[f] == -1)
                out += '-';
            else if (coef[f] != 1)
                out += std::to_string(coef[f]);
            out += names[f];
        }
        if (constant != 0 || out.empty()) {
            if (!out.empty() && constant > 0) out += '+';
            out += std::to_string(constant);
        }
        return out;
    }
};

struct DiagFactor {
    CountAffine form;
    int exponent = -1;

    auto operator<=>(const DiagFactor&) const = default;
};

using DiagFun = std::vector<DiagFactor>;

/** Raised when a diagonal factor with negative exponent vanishes on a state. */
struct DiagDomainError : std::runtime_error {
    explicit DiagDomainError(const FockMonomial& m, const CountAffine& form)
        : std::runtime_error("diagonal factor (" + form.str() + ") vanishes on monomial " +
                             m.str()) {}
};

struct OpTerm {
    Scalar coeff;
    std::vector<LadderSym> word;  // leftmost symbol acts last
    DiagFun dfun;

    std::array<int, 4> shift() const {
        std::array<int, 4> s{};
        for (const auto& sym : word) s[sym.mode / 3] += sym.create ? 1 : -1;
        return s;
    }
};

/** Finite sum of ladder-word terms; Scalar-linear and closed under
 *  composition, adjoint and commutator. */
struct LinearOperator {
    std::vector<OpTerm> terms;

    static LinearOperator zero() { return {}; }

    static LinearOperator constant(const Scalar& s) {
        LinearOperator op;
        if (!s.is_zero()) op.terms.push_back({s, {}, {}});
        return op;
    }

    static LinearOperator creation(ModeIndex m, const Scalar& c = Scalar::one()) {
        LinearOperator op;
        op.terms.push_back({c, {LadderSym{m.linear(), true}}, {}});
        return op;
    }

    static LinearOperator annihilation(ModeIndex m, const Scalar& c = Scalar::one()) {
        LinearOperator op;
        op.terms.push_back({c, {LadderSym{m.linear(), false}}, {}});
        return op;
    }

    // Number operator of one family, as the normal-ordered three-mode sum.
    static LinearOperator number(Family f) {
        LinearOperator op;
        for (int color = 1; color <= 3; ++color) {
            int m = mode(f, color).linear();
            op.terms.push_back(
                {Scalar::one(), {LadderSym{m, true}, LadderSym{m, false}}, {}});
        }
        return op;
    }

    bool is_zero() const { return terms.empty(); }

    LinearOperator operator+(const LinearOperator& o) const {
        LinearOperator out = *this;
        out.terms.insert(out.terms.end(), o.terms.begin(), o.terms.end());
        out.normalize();
        return out;
    }

    LinearOperator operator-(const LinearOperator& o) const { return *this + o * Scalar(-1); }

    LinearOperator operator*(const Scalar& s) const {
        LinearOperator out;
        if (s.is_zero()) return out;
        out.terms = terms;
        for (auto& t : out.terms) t.coeff *= s;
        return out;
    }

    // Operator composition: (*this) applied after o.
    LinearOperator operator*(const LinearOperator& o) const {
        LinearOperator out;
        out.terms.reserve(terms.size() * o.terms.size());
        for (const auto& ta : terms) {
            std::array<int, 4> sa = ta.shift();
            for (const auto& tb : o.terms) {
                OpTerm t;
                t.coeff = ta.coeff * tb.coeff;
                t.word = ta.word;
                t.word.insert(t.word.end(), tb.word.begin(), tb.word.end());
                t.dfun = ta.dfun;
                // tb's diagonal function saw counts before ta's word acted.
                std::array<int, 4> neg{-sa[0], -sa[1], -sa[2], -sa[3]};
                for (const auto& f : tb.dfun)
                    t.dfun.push_back({f.form.shifted(neg), f.exponent});
                out.terms.push_back(std::move(t));
            }
        }
        out.normalize();
        return out;
    }

    LinearOperator adjoint() const {
        LinearOperator out;
        out.terms.reserve(terms.size());
        for (const auto& t : terms) {
            OpTerm r;
            r.coeff = t.coeff.conj();
            r.word.reserve(t.word.size());
            for (auto it = t.word.rbegin(); it != t.word.rend(); ++it)
                r.word.push_back(LadderSym{it->mode, !it->create});
            // The factor was evaluated after t's word; seen from the adjoint
            // term's output, that point sits one forward shift away.
            std::array<int, 4> s = t.shift();
            for (const auto& f : t.dfun) r.dfun.push_back({f.form.shifted(s), f.exponent});
            out.terms.push_back(std::move(r));
        }
        out.normalize();
        return out;
    }

    // Shared family-count shift of all terms, if consistent.
    std::optional<std::array<int, 4>> uniform_shift() const {
        if (terms.empty()) return std::nullopt;
        std::array<int, 4> s = terms.front().shift();
        for (const auto& t : terms)
            if (t.shift() != s) return std::nullopt;
        return s;
    }

    // Merges terms with identical word and diagonal function; folds constant
    // diagonal factors into coefficients; drops zero terms.
    void normalize() {
        std::map<std::pair<std::vector<LadderSym>, DiagFun>, Scalar> merged;
        for (auto& t : terms) {
            Scalar c = t.coeff;
            DiagFun fun;
            std::sort(t.dfun.begin(), t.dfun.end());
            for (size_t i = 0; i < t.dfun.size();) {
                size_t j = i;
                int e = 0;
                while (j < t.dfun.size() && t.dfun[j].form == t.dfun[i].form)
                    e += t.dfun[j++].exponent;
                if (e != 0) {
                    if (t.dfun[i].form.is_constant()) {
                        long v = t.dfun[i].form.constant;
                        if (v == 0 && e < 0)
                            throw std::domain_error(
                                "LinearOperator: constant zero factor with negative exponent");
                        c *= Scalar(rational_pow(Rational(v), e));
                    } else {
                        fun.push_back({t.dfun[i].form, e});
                    }
                }
                i = j;
            }
            if (c.is_zero()) continue;
            auto key = std::make_pair(std::move(t.word), std::move(fun));
            auto [it, inserted] = merged.emplace(std::move(key), c);
            if (!inserted) it->second += c;
        }
        terms.clear();
        for (auto& [key, c] : merged)
            if (!c.is_zero()) terms.push_back({c, key.first, key.second});
    }

    // Stable normal-form listing for golden tests: one line per term, sorted.
    std::string str() const {
        if (terms.empty()) return "0";
        std::vector<std::string> lines;
        lines.reserve(terms.size());
        for (const auto& t : terms) {
            std::string line = "(" + t.coeff.str() + ")";
            for (const auto& sym : t.word) {
                ModeIndex mi = mode_from_linear(sym.mode);
                line += ' ';
                line += family_char(mi.family);
                line += static_cast<char>('0' + mi.color);
                if (sym.create) line += '^';
            }
            for (const auto& f : t.dfun) {
                line += f.exponent < 0 ? " /(" : " *(";
                line += f.form.str();
                line += ')';
                int a = f.exponent < 0 ? -f.exponent : f.exponent;
                if (a != 1) line += "^" + std::to_string(a);
            }
            lines.push_back(std::move(line));
        }
        std::sort(lines.begin(), lines.end());
        std::string out;
        for (size_t i = 0; i < lines.size(); ++i) {
            if (i) out += '\n';
            out += lines[i];
        }
        return out;
    }
};

inline LinearOperator operator*(const Scalar& s, const LinearOperator& op) { return op * s; }

// Applies one term to one monomial, accumulating into out.
inline void apply_term(const OpTerm& t, const FockMonomial& m0, const Scalar& c0,
                       StateVector& out) {
    FockMonomial m = m0;
    Scalar c = c0 * t.coeff;
    for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) {
        if (it->create) {
            ++m.e[it->mode];
        } else {
            if (m.e[it->mode] == 0) return;
            c *= Scalar(Rational(m.e[it->mode]));
            --m.e[it->mode];
        }
    }
    if (!t.dfun.empty()) {
        std::array<int, 4> counts = m.family_counts();
        for (const auto& f : t.dfun) {
            long v = f.form.value(counts);
            if (v == 0) {
                if (f.exponent < 0) throw DiagDomainError(m, f.form);
                return;
            }
            c *= Scalar(rational_pow(Rational(v), f.exponent));
        }
    }
    out.add_term(m, c);
}

inline StateVector apply(const LinearOperator& op, const StateVector& v) {
    StateVector out;
    for (const auto& [m, c] : v.terms)
        for (const auto& t : op.terms) apply_term(t, m, c, out);
    return out;
}

inline StateVector apply(const LinearOperator& op, const FockMonomial& m) {
    StateVector out;
    for (const auto& t : op.terms) apply_term(t, m, Scalar::one(), out);
    return out;
}

inline LinearOperator commutator(const LinearOperator& a, const LinearOperator& b) {
    return a * b - b * a;
}

// [a, b] applied to a state without forming the composed operator.
inline StateVector commutator_apply(const LinearOperator& a, const LinearOperator& b,
                                    const StateVector& v) {
    return apply(a, apply(b, v)) - apply(b, apply(a, v));
}

}  // namespace su3mult
