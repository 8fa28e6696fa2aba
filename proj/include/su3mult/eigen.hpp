// Exact generalized eigensolver for hermitian pencils (H, G) with G positive
// definite. Rational eigenvalues are recovered exactly together with their
// eigenspaces; any remaining real roots of the characteristic polynomial are
// certified by Sturm isolation and sign bisection to a fixed number of decimal
// digits and reported without eigenvectors.
#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exact_matrix.hpp"

namespace su3mult {

struct EigenValue {
    bool exact = true;
    Scalar value;       // set when exact
    Rational lo, hi;    // enclosing interval when inexact
    std::string decimal;  // truncated decimal expansion when inexact
    int digits = 0;       // certified digits after the decimal point

    std::string str() const { return exact ? value.str() : decimal; }
};

struct EigenSpace {
    EigenValue value;
    int multiplicity = 0;
    std::vector<std::vector<Scalar>> vectors;  // empty when the value is inexact
};

struct EigenResult {
    std::vector<EigenSpace> spaces;
};

namespace polydetail {

// Polynomials over the scalar field, coefficients ascending.
using Poly = std::vector<Scalar>;

inline void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline long degree(const Poly& p) { return static_cast<long>(p.size()) - 1; }

inline Scalar eval(const Poly& p, const Scalar& x) {
    Scalar v = Scalar::zero();
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
    return v;
}

inline Poly derivative(const Poly& p) {
    Poly out;
    for (size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Scalar(Rational(long(i))));
    trim(out);
    return out;
}

inline Poly sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Scalar::zero());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Scalar::zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

inline std::pair<Poly, Poly> divmod(Poly num, const Poly& den) {
    if (den.empty()) throw std::domain_error("polydetail::divmod: zero divisor");
    trim(num);
    long dd = degree(den);
    Scalar lead_inv = den.back().invert();
    Poly q(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0, Scalar::zero());
    while (degree(num) >= dd) {
        long dn = degree(num);
        Scalar f = num.back() * lead_inv;
        q[dn - dd] = f;
        for (long i = 0; i <= dd; ++i) num[dn - dd + i] -= f * den[i];
        num.pop_back();  // leading term cancels exactly
        trim(num);
    }
    trim(q);
    return {q, num};
}

inline Poly make_monic(Poly p) {
    trim(p);
    if (!p.empty() && !(p.back() == Scalar::one())) {
        Scalar inv = p.back().invert();
        for (auto& c : p) c *= inv;
    }
    return p;
}

inline Poly gcd_monic(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

// Square-free decomposition; returns (factor, multiplicity) pairs.
inline std::vector<std::pair<Poly, int>> square_free(Poly f) {
    f = make_monic(f);
    std::vector<std::pair<Poly, int>> out;
    if (degree(f) < 1) return out;
    Poly fp = derivative(f);
    Poly g = gcd_monic(f, fp);
    if (degree(g) == 0) {
        out.push_back({f, 1});
        return out;
    }
    Poly w = divmod(f, g).first;
    Poly z = sub(divmod(fp, g).first, derivative(w));
    int i = 1;
    while (degree(w) > 0) {
        Poly gi = gcd_monic(w, z);
        if (degree(gi) > 0) out.push_back({gi, i});
        w = divmod(w, gi).first;
        z = sub(divmod(z, gi).first, derivative(w));
        ++i;
    }
    return out;
}

inline bool is_rational_poly(const Poly& p) {
    for (const auto& c : p)
        if (!c.is_rational()) return false;
    return true;
}

// Coefficient-wise image under the field automorphism sending r3 to -r3.
inline Poly conj_root3(Poly p) {
    for (auto& c : p) {
        c.y = -c.y;
        c.z = -c.z;
    }
    return p;
}

inline std::optional<std::vector<mpz_class>> positive_divisors(mpz_class n) {
    if (n < 0) n = -n;
    if (n == 0) return std::nullopt;
    std::vector<mpz_class> out;
    mpz_class d = 1;
    long steps = 0;
    while (d * d <= n) {
        if (++steps > 2000000) return std::nullopt;
        if (n % d == 0) {
            out.push_back(d);
            mpz_class q = n / d;
            if (q != d) out.push_back(q);
        }
        ++d;
    }
    return out;
}

// Peels rational roots off f (with multiplicity), appending to roots. When the
// divisor enumeration for the candidate bound is too large, f is left for the
// interval path untouched past the zero roots.
inline void extract_rational_roots(Poly& f, std::vector<std::pair<Rational, int>>& roots) {
    trim(f);
    int zero_mult = 0;
    while (degree(f) >= 1 && f[0].is_zero()) {
        f.erase(f.begin());
        ++zero_mult;
    }
    if (zero_mult) roots.push_back({Rational(0), zero_mult});
    if (degree(f) < 1) return;

    Poly probe = is_rational_poly(f) ? f : mul(f, conj_root3(f));
    mpz_class scale = 1;
    for (const auto& c : probe)
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.w.get_den().get_mpz_t());
    std::vector<mpz_class> ic;
    for (const auto& c : probe) {
        Rational s = c.w * Rational(scale);
        ic.push_back(s.get_num());
    }
    auto dp = positive_divisors(ic.front());
    auto dq = positive_divisors(ic.back());
    if (!dp || !dq) return;

    std::set<Rational> candidates;
    for (const auto& p : *dp)
        for (const auto& q : *dq) {
            Rational r(p, q);
            r.canonicalize();
            candidates.insert(r);
            candidates.insert(-r);
        }
    Poly linear(2, Scalar::one());
    for (const auto& r : candidates) {
        int m = 0;
        while (degree(f) >= 1 && eval(f, Scalar(r)).is_zero()) {
            linear[0] = Scalar(-r);
            f = divmod(f, linear).first;
            ++m;
        }
        if (m) roots.push_back({r, m});
    }
}

inline std::vector<Poly> sturm_chain(const Poly& f) {
    std::vector<Poly> chain{f, derivative(f)};
    trim(chain.back());
    while (degree(chain.back()) > 0) {
        Poly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

inline int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
    int v = 0, last = 0;
    Scalar sx(x);
    for (const auto& p : chain) {
        Scalar val = eval(p, sx);
        if (val.is_zero()) continue;
        int s = val.sign();
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// Strict bound on root magnitudes: 1 + max |c_i| over the monic coefficients,
// with |u + v r3| bounded by |u| + 2 |v|.
inline Rational cauchy_bound(const Poly& f) {
    Poly m = make_monic(f);
    Rational best = 0;
    for (size_t i = 0; i + 1 < m.size(); ++i) {
        Rational mag = abs(m[i].w) + 2 * abs(m[i].y);
        if (mag > best) best = mag;
    }
    return best + 1;
}

// Point strictly inside (lo, hi) where f does not vanish; tries the dyadic and
// low-denominator fractions in turn, succeeding after at most deg(f) misses.
inline Rational nonroot_split(const Poly& f, const Rational& lo, const Rational& hi) {
    for (long den = 2;; ++den)
        for (long num = 1; num < den; ++num) {
            Rational t(num, den);
            t.canonicalize();
            Rational cand = lo + (hi - lo) * t;
            if (!eval(f, Scalar(cand)).is_zero()) return cand;
        }
}

struct RootInterval {
    Rational lo, hi;
};

// Isolating intervals for all real roots of square-free f, sorted.
inline std::vector<RootInterval> isolate_roots(const Poly& f) {
    std::vector<RootInterval> out;
    if (degree(f) < 1) return out;
    std::vector<Poly> chain = sturm_chain(f);
    Rational bound = cauchy_bound(f);
    std::vector<RootInterval> work{{-bound, bound}};
    while (!work.empty()) {
        RootInterval iv = work.back();
        work.pop_back();
        int count = sign_variations(chain, iv.lo) - sign_variations(chain, iv.hi);
        if (count <= 0) continue;
        if (count == 1) {
            out.push_back(iv);
            continue;
        }
        Rational mid = nonroot_split(f, iv.lo, iv.hi);
        work.push_back({iv.lo, mid});
        work.push_back({mid, iv.hi});
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

// Narrows an isolating interval of square-free f until the first `digits`
// decimal digits are certain, returning the truncated expansion. If a split
// point turns out to be an exact root the value is returned exactly instead.
inline EigenValue certify_root(const Poly& f, Rational lo, Rational hi, int digits) {
    int sign_lo = eval(f, Scalar(lo)).sign();
    auto bisect = [&]() -> bool {
        Rational mid = lo + (hi - lo) / 2;
        Scalar vm = eval(f, Scalar(mid));
        if (vm.is_zero()) return false;
        if (vm.sign() == sign_lo)
            lo = mid;
        else
            hi = mid;
        return true;
    };
    mpz_class d10 = 1;
    for (int i = 0; i < digits; ++i) d10 *= 10;
    auto floor_scaled = [&](const Rational& r) {
        mpz_class num = r.get_num() * d10, out;
        mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), r.get_den().get_mpz_t());
        return out;
    };
    while (true) {
        bool split_zero = false;
        while (sgn(lo) <= 0 && sgn(hi) >= 0) {
            if (!bisect()) {
                split_zero = true;
                break;
            }
        }
        if (split_zero) break;
        bool neg = sgn(hi) < 0;
        Rational a = neg ? -hi : lo;
        Rational b = neg ? -lo : hi;
        mpz_class fa = floor_scaled(a);
        if (fa == floor_scaled(b)) {
            EigenValue v;
            v.exact = false;
            v.lo = lo;
            v.hi = hi;
            v.digits = digits;
            mpz_class ip = fa / d10, frac = fa % d10;
            std::string fs = frac.get_str();
            v.decimal = (neg ? "-" : "") + ip.get_str() + "." +
                        std::string(digits - fs.size(), '0') + fs;
            return v;
        }
        if (!bisect()) break;
    }
    // The midpoint is an exact rational root.
    EigenValue v;
    v.value = Scalar(lo + (hi - lo) / 2);
    return v;
}

// Characteristic polynomial of A (monic, ascending) by the trace recursion.
inline Poly char_poly(const DenseMatrix& a) {
    size_t n = a.rows;
    Poly c(n + 1, Scalar::zero());
    c[n] = Scalar::one();
    DenseMatrix m = DenseMatrix::identity(n);
    for (size_t k = 1; k <= n; ++k) {
        DenseMatrix am = a * m;
        Scalar ck = am.trace() * Scalar(Rational(-1, static_cast<long>(k)));
        c[n - k] = ck;
        if (k < n) m = am + DenseMatrix::identity(n) * ck;
    }
    return c;
}

}  // namespace polydetail

/** Solves H v = lambda G v for a hermitian pencil with G positive definite.
 *  Spaces are sorted by eigenvalue; exact rational eigenvalues carry kernel
 *  bases of (H - lambda G), inexact ones carry certified decimal enclosures. */
inline EigenResult generalized_eigen(const DenseMatrix& h, const DenseMatrix& g,
                                     int digits = 50) {
    using namespace polydetail;
    if (h.rows != h.cols || g.rows != g.cols || h.rows != g.rows)
        throw std::invalid_argument("generalized_eigen: shape mismatch");
    if (!g.is_positive_definite())
        throw std::invalid_argument(
            "generalized_eigen: gram matrix must be hermitian positive definite");
    if (!h.is_hermitian())
        throw std::invalid_argument("generalized_eigen: pairing matrix must be hermitian");

    EigenResult res;
    size_t n = h.rows;
    if (n == 0) return res;

    Poly chi = char_poly(g.inverse() * h);
    for (const auto& c : chi)
        if (!(c.x == 0) || !(c.z == 0))
            throw std::logic_error("generalized_eigen: characteristic polynomial not real");

    std::vector<std::pair<Rational, int>> rational_roots;
    Poly rest = chi;
    extract_rational_roots(rest, rational_roots);

    for (const auto& [r, mult] : rational_roots) {
        EigenSpace s;
        s.value.exact = true;
        s.value.value = Scalar(r);
        s.multiplicity = mult;
        DenseMatrix k = h - g * Scalar(r);
        s.vectors = k.kernel_basis();
        if (s.vectors.size() != static_cast<size_t>(mult))
            throw std::logic_error("generalized_eigen: eigenspace dimension mismatch");
        res.spaces.push_back(std::move(s));
    }

    if (degree(rest) >= 1) {
        for (const auto& [factor, mult] : square_free(rest)) {
            std::vector<RootInterval> intervals = isolate_roots(factor);
            long found = 0;
            for (const auto& iv : intervals) {
                EigenSpace s;
                s.value = certify_root(factor, iv.lo, iv.hi, digits);
                s.multiplicity = mult;
                if (s.value.exact) {
                    DenseMatrix k = h - g * s.value.value;
                    s.vectors = k.kernel_basis();
                }
                found += mult;
                res.spaces.push_back(std::move(s));
            }
            if (found != degree(factor) * mult)
                throw std::logic_error(
                    "generalized_eigen: characteristic polynomial has non-real roots");
        }
    }

    long total = 0;
    for (const auto& s : res.spaces) total += s.multiplicity;
    if (total != static_cast<long>(n))
        throw std::logic_error("generalized_eigen: eigenvalue multiplicities do not sum");

    std::sort(res.spaces.begin(), res.spaces.end(),
              [](const EigenSpace& a, const EigenSpace& b) {
                  const EigenValue &x = a.value, &y = b.value;
                  if (x.exact && y.exact) return (x.value - y.value).sign() < 0;
                  if (x.exact) return !((x.value - Scalar(y.hi)).sign() > 0);
                  if (y.exact) return (Scalar(x.hi) - y.value).sign() < 0;
                  if (x.lo != y.lo) return x.lo < y.lo;
                  return x.decimal < y.decimal;
              });

    // Eigenvectors of distinct eigenvalues must be orthogonal in the gram
    // geometry; a violation indicates an arithmetic fault, not bad input.
    for (size_t i = 0; i < res.spaces.size(); ++i)
        for (size_t j = i + 1; j < res.spaces.size(); ++j)
            for (const auto& u : res.spaces[i].vectors)
                for (const auto& v : res.spaces[j].vectors) {
                    Scalar dot = Scalar::zero();
                    std::vector<Scalar> gv = g * v;
                    for (size_t t = 0; t < u.size(); ++t) dot += u[t].conj() * gv[t];
                    if (!dot.is_zero())
                        throw std::logic_error(
                            "generalized_eigen: eigenspaces not gram-orthogonal");
                }

    return res;
}

}  // namespace su3mult
