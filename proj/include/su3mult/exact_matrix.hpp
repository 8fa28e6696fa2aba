// Dense exact matrices over the scalar field, plus bridges between operators
// acting on Fock states and their coordinate matrices on explicit bases.
#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linear_operator.hpp"

namespace su3mult {

struct DenseMatrix {
    size_t rows = 0, cols = 0;
    std::vector<Scalar> a;  // row-major

    DenseMatrix() = default;
    DenseMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, Scalar::zero()) {}

    static DenseMatrix identity(size_t n) {
        DenseMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one();
        return m;
    }

    Scalar& at(size_t r, size_t c) { return a[r * cols + c]; }
    const Scalar& at(size_t r, size_t c) const { return a[r * cols + c]; }

    bool operator==(const DenseMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }

    DenseMatrix operator+(const DenseMatrix& o) const {
        if (rows != o.rows || cols != o.cols)
            throw std::invalid_argument("DenseMatrix: shape mismatch in +");
        DenseMatrix out = *this;
        for (size_t i = 0; i < a.size(); ++i) out.a[i] += o.a[i];
        return out;
    }

    DenseMatrix operator-(const DenseMatrix& o) const {
        if (rows != o.rows || cols != o.cols)
            throw std::invalid_argument("DenseMatrix: shape mismatch in -");
        DenseMatrix out = *this;
        for (size_t i = 0; i < a.size(); ++i) out.a[i] -= o.a[i];
        return out;
    }

    DenseMatrix operator*(const Scalar& s) const {
        DenseMatrix out = *this;
        for (auto& x : out.a) x *= s;
        return out;
    }

    DenseMatrix operator*(const DenseMatrix& o) const {
        if (cols != o.rows) throw std::invalid_argument("DenseMatrix: shape mismatch in *");
        DenseMatrix out(rows, o.cols);
        for (size_t i = 0; i < rows; ++i)
            for (size_t k = 0; k < cols; ++k) {
                const Scalar& x = at(i, k);
                if (x.is_zero()) continue;
                for (size_t j = 0; j < o.cols; ++j) out.at(i, j) += x * o.at(k, j);
            }
        return out;
    }

    std::vector<Scalar> operator*(const std::vector<Scalar>& v) const {
        if (cols != v.size()) throw std::invalid_argument("DenseMatrix: shape mismatch in Mv");
        std::vector<Scalar> out(rows, Scalar::zero());
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j)
                if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
        return out;
    }

    Scalar trace() const {
        if (rows != cols) throw std::invalid_argument("DenseMatrix::trace: not square");
        Scalar t = Scalar::zero();
        for (size_t i = 0; i < rows; ++i) t += at(i, i);
        return t;
    }

    DenseMatrix conj_transpose() const {
        DenseMatrix out(cols, rows);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) out.at(j, i) = at(i, j).conj();
        return out;
    }

    bool is_hermitian() const { return rows == cols && *this == conj_transpose(); }

    bool is_zero() const {
        for (const auto& x : a)
            if (!x.is_zero()) return false;
        return true;
    }

    Scalar determinant() const {
        if (rows != cols) throw std::invalid_argument("DenseMatrix::determinant: not square");
        DenseMatrix r = *this;
        Scalar det = Scalar::one();
        for (size_t c = 0; c < cols; ++c) {
            size_t p = c;
            while (p < rows && r.at(p, c).is_zero()) ++p;
            if (p == rows) return Scalar::zero();
            if (p != c) {
                for (size_t j = 0; j < cols; ++j) std::swap(r.at(p, j), r.at(c, j));
                det = -det;
            }
            det *= r.at(c, c);
            Scalar inv = r.at(c, c).invert();
            for (size_t i = c + 1; i < rows; ++i) {
                if (r.at(i, c).is_zero()) continue;
                Scalar f = r.at(i, c) * inv;
                for (size_t j = c; j < cols; ++j) r.at(i, j) -= f * r.at(c, j);
            }
        }
        return det;
    }

    DenseMatrix submatrix(size_t r0, size_t c0, size_t nr, size_t nc) const {
        if (r0 + nr > rows || c0 + nc > cols)
            throw std::invalid_argument("DenseMatrix::submatrix: out of range");
        DenseMatrix out(nr, nc);
        for (size_t i = 0; i < nr; ++i)
            for (size_t j = 0; j < nc; ++j) out.at(i, j) = at(r0 + i, c0 + j);
        return out;
    }

    // Hermitian positive definiteness via leading principal minors.
    bool is_positive_definite() const {
        if (!is_hermitian()) return false;
        for (size_t k = 1; k <= rows; ++k) {
            Scalar minor = submatrix(0, 0, k, k).determinant();
            if (minor.sign() <= 0) return false;
        }
        return true;
    }

    DenseMatrix inverse() const {
        if (rows != cols) throw std::invalid_argument("DenseMatrix::inverse: not square");
        DenseMatrix r = *this;
        DenseMatrix inv = identity(rows);
        for (size_t c = 0; c < cols; ++c) {
            size_t p = c;
            while (p < rows && r.at(p, c).is_zero()) ++p;
            if (p == rows) throw std::domain_error("DenseMatrix::inverse: singular");
            if (p != c)
                for (size_t j = 0; j < cols; ++j) {
                    std::swap(r.at(p, j), r.at(c, j));
                    std::swap(inv.at(p, j), inv.at(c, j));
                }
            Scalar piv = r.at(c, c).invert();
            for (size_t j = 0; j < cols; ++j) {
                r.at(c, j) *= piv;
                inv.at(c, j) *= piv;
            }
            for (size_t i = 0; i < rows; ++i) {
                if (i == c || r.at(i, c).is_zero()) continue;
                Scalar f = r.at(i, c);
                for (size_t j = 0; j < cols; ++j) {
                    r.at(i, j) -= f * r.at(c, j);
                    inv.at(i, j) -= f * inv.at(c, j);
                }
            }
        }
        return inv;
    }

    size_t rank() const {
        DenseMatrix r = *this;
        size_t rk = 0;
        for (size_t c = 0; c < cols && rk < rows; ++c) {
            size_t p = rk;
            while (p < rows && r.at(p, c).is_zero()) ++p;
            if (p == rows) continue;
            for (size_t j = 0; j < cols; ++j) std::swap(r.at(p, j), r.at(rk, j));
            Scalar inv = r.at(rk, c).invert();
            for (size_t i = rk + 1; i < rows; ++i) {
                if (r.at(i, c).is_zero()) continue;
                Scalar f = r.at(i, c) * inv;
                for (size_t j = c; j < cols; ++j) r.at(i, j) -= f * r.at(rk, j);
            }
            ++rk;
        }
        return rk;
    }

    // Basis of the right kernel, each vector scaled so its first nonzero
    // coordinate is 1; vectors are ordered by their free column.
    std::vector<std::vector<Scalar>> kernel_basis() const {
        DenseMatrix r = *this;
        std::vector<long> pivot_row_of_col(cols, -1);
        size_t rk = 0;
        for (size_t c = 0; c < cols && rk < rows; ++c) {
            size_t p = rk;
            while (p < rows && r.at(p, c).is_zero()) ++p;
            if (p == rows) continue;
            for (size_t j = 0; j < cols; ++j) std::swap(r.at(p, j), r.at(rk, j));
            Scalar inv = r.at(rk, c).invert();
            for (size_t j = c; j < cols; ++j) r.at(rk, j) *= inv;
            for (size_t i = 0; i < rows; ++i) {
                if (i == rk || r.at(i, c).is_zero()) continue;
                Scalar f = r.at(i, c);
                for (size_t j = c; j < cols; ++j) r.at(i, j) -= f * r.at(rk, j);
            }
            pivot_row_of_col[c] = static_cast<long>(rk);
            ++rk;
        }
        std::vector<std::vector<Scalar>> basis;
        for (size_t c = 0; c < cols; ++c) {
            if (pivot_row_of_col[c] != -1) continue;
            std::vector<Scalar> x(cols, Scalar::zero());
            x[c] = Scalar::one();
            for (size_t c2 = 0; c2 < cols; ++c2)
                if (pivot_row_of_col[c2] != -1)
                    x[c2] = -r.at(static_cast<size_t>(pivot_row_of_col[c2]), c);
            size_t first = 0;
            while (x[first].is_zero()) ++first;
            if (!(x[first] == Scalar::one())) {
                Scalar inv = x[first].invert();
                for (auto& e : x) e *= inv;
            }
            basis.push_back(std::move(x));
        }
        return basis;
    }
};

/** Coordinate matrix of an operator between explicit monomial bases.
 *  at(i, j) is the coefficient of codomain[i] in the image of domain[j]. */
struct OperatorMatrix {
    std::vector<FockMonomial> domain;
    std::vector<FockMonomial> codomain;
    DenseMatrix m;
};

// Builds the matrix of op on the given domain monomials. The codomain is the
// union of monomials reached by the action; when the action vanishes on the
// whole domain and every term of op shifts family counts the same way, the
// codomain falls back to the shifted sector of a single-sector domain.
inline OperatorMatrix matrix_of(const LinearOperator& op,
                                const std::vector<FockMonomial>& domain) {
    std::vector<StateVector> images;
    images.reserve(domain.size());
    std::map<FockMonomial, size_t> row_of;
    for (const auto& mono : domain) {
        StateVector img = apply(op, mono);
        for (const auto& [m2, c] : img.terms) row_of.emplace(m2, 0);
        images.push_back(std::move(img));
    }
    OperatorMatrix out;
    out.domain = domain;
    if (row_of.empty() && !domain.empty()) {
        auto shift = op.uniform_shift();
        bool single_sector = true;
        auto counts = domain.front().family_counts();
        for (const auto& mono : domain)
            if (mono.family_counts() != counts) single_sector = false;
        if (shift && single_sector) {
            std::array<int, 4> target{};
            bool ok = true;
            for (int f = 0; f < 4; ++f) {
                target[f] = counts[f] + (*shift)[f];
                if (target[f] < 0) ok = false;
            }
            if (ok) {
                SectorBasis sector =
                    enumerate_sector(target[0], target[1], target[2], target[3]);
                for (const auto& m2 : sector.monomials) row_of.emplace(m2, 0);
            }
        }
    }
    size_t idx = 0;
    for (auto& [mono, row] : row_of) {
        row = idx++;
        out.codomain.push_back(mono);
    }
    out.m = DenseMatrix(out.codomain.size(), domain.size());
    for (size_t j = 0; j < images.size(); ++j)
        for (const auto& [m2, c] : images[j].terms) out.m.at(row_of.at(m2), j) = c;
    return out;
}

inline OperatorMatrix matrix_of(const LinearOperator& op, const SectorBasis& basis) {
    return matrix_of(op, basis.monomials);
}

// Matrix of op on a basis of explicit states, rows indexed by the union of
// monomials in the images.
inline DenseMatrix matrix_of_states(const LinearOperator& op,
                                    const std::vector<StateVector>& basis,
                                    std::vector<FockMonomial>* codomain = nullptr) {
    std::vector<StateVector> images;
    images.reserve(basis.size());
    std::map<FockMonomial, size_t> row_of;
    for (const auto& v : basis) {
        StateVector img = apply(op, v);
        for (const auto& [m2, c] : img.terms) row_of.emplace(m2, 0);
        images.push_back(std::move(img));
    }
    size_t idx = 0;
    for (auto& [mono, row] : row_of) row = idx++;
    DenseMatrix out(row_of.size(), basis.size());
    for (size_t j = 0; j < images.size(); ++j)
        for (const auto& [m2, c] : images[j].terms) out.at(row_of.at(m2), j) = c;
    if (codomain) {
        codomain->clear();
        for (const auto& [mono, row] : row_of) codomain->push_back(mono);
    }
    return out;
}

inline StateVector combine(const std::vector<StateVector>& basis,
                           const std::vector<Scalar>& coords) {
    if (basis.size() != coords.size())
        throw std::invalid_argument("combine: coordinate count mismatch");
    StateVector out;
    for (size_t i = 0; i < basis.size(); ++i)
        if (!coords[i].is_zero()) out = out + basis[i] * coords[i];
    return out;
}

// Joint kernel of several operators on a basis of states, returned as states.
// The operator matrices are stacked so one reduction finds the common kernel.
inline std::vector<StateVector> joint_nullspace(const std::vector<LinearOperator>& ops,
                                                const std::vector<StateVector>& basis) {
    if (basis.empty()) return {};
    std::vector<DenseMatrix> blocks;
    size_t total_rows = 0;
    for (const auto& op : ops) {
        blocks.push_back(matrix_of_states(op, basis));
        total_rows += blocks.back().rows;
    }
    DenseMatrix stacked(total_rows, basis.size());
    size_t r0 = 0;
    for (const auto& b : blocks) {
        for (size_t i = 0; i < b.rows; ++i)
            for (size_t j = 0; j < b.cols; ++j) stacked.at(r0 + i, j) = b.at(i, j);
        r0 += b.rows;
    }
    std::vector<StateVector> out;
    for (const auto& coords : stacked.kernel_basis()) out.push_back(combine(basis, coords));
    return out;
}

inline std::vector<StateVector> nullspace(const LinearOperator& op,
                                          const std::vector<StateVector>& basis) {
    return joint_nullspace({op}, basis);
}

inline std::vector<StateVector> nullspace(const LinearOperator& op, const SectorBasis& basis) {
    std::vector<StateVector> states;
    states.reserve(basis.dimension());
    for (const auto& mono : basis.monomials) {
        StateVector v;
        v.add_term(mono, Scalar::one());
        states.push_back(std::move(v));
    }
    return nullspace(op, states);
}

inline DenseMatrix gram_matrix(const std::vector<StateVector>& basis) {
    DenseMatrix g(basis.size(), basis.size());
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) g.at(i, j) = gram_inner(basis[i], basis[j]);
    return g;
}

// Pairing matrix of op in the gram inner product: at(i, j) = <v_i, op v_j>.
inline DenseMatrix pairing_matrix(const LinearOperator& op,
                                  const std::vector<StateVector>& basis) {
    DenseMatrix h(basis.size(), basis.size());
    for (size_t j = 0; j < basis.size(); ++j) {
        StateVector img = apply(op, basis[j]);
        for (size_t i = 0; i < basis.size(); ++i) h.at(i, j) = gram_inner(basis[i], img);
    }
    return h;
}

}  // namespace su3mult
