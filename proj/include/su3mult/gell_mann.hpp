// The eight traceless hermitian 3x3 basis matrices in the standard
// normalization tr(g_a g_b) = 2 delta_ab, with exact entries.
#pragma once

#include <array>

#include "exact_matrix.hpp"

namespace su3mult {

inline const std::array<DenseMatrix, 8>& gell_mann_basis() {
    static const std::array<DenseMatrix, 8> table = [] {
        std::array<DenseMatrix, 8> t;
        for (auto& m : t) m = DenseMatrix(3, 3);
        t[0].at(0, 1) = Scalar(1);
        t[0].at(1, 0) = Scalar(1);
        t[1].at(0, 1) = -Scalar::i();
        t[1].at(1, 0) = Scalar::i();
        t[2].at(0, 0) = Scalar(1);
        t[2].at(1, 1) = Scalar(-1);
        t[3].at(0, 2) = Scalar(1);
        t[3].at(2, 0) = Scalar(1);
        t[4].at(0, 2) = -Scalar::i();
        t[4].at(2, 0) = Scalar::i();
        t[5].at(1, 2) = Scalar(1);
        t[5].at(2, 1) = Scalar(1);
        t[6].at(1, 2) = -Scalar::i();
        t[6].at(2, 1) = Scalar::i();
        Scalar third_r3 = Scalar(rational(1, 3)) * Scalar::sqrt3();  // 1/r3
        t[7].at(0, 0) = third_r3;
        t[7].at(1, 1) = third_r3;
        t[7].at(2, 2) = third_r3 * Scalar(-2);
        return t;
    }();
    return table;
}

// Hermiticity, tracelessness and the pairwise trace normalization.
inline bool gell_mann_consistent() {
    const auto& g = gell_mann_basis();
    for (int a = 0; a < 8; ++a) {
        if (!g[a].is_hermitian()) return false;
        if (!g[a].trace().is_zero()) return false;
        for (int b = 0; b < 8; ++b) {
            Scalar want = a == b ? Scalar(2) : Scalar::zero();
            if (!((g[a] * g[b]).trace() == want)) return false;
        }
    }
    return true;
}

}  // namespace su3mult
