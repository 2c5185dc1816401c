#pragma once

#include <vector>

#include "heckalg/linalg.hpp"

// Test-side oracles, kept deliberately naive and independent of the library's
// sparse elimination path.
namespace heckalg::oracles {

// Plain dense Gaussian elimination, partial pivoting by first nonzero.
inline int dense_rank(std::vector<Vec> rows, int cols) {
    int rank = 0;
    for (int c = 0; c < cols; ++c) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (!is_zero(rows[r][c])) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || is_zero(rows[r][c])) continue;
            Scalar f = rows[r][c] / rows[rank][c];
            for (int j = 0; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

inline int dense_rank(const SparseMatrix& m) {
    std::vector<Vec> rows;
    for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row_dense(r));
    return dense_rank(std::move(rows), m.cols());
}

inline int dense_kernel_dim(const SparseMatrix& m) { return m.cols() - dense_rank(m); }

// Koszul-resolution oracle for B = K[x]/(x^2): the resolution is
// ... -> B -> B -> K with every differential multiplication by x, so for a
// B-module V both Ext^*(K,V) and Tor_*(V,K) reduce to kernels and images of
// the action of x on V.
inline std::vector<int> koszul_ext_dims(const SparseMatrix& action_x, int count) {
    const int dim = action_x.cols();
    int ker = dense_kernel_dim(action_x);
    int im = dim - ker;
    std::vector<int> dims;
    dims.push_back(ker);                                         // H^0 = ker(x.)
    for (int s = 1; s < count; ++s) dims.push_back(ker - im);    // ker/im afterwards
    return dims;
}

inline std::vector<int> koszul_tor_dims(const SparseMatrix& action_x, int count) {
    const int dim = action_x.cols();
    int ker = dense_kernel_dim(action_x);
    int im = dim - ker;
    std::vector<int> dims;
    dims.push_back(dim - im);                                    // H_0 = V/im
    for (int s = 1; s < count; ++s) dims.push_back(ker - im);
    return dims;
}

}  // namespace heckalg::oracles
