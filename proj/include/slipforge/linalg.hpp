#pragma once

#include <complex>
#include <vector>

namespace slipforge {

using Cx = std::complex<double>;

// Dense row-major complex matrix; just enough linear algebra for the trace
// invariants and the rank-revealing machinery.
struct CMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<Cx> data;

    CMatrix() = default;
    CMatrix(size_t r, size_t c) : rows(r), cols(c), data(r * c, Cx{0.0, 0.0}) {}

    Cx& at(size_t i, size_t j) { return data[i * cols + j]; }
    const Cx& at(size_t i, size_t j) const { return data[i * cols + j]; }

    static CMatrix identity(size_t n);
    [[nodiscard]] CMatrix transpose() const;
    [[nodiscard]] Cx trace() const;
};

CMatrix matmul(const CMatrix& a, const CMatrix& b);

// det via LU with partial pivoting (square matrices only)
Cx determinant(CMatrix a);

// Singular values in decreasing order (Eigen-backed).
std::vector<double> singular_values(const CMatrix& a);

// Numerical rank: number of singular values above rel_tol * sigma_max.
int numerical_rank(const CMatrix& a, double rel_tol);

// Column-pivoted QR column selection: indices of `rank` columns forming a
// well-conditioned independent subset, returned sorted ascending.
std::vector<int> independent_columns(const CMatrix& a, int rank);

} // namespace slipforge
