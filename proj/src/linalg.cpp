#include "slipforge/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace slipforge {

CMatrix CMatrix::identity(size_t n) {
    CMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Cx{1.0, 0.0};
    return m;
}

CMatrix CMatrix::transpose() const {
    CMatrix t(cols, rows);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

Cx CMatrix::trace() const {
    Cx s{0.0, 0.0};
    for (size_t i = 0; i < std::min(rows, cols); ++i) s += at(i, i);
    return s;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matmul: shape mismatch");
    CMatrix r(a.rows, b.cols);
    for (size_t i = 0; i < a.rows; ++i) {
        for (size_t k = 0; k < a.cols; ++k) {
            Cx av = a.at(i, k);
            if (av == Cx{0.0, 0.0}) continue;
            for (size_t j = 0; j < b.cols; ++j) r.at(i, j) += av * b.at(k, j);
        }
    }
    return r;
}

Cx determinant(CMatrix a) {
    if (a.rows != a.cols) throw std::invalid_argument("determinant: square matrix required");
    size_t n = a.rows;
    Cx det{1.0, 0.0};
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        double best = std::abs(a.at(col, col));
        for (size_t r = col + 1; r < n; ++r) {
            double v = std::abs(a.at(r, col));
            if (v > best) { best = v; pivot = r; }
        }
        if (best == 0.0) return Cx{0.0, 0.0};
        if (pivot != col) {
            for (size_t j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            det = -det;
        }
        det *= a.at(col, col);
        for (size_t r = col + 1; r < n; ++r) {
            Cx f = a.at(r, col) / a.at(col, col);
            for (size_t j = col; j < n; ++j) a.at(r, j) -= f * a.at(col, j);
        }
    }
    return det;
}

namespace {

Eigen::MatrixXcd to_eigen(const CMatrix& a) {
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(a.rows), static_cast<Eigen::Index>(a.cols));
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t j = 0; j < a.cols; ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a.at(i, j);
    return m;
}

} // namespace

std::vector<double> singular_values(const CMatrix& a) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(a));
    const auto& sv = svd.singularValues();
    std::vector<double> out(static_cast<size_t>(sv.size()));
    for (Eigen::Index i = 0; i < sv.size(); ++i) out[static_cast<size_t>(i)] = sv(i);
    return out;
}

int numerical_rank(const CMatrix& a, double rel_tol) {
    auto sv = singular_values(a);
    if (sv.empty() || sv.front() == 0.0) return 0;
    double cutoff = rel_tol * sv.front();
    int rank = 0;
    for (double s : sv)
        if (s > cutoff) ++rank;
    return rank;
}

std::vector<int> independent_columns(const CMatrix& a, int rank) {
    if (rank <= 0) return {};
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(to_eigen(a));
    Eigen::VectorXi perm = qr.colsPermutation().indices();
    std::vector<int> cols;
    cols.reserve(static_cast<size_t>(rank));
    for (int i = 0; i < rank && i < perm.size(); ++i) cols.push_back(perm(i));
    std::sort(cols.begin(), cols.end());
    return cols;
}

} // namespace slipforge
