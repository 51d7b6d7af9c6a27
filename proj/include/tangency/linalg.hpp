#ifndef TANGENCY_LINALG_HPP
#define TANGENCY_LINALG_HPP

#include "tangency/scalar.hpp"

#include <Eigen/Core>

#include <vector>

namespace tangency {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

/// Exact reduced row echelon form in place; returns the pivot columns.
template <class S>
std::vector<Eigen::Index> rref(Mat<S>& m) {
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index sel = -1;
        for (Eigen::Index r = row; r < m.rows(); ++r)
            if (!ScalarOps<S>::is_zero(m(r, col))) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        if (sel != row) m.row(sel).swap(m.row(row));
        const S inv = S(1) / m(row, col);
        for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r == row || ScalarOps<S>::is_zero(m(r, col))) continue;
            const S factor = m(r, col);
            for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class S>
Eigen::Index rank(Mat<S> m) {
    return static_cast<Eigen::Index>(rref(m).size());
}

/// Basis of the right kernel, one vector per column of the result. Free
/// variables are set to unit vectors, so the basis is canonical for a given
/// row space.
template <class S>
Mat<S> kernel(Mat<S> m) {
    const Eigen::Index cols = m.cols();
    std::vector<Eigen::Index> pivots = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    Mat<S> basis(cols, cols - static_cast<Eigen::Index>(pivots.size()));
    Eigen::Index k = 0;
    for (Eigen::Index free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        for (Eigen::Index r = 0; r < cols; ++r) basis(r, k) = S(0);
        basis(free, k) = S(1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            basis(pivots[i], k) = -m(static_cast<Eigen::Index>(i), free);
        ++k;
    }
    return basis;
}

/// Exact inverse; throws if singular.
template <class S>
Mat<S> inverse(const Mat<S>& m) {
    if (m.rows() != m.cols()) throw PreconditionError("inverse of a non-square matrix");
    const Eigen::Index n = m.rows();
    Mat<S> aug(n, 2 * n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) {
            aug(r, c) = m(r, c);
            aug(r, n + c) = r == c ? S(1) : S(0);
        }
    auto pivots = rref(aug);
    if (static_cast<Eigen::Index>(pivots.size()) < n || pivots[static_cast<std::size_t>(n - 1)] >= n)
        throw PreconditionError("matrix is singular");
    return aug.rightCols(n);
}

/// Exact product, independent of Eigen's product kernels.
template <class S>
Mat<S> multiply(const Mat<S>& a, const Mat<S>& b) {
    if (a.cols() != b.rows()) throw PreconditionError("matrix shape mismatch");
    Mat<S> out(a.rows(), b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r)
        for (Eigen::Index c = 0; c < b.cols(); ++c) {
            S acc(0);
            for (Eigen::Index k = 0; k < a.cols(); ++k) acc += a(r, k) * b(k, c);
            out(r, c) = acc;
        }
    return out;
}

/// Same column span; compares canonical RREF of the transposes.
template <class S>
bool same_column_space(const Mat<S>& a, const Mat<S>& b) {
    if (a.rows() != b.rows()) return false;
    Mat<S> ta = a.transpose();
    Mat<S> tb = b.transpose();
    auto pa = rref(ta);
    auto pb = rref(tb);
    if (pa != pb) return false;
    for (std::size_t i = 0; i < pa.size(); ++i)
        for (Eigen::Index c = 0; c < ta.cols(); ++c)
            if (!(ta(static_cast<Eigen::Index>(i), c) == tb(static_cast<Eigen::Index>(i), c))) return false;
    return true;
}

}  // namespace tangency

#endif
