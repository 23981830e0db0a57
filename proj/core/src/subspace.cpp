#include "klines/subspace.hpp"

#include <Eigen/SVD>

#include <stdexcept>

namespace klines {

Mat hcat(const Mat& A, const Mat& B) {
    if (A.cols() == 0) return B;
    if (B.cols() == 0) return A;
    if (A.rows() != B.rows()) throw std::invalid_argument("hcat: row mismatch");
    Mat C(A.rows(), A.cols() + B.cols());
    C << A, B;
    return C;
}

Mat orthonormal_basis(const Mat& A, double rel_tol) {
    if (A.cols() == 0) return Mat(A.rows(), 0);
    Eigen::JacobiSVD<Mat> svd(A, Eigen::ComputeThinU);
    const auto& s = svd.singularValues();
    Eigen::Index rank = 0;
    const double cut = s.size() ? rel_tol * s(0) : 0;
    while (rank < s.size() && s(rank) > cut && s(rank) > 0) ++rank;
    return svd.matrixU().leftCols(rank);
}

Mat intersect(const Mat& A, const Mat& B, double rel_tol) {
    const Mat QA = orthonormal_basis(A), QB = orthonormal_basis(B);
    if (QA.cols() == 0 || QB.cols() == 0) return Mat(A.rows(), 0);
    // x = QA a = QB b  <=>  [QA -QB](a;b) = 0
    const Mat M = hcat(QA, -QB);
    Eigen::JacobiSVD<Mat> svd(M, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const Eigen::Index n = M.cols();
    Eigen::Index rank = 0;
    while (rank < s.size() && s(rank) > rel_tol) ++rank;
    const Eigen::Index k = n - rank;
    if (k <= 0) return Mat(A.rows(), 0);
    const Mat N = svd.matrixV().rightCols(k);
    return orthonormal_basis(QA * N.topRows(QA.cols()));
}

double transversality(const Mat& U, const Mat& W) {
    const Mat M = hcat(orthonormal_basis(U), orthonormal_basis(W));
    if (M.cols() == 0) return 1.0;
    Eigen::JacobiSVD<Mat> svd(M);
    const auto& s = svd.singularValues();
    if (M.cols() > M.rows()) return 0.0;
    return s(s.size() - 1);
}

Mat projector(const Mat& U, const Mat& W, double min_sigma) {
    const Eigen::Index n = U.rows();
    if (W.rows() != n || U.cols() + W.cols() != n)
        throw std::domain_error("projector: dimensions do not add up to the ambient space");
    if (U.cols() == 0) return Mat::Zero(n, n);
    if (W.cols() == 0) return Mat::Identity(n, n);
    if (transversality(U, W) < min_sigma) throw std::domain_error("projector: subspaces not transverse");
    const Mat B = hcat(U, W);
    // P = [U 0] B^{-1}
    Mat UZ = Mat::Zero(n, n);
    UZ.leftCols(U.cols()) = U;
    return B.transpose().partialPivLu().solve(UZ.transpose()).transpose();
}

Vec affine_intersection(const Mat& A1, const Vec& p1, const Mat& A2, const Vec& p2) {
    const Mat M = hcat(A1, -A2);
    Vec c = M.completeOrthogonalDecomposition().solve(p2 - p1);
    Vec p = p1 + A1 * c.head(A1.cols());
    const Vec miss = p2 + A2 * c.tail(A2.cols()) - p;
    if (miss.norm() > 1e-8 * (1.0 + p1.norm() + p2.norm()))
        throw std::domain_error("affine_intersection: affine subspaces do not meet");
    const Mat Q = intersect(A1, A2);
    if (Q.cols()) p -= Q * (Q.transpose() * p);
    return p;
}

}  // namespace klines
