#pragma once

#include <Eigen/Dense>

namespace klines {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

// Subspaces are carried as matrices whose columns span them.

// Orthonormal basis of the column span; numerical rank cut at rel_tol * sigma_max.
Mat orthonormal_basis(const Mat& A, double rel_tol = 1e-10);

// Orthonormal basis of span(A) intersect span(B).
Mat intersect(const Mat& A, const Mat& B, double rel_tol = 1e-9);

// Smallest singular value of [orth(U) orth(W)]; 0 when the spans meet.
// Meaningful as a transversality measure when dim U + dim W <= ambient.
double transversality(const Mat& U, const Mat& W);

// Projection onto span(U) along span(W). Needs U + W = ambient, direct;
// std::domain_error when the pair is not transverse beyond min_sigma.
Mat projector(const Mat& U, const Mat& W, double min_sigma = 1e-10);

// A point of (span(A1) + p1) intersect (span(A2) + p2), the one closest to the
// origin. std::domain_error if the affine subspaces miss each other.
Vec affine_intersection(const Mat& A1, const Vec& p1, const Mat& A2, const Vec& p2);

// Columns concatenated.
Mat hcat(const Mat& A, const Mat& B);

}  // namespace klines
