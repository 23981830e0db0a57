#include "klines/additivity.hpp"

#include <cmath>
#include <stdexcept>

namespace klines {

Vec vec(const Mat& X) {
    Vec x(X.size());
    for (Eigen::Index i = 0; i < X.rows(); ++i)
        for (Eigen::Index j = 0; j < X.cols(); ++j) x(i * X.cols() + j) = X(i, j);
    return x;
}

Mat unvec(const Vec& x, Eigen::Index d) {
    if (x.size() != d * d) throw std::invalid_argument("unvec: size mismatch");
    Mat X(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) X(i, j) = x(i * d + j);
    return X;
}

Mat ad_matrix(const Mat& g) {
    const Eigen::Index d = g.rows();
    const Mat git = g.inverse().transpose();
    Mat A(d * d, d * d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index a = 0; a < d; ++a) A.block(i * d, a * d, d, d) = g(i, a) * git;
    return A;
}

AdjointAffine operator*(const AdjointAffine& a, const AdjointAffine& b) {
    return {a.g * b.g, a.u + a.g * b.u * a.g.inverse()};
}

AdjointAffine AdjointAffine::power(int n) const {
    if (n < 0) throw std::invalid_argument("AdjointAffine::power: negative exponent");
    const Eigen::Index d = g.rows();
    AdjointAffine r{Mat::Identity(d, d), Mat::Zero(d, d)};
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

AffineFlagDecomposition adjoint_flags(const AdjointAffine& f, double tol) {
    const Eigen::Index d = f.g.rows();
    SpectralData s = spectral_data(f.g);
    if (!s.loxodromic || !s.basis) throw std::domain_error("adjoint_flags: linear part not real-split loxodromic");
    const Mat& P = *s.basis;
    const Mat Pi = P.inverse();
    const Eigen::Index k = d * (d - 1) / 2;
    Mat ap(d * d, k), am(d * d, k), N(d * d, d);
    Eigen::Index cp = 0, cm = 0;
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) {
            const Vec col = vec(P.col(i) * Pi.row(j));  // P E_ij P^{-1}
            if (i < j) ap.col(cp++) = col;
            else if (i > j) am.col(cm++) = col;
            else N.col(i) = col;
        }
    const Vec o = fixed_point_offset(f.as_affine_map(), tol);
    return {{ap, hcat(ap, N), o}, {am, hcat(am, N), o}};
}

double affine_contraction(const AdjointAffine& f, double tol) { return affine_contraction(f, 1, tol); }

namespace {

// Operator 2-norm of the map acting as diag(mult) on the columns of B.
double restricted_norm(const Mat& B, const Vec& mult) {
    Eigen::HouseholderQR<Mat> qr(B);
    const Mat R = qr.matrixQR().topRows(B.cols()).triangularView<Eigen::Upper>();
    const Mat M = R * mult.asDiagonal() * R.inverse();
    return Eigen::JacobiSVD<Mat>(M).singularValues()(0);
}

}  // namespace

double affine_contraction(const AdjointAffine& f, int n, double tol) {
    if (n < 1) throw std::invalid_argument("affine_contraction: n must be positive");
    // f^n has the flags and fixed-point offset of f. Powering Ad g numerically
    // would let roundoff leak into the expanding directions, so use the
    // eigenvalues of Ad g on the eigenbasis spanning each flag.
    AffineFlagDecomposition F = adjoint_flags(f, tol);
    const Eigen::VectorXcd lam = spectral_data(f.g).eigenvalues;
    const Eigen::Index d = f.g.rows(), k = d * (d - 1) / 2;
    Vec mm(k), mp(k + d);
    Eigen::Index cp = 0, cm = 0;
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) {
            const double r = lam(i).real() / lam(j).real();
            if (i < j) mp(cp++) = std::pow(1 / r, n);
            else if (i > j) mm(cm++) = std::pow(r, n);
        }
    mp.tail(d).setOnes();
    return restricted_norm(F.minus.small, mm) * restricted_norm(F.plus.big, mp) * std::exp(F.plus.offset.norm());
}

}  // namespace klines
