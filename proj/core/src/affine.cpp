#include "klines/affine.hpp"

#include <lapacke.h>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace klines {

AffineMap AffineMap::identity(Eigen::Index d) { return {Mat::Identity(d, d), Vec::Zero(d)}; }

AffineMap AffineMap::inverse() const {
    auto lu = linear.partialPivLu();
    Mat inv = lu.inverse();
    return {inv, -inv * translation};
}

AffineMap operator*(const AffineMap& g, const AffineMap& h) {
    return {g.linear * h.linear, g.linear * h.translation + g.translation};
}

SpectralData spectral_data(const Mat& g, double rel_tol) {
    if (g.rows() != g.cols()) throw std::invalid_argument("spectral_data: non-square matrix");
    Eigen::EigenSolver<Mat> es(g, true);
    if (es.info() != Eigen::Success) throw std::domain_error("spectral_data: eigen decomposition failed");
    const Eigen::Index d = g.rows();
    std::vector<Eigen::Index> idx(d);
    std::iota(idx.begin(), idx.end(), 0);
    const CVec ev = es.eigenvalues();
    std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return std::abs(ev(a)) > std::abs(ev(b)); });
    SpectralData s;
    s.eigenvalues.resize(d);
    for (Eigen::Index i = 0; i < d; ++i) s.eigenvalues(i) = ev(idx[i]);
    s.loxodromic = true;
    for (Eigen::Index i = 0; i + 1 < d; ++i) {
        const double a = std::abs(s.eigenvalues(i)), b = std::abs(s.eigenvalues(i + 1));
        if (a - b <= rel_tol * a) s.loxodromic = false;
    }
    bool real = true;
    for (Eigen::Index i = 0; i < d; ++i)
        if (std::abs(s.eigenvalues(i).imag()) > rel_tol * std::abs(s.eigenvalues(i))) real = false;
    if (real && s.loxodromic) {
        Mat P(d, d);
        const auto V = es.eigenvectors();
        for (Eigen::Index i = 0; i < d; ++i) P.col(i) = V.col(idx[i]).real();
        s.basis = P;
    }
    return s;
}

Vec jordan_projection(const Mat& g) {
    SpectralData s = spectral_data(g);
    Vec lam(g.rows());
    const double top = lam.size() ? std::abs(s.eigenvalues(0)) : 0.0;
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        const double m = std::abs(s.eigenvalues(i));
        // below this the smallest modulus is rounding noise
        if (!(m > 1e-14 * top)) throw std::domain_error("jordan_projection: singular matrix");
        lam(i) = std::log(m);
    }
    return lam;
}

namespace {

// dgees' SELECT callback has no user-data slot.
thread_local double t_select_tol = 0;
thread_local bool t_select_inside = true;

lapack_logical select_near_one(const double* wr, const double* wi) {
    const bool near = std::hypot(*wr - 1.0, *wi) <= t_select_tol;
    return near == t_select_inside;
}

// Leading Schur vectors spanning the invariant subspace of the selected eigenvalues.
Mat schur_invariant_subspace(const Mat& L, double tol, bool inside) {
    const lapack_int n = static_cast<lapack_int>(L.rows());
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor> A = L;
    std::vector<double> wr(n), wi(n);
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor> Z(n, n);
    lapack_int sdim = 0;
    t_select_tol = tol;
    t_select_inside = inside;
    const lapack_int info = LAPACKE_dgees(LAPACK_COL_MAJOR, 'V', 'S', select_near_one, n, A.data(), n, &sdim,
                                          wr.data(), wi.data(), Z.data(), n);
    if (info != 0) throw std::domain_error("schur_invariant_subspace: dgees failed (info " + std::to_string(info) + ")");
    return Z.leftCols(sdim);
}

}  // namespace

UnipotentSplitting unipotent_splitting(const Mat& L, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("unipotent_splitting: tol must be positive");
    if (L.rows() != L.cols()) throw std::invalid_argument("unipotent_splitting: non-square matrix");
    Eigen::EigenSolver<Mat> es(L, false);
    for (Eigen::Index i = 0; i < L.rows(); ++i) {
        const double dist = std::abs(es.eigenvalues()(i) - 1.0);
        if (dist > tol && dist < 2 * tol)
            throw std::domain_error("unipotent_splitting: eigenvalue ambiguously close to 1");
    }
    UnipotentSplitting s{schur_invariant_subspace(L, tol, true), schur_invariant_subspace(L, tol, false)};
    if (s.O.cols() + s.W.cols() != L.rows())
        throw std::domain_error("unipotent_splitting: Schur reordering lost eigenvalues");
    return s;
}

Vec unnormalized_margulis(const AffineMap& f, double tol) {
    const Eigen::Index d = f.linear.rows();
    if (f.translation.size() != d) throw std::invalid_argument("unnormalized_margulis: dimension mismatch");
    UnipotentSplitting s = unipotent_splitting(f.linear, tol);
    if (s.O.cols() == 0) return Vec::Zero(d);
    return projector(s.O, s.W) * f.translation;
}

Vec fixed_point_offset(const AffineMap& f, double tol) {
    const Eigen::Index d = f.linear.rows();
    if (f.translation.size() != d) throw std::invalid_argument("fixed_point_offset: dimension mismatch");
    UnipotentSplitting s = unipotent_splitting(f.linear, tol);
    if (s.W.cols() == 0) return Vec::Zero(d);
    const Mat piW = projector(s.W, s.O);
    // W has orthonormal columns (Schur vectors), so L|W in that basis is W^T L W.
    const Mat M = s.W.transpose() * f.linear * s.W - Mat::Identity(s.W.cols(), s.W.cols());
    Eigen::JacobiSVD<Mat> svd(M);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) < 1e-12 * std::max(1.0, sv(0)))
        throw std::domain_error("fixed_point_offset: L|W - id is singular");
    const Vec c = M.partialPivLu().solve(-(s.W.transpose() * (piW * f.translation)));
    const Vec o = s.W * c;
    const Vec residual = piW * (f(o) - o);
    if (residual.norm() > 1e-8 * std::max(1.0, f.translation.norm()))
        throw std::domain_error("fixed_point_offset: f(o) - o not in the neutral subspace");
    return o;
}

Vec margulis_a_part(const Mat& g, const Mat& u) {
    if (g.rows() != g.cols() || u.rows() != g.rows() || u.cols() != g.cols())
        throw std::invalid_argument("margulis_a_part: shape mismatch");
    if (std::abs(u.trace()) > 1e-9 * std::max(1.0, u.norm()))
        throw std::invalid_argument("margulis_a_part: u must be traceless");
    SpectralData s = spectral_data(g);
    if (!s.loxodromic) throw std::domain_error("margulis_a_part: g is not loxodromic");
    if (!s.basis) throw std::domain_error("margulis_a_part: g has non-real eigenvalues");
    const Mat& P = *s.basis;
    return P.partialPivLu().solve(u * P).diagonal();
}

Vec jordan_variation_fd(const Mat& g, const Mat& X, double h) {
    if (!(h > 0)) throw std::invalid_argument("jordan_variation_fd: step must be positive");
    const Mat gp = (h * X).exp() * g, gm = (-h * X).exp() * g;
    if (!spectral_data(gp).loxodromic || !spectral_data(gm).loxodromic)
        throw std::domain_error("jordan_variation_fd: perturbation leaves the loxodromic set");
    return (jordan_projection(gp) - jordan_projection(gm)) / (2 * h);
}

double cross_ratio_B1(const Mat& l, const Mat& V, const Mat& r, const Mat& W) {
    const Eigen::Index n = l.rows();
    if (V.rows() != n || r.rows() != n || W.rows() != n)
        throw std::invalid_argument("cross_ratio_B1: ambient dimension mismatch");
    constexpr double kMin = 1e-10;
    if (transversality(l, W) < kMin || transversality(r, V) < kMin)
        throw std::domain_error("cross_ratio_B1: non-transverse input");
    return (projector(l, V) * projector(r, W)).trace();
}

}  // namespace klines
