// Multiprecision Eigen instantiations are expensive to compile; they live in
// this translation unit alone.
#include "klines/additivity.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace klines {

namespace {

using Real = boost::multiprecision::cpp_bin_float_100;
using MatR = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

MatR lift(const Mat& a) { return a.cast<Real>(); }

// (g, u)^n in high precision.
void power(const Mat& g, const Mat& u, int n, MatR& G, MatR& U) {
    const Eigen::Index d = g.rows();
    const MatR gm = lift(g), um = lift(u), gi = gm.partialPivLu().inverse();
    G = MatR::Identity(d, d);
    MatR Gi = MatR::Identity(d, d);
    U = MatR::Zero(d, d);
    for (int i = 0; i < n; ++i) {
        U += G * um * Gi;
        G = G * gm;
        Gi = gi * Gi;
    }
}

}  // namespace

Vec margulis_a_part_product(const AdjointAffine& f, int n, const AdjointAffine& q, int m) {
    if (n < 0 || m < 0 || n + m == 0) throw std::invalid_argument("margulis_a_part_product: need n, m >= 0, n + m > 0");
    const Eigen::Index d = f.g.rows();
    MatR G, U, H, V;
    power(f.g, f.u, n, G, U);
    power(q.g, q.u, m, H, V);
    const MatR T = G * H;
    const MatR W = U + G * V * G.partialPivLu().inverse();

    Eigen::EigenSolver<MatR> es(T, true);
    if (es.info() != Eigen::Success) throw std::domain_error("margulis_a_part_product: eigen decomposition failed");
    const auto ev = es.eigenvalues();
    std::vector<Eigen::Index> idx(d);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return abs(ev(a)) > abs(ev(b)); });
    for (Eigen::Index i = 0; i < d; ++i) {
        if (abs(ev(idx[i]).imag()) > Real(1e-40) * abs(ev(idx[i])))
            throw std::domain_error("margulis_a_part_product: complex eigenvalue");
        if (i + 1 < d && abs(ev(idx[i])) - abs(ev(idx[i + 1])) <= Real(1e-8) * abs(ev(idx[i])))
            throw std::domain_error("margulis_a_part_product: product is not loxodromic");
    }
    const auto vecs = es.eigenvectors();
    MatR P(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index r = 0; r < d; ++r) P(r, i) = vecs(r, idx[i]).real();
    const MatR D = P.partialPivLu().solve(W * P);
    Vec out(d);
    for (Eigen::Index i = 0; i < d; ++i) out(i) = static_cast<double>(D(i, i));
    return out;
}

namespace {

struct FlagsR {
    MatR small_plus, big_plus, small_minus, big_minus;
    MatR offset;  // column
    MatR P;       // eigenbasis, decreasing modulus
};

MatR hcatR(const MatR& a, const MatR& b) {
    MatR m(a.rows(), a.cols() + b.cols());
    m << a, b;
    return m;
}

FlagsR adjoint_flags_hp(const AdjointAffine& f) {
    const Eigen::Index d = f.g.rows(), k = d * (d - 1) / 2;
    const MatR g = lift(f.g);
    Eigen::EigenSolver<MatR> es(g, true);
    if (es.info() != Eigen::Success) throw std::domain_error("adjoint_flags_hp: eigen decomposition failed");
    const auto ev = es.eigenvalues();
    std::vector<Eigen::Index> idx(d);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return abs(ev(a)) > abs(ev(b)); });
    FlagsR F;
    F.P.resize(d, d);
    std::vector<Real> lam(d);
    for (Eigen::Index i = 0; i < d; ++i) {
        if (abs(ev(idx[i]).imag()) > Real(1e-40) * abs(ev(idx[i])))
            throw std::domain_error("adjoint_flags_hp: complex eigenvalue");
        lam[i] = ev(idx[i]).real();
        for (Eigen::Index r = 0; r < d; ++r) F.P(r, i) = es.eigenvectors()(r, idx[i]).real();
    }
    const MatR Pi = F.P.inverse();
    // fixed point of X -> gXg^{-1} + u off the centralizer, solved in the eigenbasis
    MatR up = Pi * lift(f.u) * F.P, op = MatR::Zero(d, d);
    MatR ap(d * d, k), am(d * d, k), N(d * d, d);
    Eigen::Index cp = 0, cm = 0;
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) {
            const MatR E = F.P.col(i) * Pi.row(j);
            MatR col(d * d, 1);
            for (Eigen::Index a = 0; a < d; ++a)
                for (Eigen::Index b = 0; b < d; ++b) col(a * d + b, 0) = E(a, b);
            if (i < j) ap.col(cp++) = col;
            else if (i > j) am.col(cm++) = col;
            else N.col(i) = col;
            if (i != j) op(i, j) = -up(i, j) / (lam[i] / lam[j] - 1);
        }
    const MatR o = F.P * op * Pi;
    F.offset.resize(d * d, 1);
    for (Eigen::Index a = 0; a < d; ++a)
        for (Eigen::Index b = 0; b < d; ++b) F.offset(a * d + b, 0) = o(a, b);
    F.small_plus = ap;
    F.big_plus = hcatR(ap, N);
    F.small_minus = am;
    F.big_minus = hcatR(am, N);
    return F;
}

// onto span(U) along span(V)
MatR projectorR(const MatR& U, const MatR& V) {
    MatR head = MatR::Zero(U.rows(), U.rows());
    head.leftCols(U.cols()) = U;
    return head * hcatR(U, V).inverse();
}

struct Side {
    const MatR& small;
    const MatR& big;
    const MatR& offset;
};

// Translation part of the affine ratio of (X+, X-) and (Y+, Y-) by the closed form.
MatR translation_hp(const Side& xp, const Side& xm, const Side& yp, const Side& ym) {
    auto neutral_and_point = [](const Side& a, const Side& b, MatR& basis, MatR& point) {
        const MatR M = hcatR(a.big, -b.big);
        Eigen::FullPivLU<MatR> lu(M);
        lu.setThreshold(Real(1e-50));
        const MatR K = lu.kernel();
        basis = a.big * K.topRows(a.big.cols());
        const MatR c = lu.solve(MatR(b.offset - a.offset));
        point = a.offset + a.big * c.topRows(a.big.cols());
    };
    MatR A0, w, B0, v;
    neutral_and_point(xp, xm, A0, w);
    neutral_and_point(yp, ym, B0, v);
    return projectorR(A0, hcatR(xp.small, ym.small)) * (projectorR(hcatR(yp.small, xm.small), B0) * (v - w));
}

Vec normalized_diagonal(const MatR& t, const MatR& P) {
    const Eigen::Index d = P.rows();
    MatR T(d, d);
    for (Eigen::Index a = 0; a < d; ++a)
        for (Eigen::Index b = 0; b < d; ++b) T(a, b) = t(a * d + b, 0);
    const MatR D = P.partialPivLu().solve(T * P);
    Vec out(d);
    for (Eigen::Index i = 0; i < d; ++i) out(i) = static_cast<double>(D(i, i));
    return out;
}

}  // namespace

std::pair<Vec, Vec> affine_ratio_prediction_hp(const AdjointAffine& f, const AdjointAffine& q) {
    if (f.g.rows() != q.g.rows()) throw std::invalid_argument("affine_ratio_prediction_hp: dimension mismatch");
    const FlagsR F = adjoint_flags_hp(f), Q = adjoint_flags_hp(q);
    const Side fp{F.small_plus, F.big_plus, F.offset}, fm{F.small_minus, F.big_minus, F.offset};
    const Side qp{Q.small_plus, Q.big_plus, Q.offset}, qm{Q.small_minus, Q.big_minus, Q.offset};
    // same role assignment as affine_ratio_prediction
    const Vec primary = normalized_diagonal(translation_hp(fp, qm, qp, fm), F.P);
    const Vec swapped = normalized_diagonal(translation_hp(qp, fm, fp, qm), Q.P);
    return {primary, swapped};
}

}  // namespace klines
