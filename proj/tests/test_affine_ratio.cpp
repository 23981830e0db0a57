#include "klines/affine_ratio.hpp"
#include "klines/errors.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace klines;

namespace {

struct Gen {
    std::mt19937_64 rng;
    std::normal_distribution<double> n{0, 1};
    explicit Gen(std::uint64_t s) : rng(s) {}
    Mat mat(Eigen::Index r, Eigen::Index c) {
        Mat m(r, c);
        for (Eigen::Index i = 0; i < r; ++i)
            for (Eigen::Index j = 0; j < c; ++j) m(i, j) = n(rng);
        return m;
    }
    // small = k random columns, big = small plus a shared l-dimensional neutral part
    AffineFlagDecomposition decomposition(int k, int l, const Vec& p_plus, const Vec& p_minus) {
        const int n = 2 * k + l;
        Mat N = mat(n, l), ap = mat(n, k), am = mat(n, k);
        return {{ap, hcat(ap, N), p_plus}, {am, hcat(am, N), p_minus}};
    }
};

// p + along*s lands in span(onto) + base: solve [along, -onto] (s, t) = base - p directly.
Vec slide(const Vec& p, const Mat& along, const Mat& onto, const Vec& base) {
    Mat M(p.size(), along.cols() + onto.cols());
    M << along, -onto;
    Vec st = M.fullPivLu().solve(base - p);
    return p + along * st.head(along.cols());
}

// point of (A1 + p1) cap (A2 + p2), any one
Vec meet(const Mat& A1, const Vec& p1, const Mat& A2, const Vec& p2) {
    Mat M(p1.size(), A1.cols() + A2.cols());
    M << A1, -A2;
    Vec st = M.colPivHouseholderQr().solve(p2 - p1);
    return p1 + A1 * st.head(A1.cols());
}

// The circuit, started at some point of X's neutral affine space; its
// translation part does not depend on the starting point modulo the linear part,
// so compare against the library's choice of base point.
Vec circuit_translation(const AffineFlagDecomposition& X, const AffineFlagDecomposition& Y, const Vec& start) {
    const Vec w = meet(X.plus.big, X.plus.offset, X.minus.big, X.minus.offset);
    const Vec v = meet(Y.plus.big, Y.plus.offset, Y.minus.big, Y.minus.offset);
    Vec q = slide(start, X.minus.small, Y.plus.big, v);
    q = slide(q, Y.plus.small, Y.minus.big, v);
    q = slide(q, Y.minus.small, X.plus.big, w);
    q = slide(q, X.plus.small, X.minus.big, w);
    return q - start;
}

}  // namespace

TEST(AffineRatio, ClosedFormMatchesIndependentCircuit) {
    for (auto [k, l] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}, std::pair{2, 2}}) {
        Gen g(1000 + 10 * k + l);
        const int n = 2 * k + l;
        for (int t = 0; t < 100; ++t) {
            auto X = g.decomposition(k, l, g.mat(n, 1).col(0), g.mat(n, 1).col(0));
            auto Y = g.decomposition(k, l, g.mat(n, 1).col(0), g.mat(n, 1).col(0));
            AffineRatio r;
            try {
                X.validate(1e-3);  // keep draws whose projectors are reasonably conditioned
                Y.validate(1e-3);
                if (cross_transversality(X, Y) < 1e-3) continue;
                r = affine_ratio(X, Y);
            } catch (const std::domain_error&) {
                continue;  // an unlucky near-degenerate draw
            }
            Vec want = circuit_translation(X, Y, X.base_point());
            EXPECT_LE((r.translation - want).lpNorm<Eigen::Infinity>(), 1e-9) << k << "," << l << " #" << t;
            EXPECT_LE(r.oracle_gap, 1e-9);
            EXPECT_EQ(r.linear.rows(), l);
            EXPECT_EQ(r.coords.size(), l);
        }
    }
}

TEST(AffineRatio, CommonPointGivesZeroTranslation) {
    Gen g(7);
    for (auto [k, l] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}}) {
        const int n = 2 * k + l;
        for (int t = 0; t < 30; ++t) {
            Vec p = g.mat(n, 1).col(0);
            auto X = g.decomposition(k, l, p, p);
            auto Y = g.decomposition(k, l, p, p);
            auto r = affine_ratio(X, Y);
            EXPECT_LE(r.translation.lpNorm<Eigen::Infinity>(), 1e-12);
        }
    }
}

TEST(AffineRatio, EqualBasePointsGiveZero) {
    Gen g(8);
    // v = w although the minus flags differ in offset along their big subspace
    auto X = g.decomposition(1, 1, Vec::Zero(3), Vec::Zero(3));
    auto Y = g.decomposition(1, 1, Vec::Zero(3), Vec::Zero(3));
    Y.minus.offset = Y.minus.big.col(1) * -1.5 + Y.minus.big.col(0) * 0.75;
    EXPECT_LE((Y.base_point() - X.base_point()).norm(), 1e-12);
    EXPECT_LE(affine_ratio(X, Y).translation.lpNorm<Eigen::Infinity>(), 1e-12);
}

TEST(AffineRatio, LinearPartIsAffineCircuitDerivative) {
    Gen g(9);
    auto X = g.decomposition(1, 2, g.mat(4, 1).col(0), g.mat(4, 1).col(0));
    auto Y = g.decomposition(1, 2, g.mat(4, 1).col(0), g.mat(4, 1).col(0));
    auto r = affine_ratio(X, Y);
    const Vec w = X.base_point();
    for (Eigen::Index i = 0; i < 2; ++i) {
        const Vec start = w + r.basis.col(i);
        Vec moved = start + circuit_translation(X, Y, start);
        Vec image = r.basis.transpose() * (moved - (w + r.translation));
        EXPECT_LE((image - r.linear.col(i)).lpNorm<Eigen::Infinity>(), 1e-9);
    }
}

TEST(AffineRatio, RejectsNonTransverse) {
    Gen g(10);
    auto X = g.decomposition(1, 1, Vec::Zero(3), Vec::Zero(3));
    auto Y = X;
    Y.minus.small = Y.plus.small;  // b- = b+: B- now contains b+
    Y.minus.big = hcat(Y.plus.small, Y.plus.big.col(1));
    EXPECT_THROW(affine_ratio(X, Y), std::domain_error);
}
