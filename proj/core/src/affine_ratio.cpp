#include "klines/affine_ratio.hpp"

#include "klines/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace klines {

Mat AffineFlagDecomposition::neutral() const { return intersect(plus.big, minus.big); }

Vec AffineFlagDecomposition::base_point() const {
    // Nearest to offset+, so a point common to both affine spaces is kept as is.
    return plus.offset + affine_intersection(plus.big, Vec::Zero(plus.offset.size()), minus.big, minus.offset - plus.offset);
}

void AffineFlagDecomposition::validate(double min_sigma) const {
    const Eigen::Index n = plus.big.rows();
    const Eigen::Index k = plus.small.cols(), kl = plus.big.cols();
    if (minus.small.cols() != k || minus.big.cols() != kl || 2 * k + (kl - k) != n ||
        plus.offset.size() != n || minus.offset.size() != n)
        throw std::domain_error("AffineFlagDecomposition: inconsistent shape");
    if (intersect(plus.small, plus.big).cols() != k || intersect(minus.small, minus.big).cols() != k)
        throw std::domain_error("AffineFlagDecomposition: small subspace not inside big one");
    if (transversality(plus.small, minus.big) < min_sigma || transversality(minus.small, plus.big) < min_sigma)
        throw std::domain_error("AffineFlagDecomposition: flags not transverse");
    if (neutral().cols() != kl - k) throw std::domain_error("AffineFlagDecomposition: neutral space has wrong dimension");
}

namespace {

// Move p parallel to `along` until it lands on span(onto) + base.
Vec slide(const Vec& p, const Mat& along, const Mat& onto, const Vec& base) {
    return base + projector(onto, along) * (p - base);
}

}  // namespace

Vec affine_ratio_circuit(const AffineFlagDecomposition& X, const AffineFlagDecomposition& Y, const Vec& p) {
    const Vec w = X.base_point(), v = Y.base_point();
    Vec q = slide(p, X.minus.small, Y.plus.big, v);
    q = slide(q, Y.plus.small, Y.minus.big, v);
    q = slide(q, Y.minus.small, X.plus.big, w);
    return slide(q, X.plus.small, X.minus.big, w);
}

double cross_transversality(const AffineFlagDecomposition& X, const AffineFlagDecomposition& Y) {
    return std::min(transversality(hcat(X.plus.small, Y.minus.small), X.neutral()),
                    transversality(hcat(Y.plus.small, X.minus.small), Y.neutral()));
}

AffineRatio affine_ratio(const AffineFlagDecomposition& X, const AffineFlagDecomposition& Y, double oracle_tol) {
    X.validate();
    Y.validate();
    if (X.plus.big.rows() != Y.plus.big.rows() || X.plus.small.cols() != Y.plus.small.cols() ||
        X.plus.big.cols() != Y.plus.big.cols())
        throw std::domain_error("affine_ratio: the two decompositions have different shapes");
    const Mat& ap = X.plus.small;
    const Mat& am = X.minus.small;
    const Mat& bp = Y.plus.small;
    const Mat& bm = Y.minus.small;
    const Mat A0 = X.neutral(), B0 = Y.neutral();
    const Vec w = X.base_point(), v = Y.base_point();

    AffineRatio r;
    r.basis = A0;
    r.translation = projector(A0, hcat(ap, bm)) * (projector(hcat(bp, am), B0) * (v - w));
    r.coords = A0.transpose() * r.translation;

    const Vec end = affine_ratio_circuit(X, Y, w);
    r.translation_geometric = end - w;
    r.oracle_gap = (r.translation - r.translation_geometric).lpNorm<Eigen::Infinity>();
    if (r.oracle_gap > oracle_tol * std::max(1.0, (v - w).norm())) {
        std::ostringstream os;
        os << "affine_ratio: closed form and geometric circuit differ by " << r.oracle_gap;
        throw VerificationError(os.str());
    }
    const Eigen::Index l = A0.cols();
    r.linear.resize(l, l);
    for (Eigen::Index i = 0; i < l; ++i)
        r.linear.col(i) = A0.transpose() * (affine_ratio_circuit(X, Y, w + A0.col(i)) - end);
    return r;
}

}  // namespace klines
