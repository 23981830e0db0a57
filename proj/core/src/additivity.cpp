#include "klines/additivity.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace klines {

std::pair<Vec, Vec> affine_ratio_prediction(const AdjointAffine& f, const AdjointAffine& q, double tol) {
    const Eigen::Index d = f.g.rows();
    const AffineFlagDecomposition F = adjoint_flags(f, tol), Q = adjoint_flags(q, tol);
    auto normalized = [&](const AffineFlagDecomposition& X, const AffineFlagDecomposition& Y, const Mat& g) {
        const AffineRatio r = affine_ratio(X, Y);
        // Any basis adapted to the attracting flag of g gives the same diagonal.
        const Mat P = *spectral_data(g).basis;
        return Vec(P.partialPivLu().solve(unvec(r.translation, d) * P).diagonal());
    };
    // (X-, Y+, Y-, X+) = (Q-, Q+, F-, F+)
    Vec primary = normalized({F.plus, Q.minus}, {Q.plus, F.minus}, f.g);
    Vec swapped = normalized({Q.plus, F.minus}, {F.plus, Q.minus}, q.g);
    return {primary, swapped};
}

namespace {

DefectResult defect_at(const AdjointAffine& f, const AdjointAffine& q, int n, const Vec& pred, const Vec& pred_alt) {
    DefectResult r;
    r.n = n;
    r.prediction = pred;
    r.prediction_alt = pred_alt;
    try {
        r.defect = margulis_a_part_product(f, n, q, n) - margulis_a_part_product(f, n, q, 0) -
                   margulis_a_part_product(q, n, f, 0);
        r.error = (r.defect - pred).lpNorm<Eigen::Infinity>();
        r.error_alt = (r.defect - pred_alt).lpNorm<Eigen::Infinity>();
    } catch (const std::domain_error&) {
        r.defect = Vec::Constant(f.g.rows(), std::nan(""));
        r.error = r.error_alt = std::nan("");
    }
    r.contraction = affine_contraction(f, n);
    return r;
}

}  // namespace

std::vector<DefectResult> additivity_defect_sequence(const AdjointAffine& f, const AdjointAffine& q, int n_max) {
    if (n_max < 1) throw std::invalid_argument("additivity_defect_sequence: n_max must be >= 1");
    if (f.g.rows() != q.g.rows()) throw std::invalid_argument("additivity_defect_sequence: dimension mismatch");
    const auto [pred, pred_alt] = affine_ratio_prediction_hp(f, q);
    std::vector<DefectResult> out;
    for (int n = 1; n <= n_max; ++n) out.push_back(defect_at(f, q, n, pred, pred_alt));
    return out;
}

DefectResult additivity_defect(const AdjointAffine& f, const AdjointAffine& q, int n) {
    if (n < 1) throw std::invalid_argument("additivity_defect: n must be >= 1");
    if (f.g.rows() != q.g.rows()) throw std::invalid_argument("additivity_defect: dimension mismatch");
    const auto [pred, pred_alt] = affine_ratio_prediction_hp(f, q);
    return defect_at(f, q, n, pred, pred_alt);
}

AdjointAffine random_split_element(int d, std::uint64_t seed, double gap, double max_cond) {
    if (d < 2) throw std::invalid_argument("random_split_element: d must be >= 2");
    if (!(gap > 1)) throw std::invalid_argument("random_split_element: gap must exceed 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> jitter(0.0, std::log(2.0));
    Mat P(d, d);
    for (int attempt = 0;; ++attempt) {
        if (attempt > 10000) throw std::runtime_error("random_split_element: no well-conditioned basis found");
        for (Eigen::Index i = 0; i < P.size(); ++i) P(i) = normal(rng);
        Eigen::JacobiSVD<Mat> svd(P);
        const auto& s = svd.singularValues();
        if (s(d - 1) > 0 && s(0) / s(d - 1) <= max_cond) break;
    }
    Vec loglam(d);
    loglam(0) = 0;
    for (int i = 1; i < d; ++i) loglam(i) = loglam(i - 1) - std::log(gap) - jitter(rng);
    loglam.array() -= loglam.mean();
    Vec lam = loglam.array().exp();
    int negatives = 0;
    for (int i = 0; i < d; ++i)
        if (normal(rng) < 0) {
            lam(i) = -lam(i);
            ++negatives;
        }
    if (negatives % 2) lam(d - 1) = -lam(d - 1);
    AdjointAffine f;
    f.g = P * lam.asDiagonal() * P.inverse();
    f.u = Mat(d, d);
    for (Eigen::Index i = 0; i < f.u.size(); ++i) f.u(i) = normal(rng);
    f.u -= (f.u.trace() / d) * Mat::Identity(d, d);
    return f;
}

}  // namespace klines
