#pragma once

#include "klines/affine.hpp"
#include "klines/affine_ratio.hpp"

#include <cstdint>
#include <vector>

namespace klines {

// Matrices are vectorized row-major, so Ad(g) = kron(g, g^{-T}).
Vec vec(const Mat& X);
Mat unvec(const Vec& x, Eigen::Index d);
Mat ad_matrix(const Mat& g);

// (g, u) acting on gl(d) by X -> g X g^{-1} + u.
struct AdjointAffine {
    Mat g;
    Mat u;

    AffineMap as_affine_map() const { return {ad_matrix(g), vec(u)}; }
    AdjointAffine power(int n) const;  // n >= 0
};

// (g, u)(h, v) = (gh, u + g v g^{-1})
AdjointAffine operator*(const AdjointAffine& a, const AdjointAffine& b);

// Invariant affine flags of a real-split loxodromic (g, u): small+ spanned by
// P E_ij P^{-1} (i < j), small- by i > j, big = small + diagonal span, offset
// the fixed-point offset. tol is the eigenvalue-1 cluster radius for Ad(g).
AffineFlagDecomposition adjoint_flags(const AdjointAffine& f, double tol = 1e-3);

// |Ad g restricted to small-| * |Ad g^{-1} restricted to big+| * exp|o|
double affine_contraction(const AdjointAffine& f, double tol = 1e-3);
// The same quantity for f^n, without forming g^n.
double affine_contraction(const AdjointAffine& f, int n, double tol = 1e-3);

struct DefectResult {
    int n = 0;
    Vec defect;          // m(f^n q^n) - m(f^n) - m(q^n), a-parts
    // NaN when f^n q^n is not real-split loxodromic (can happen for small n)
    Vec prediction;      // translation affine ratio with (X-, Y+, Y-, X+) = (Q-, Q+, F-, F+), high precision
    Vec prediction_alt;  // roles of f and q swapped: (F-, F+, Q-, Q+)
    double error = 0;    // |defect - prediction|_inf
    double error_alt = 0;
    double contraction = 0;  // affine_contraction(f^n)
};

// The a-parts of f^n q^m are computed in 100-digit arithmetic: the spectrum
// of the product spreads over ~gap^{2(n+m)} and double precision loses it.
Vec margulis_a_part_product(const AdjointAffine& f, int n, const AdjointAffine& q, int m);

// Predictions only depend on f and q; returns (prediction, prediction_alt).
std::pair<Vec, Vec> affine_ratio_prediction(const AdjointAffine& f, const AdjointAffine& q, double tol = 1e-3);
// The same closed form evaluated in 100-digit arithmetic (flags, offsets and
// projectors all lifted). The double version bottoms out near 1e-10, which
// hides the tail of the defect convergence.
std::pair<Vec, Vec> affine_ratio_prediction_hp(const AdjointAffine& f, const AdjointAffine& q);

DefectResult additivity_defect(const AdjointAffine& f, const AdjointAffine& q, int n);
std::vector<DefectResult> additivity_defect_sequence(const AdjointAffine& f, const AdjointAffine& q, int n_max);

// g = P diag(lambda) P^{-1} in SL(d) with consecutive modulus ratios >= gap,
// cond(P) <= max_cond, random signs; u traceless standard normal.
AdjointAffine random_split_element(int d, std::uint64_t seed, double gap = 16.0, double max_cond = 20.0);

}  // namespace klines
