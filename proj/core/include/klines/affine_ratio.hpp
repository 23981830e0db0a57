#pragma once

#include "klines/subspace.hpp"

namespace klines {

// An affine flag: a linear subspace `small` inside `big`, with `big` translated by `offset`.
struct AffineFlag {
    Mat small;
    Mat big;
    Vec offset;
};

// A transverse pair (X+, X-) of affine flags of shape (k, l): dim small = k,
// dim big = k + l, ambient dimension 2k + l.
struct AffineFlagDecomposition {
    AffineFlag plus;
    AffineFlag minus;

    Mat neutral() const;     // big+ intersect big-, dimension l
    Vec base_point() const;  // the point of (big+ + offset+) cap (big- + offset-) nearest offset+
    // Throws std::domain_error on shape mismatch or transversality failure.
    void validate(double min_sigma = 1e-8) const;
};

struct AffineRatio {
    Mat basis;           // orthonormal basis of A0 (ambient columns)
    Mat linear;          // l x l, in that basis
    Vec translation;     // ambient vector in A0 (closed form)
    Vec coords;          // translation in the A0 basis
    Vec translation_geometric;
    double oracle_gap = 0;  // |closed form - geometric|
};

// The four-step circuit X -> Y -> X started from the base point of X.
// Closed form pi^{A0, a+ + b-} pi^{b+ + a-, B0} (v - w), checked against the
// geometric construction; VerificationError beyond oracle_tol * max(1, |v - w|).
AffineRatio affine_ratio(const AffineFlagDecomposition& X, const AffineFlagDecomposition& Y,
                         double oracle_tol = 1e-9);

// min of sigma_min(a+ + b-, A0) and sigma_min(b+ + a-, B0): how far the two
// projectors in the closed form are from degenerate.
double cross_transversality(const AffineFlagDecomposition& X, const AffineFlagDecomposition& Y);

// The four parallel translations: along a- to B+ + v, along b+ to B- + v,
// along b- to A+ + w, along a+ to A- + w.
Vec affine_ratio_circuit(const AffineFlagDecomposition& X, const AffineFlagDecomposition& Y, const Vec& p);

}  // namespace klines
