#pragma once

#include "klines/subspace.hpp"

#include <Eigen/Dense>

#include <optional>

namespace klines {

using CVec = Eigen::VectorXcd;

struct AffineMap {
    Mat linear;
    Vec translation;

    Vec operator()(const Vec& x) const { return linear * x + translation; }
    AffineMap inverse() const;
    static AffineMap identity(Eigen::Index d);
};

// (g o h)(x) = g(h(x))
AffineMap operator*(const AffineMap& g, const AffineMap& h);

struct SpectralData {
    CVec eigenvalues;          // by decreasing modulus
    std::optional<Mat> basis;  // real eigenvectors as columns, when the spectrum is real and simple
    bool loxodromic = false;   // moduli pairwise distinct beyond rel_tol
};

// Moduli within relative rel_tol count as equal.
SpectralData spectral_data(const Mat& g, double rel_tol = 1e-8);

// Sorted logs of eigenvalue moduli. std::domain_error for singular g.
Vec jordan_projection(const Mat& g);

// Projection of the translation onto the generalized eigenspace of the linear
// part for eigenvalues within tol of 1, along the complementary invariant
// subspace. std::domain_error when some eigenvalue sits in (tol, 2 tol) of 1.
Vec unnormalized_margulis(const AffineMap& f, double tol);

// Bases of the two invariant subspaces used above (columns: Schur vectors).
struct UnipotentSplitting {
    Mat O;  // eigenvalues within tol of 1
    Mat W;  // the rest
};
UnipotentSplitting unipotent_splitting(const Mat& L, double tol);

// o = -(L|W - id)^{-1} pi_W(t); post-check f(o) - o in O. std::domain_error
// when L|W - id is near-singular or the post-check fails.
Vec fixed_point_offset(const AffineMap& f, double tol);

// diag(P^{-1} u P), P the eigenbasis of g by decreasing modulus.
// std::domain_error unless g is real-split loxodromic; std::invalid_argument
// unless u is traceless.
Vec margulis_a_part(const Mat& g, const Mat& u);

// (lambda(exp(hX) g) - lambda(exp(-hX) g)) / (2h). std::domain_error if the
// perturbed elements stop being loxodromic.
Vec jordan_variation_fd(const Mat& g, const Mat& X, double h);

// trace(pi_{l, V} pi_{r, W}) with pi_{x, y} the projection onto x along y.
double cross_ratio_B1(const Mat& l, const Mat& V, const Mat& r, const Mat& W);

}  // namespace klines
