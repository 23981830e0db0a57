#pragma once

#include "klines/rational.hpp"

#include <array>
#include <complex>
#include <utility>
#include <vector>

namespace klines {

// y^2 = x^3 + a x + b; the curve of interest has a = -147, b = 610.
struct EllipticCurve {
    Integer a = -147;
    Integer b = 610;

    Integer cubic_discriminant() const;  // -(4a^3 + 27b^2), discriminant of x^3 + ax + b
    Integer discriminant() const;        // 16 * cubic_discriminant()
    Rational j_invariant() const;        // 1728 * 4a^3 / (4a^3 + 27b^2)
};

struct CurvePoint {
    bool infinity = true;
    Rational x, y;

    static CurvePoint at_infinity() { return {}; }
    static CurvePoint affine(Rational x, Rational y) { return {false, std::move(x), std::move(y)}; }
    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

bool on_curve(const EllipticCurve& E, const CurvePoint& P);
// All three throw std::invalid_argument for inputs off the curve.
CurvePoint negate(const EllipticCurve& E, const CurvePoint& P);
CurvePoint add(const EllipticCurve& E, const CurvePoint& P, const CurvePoint& Q);
CurvePoint scalar_mul(const EllipticCurve& E, long n, const CurvePoint& P);

// The two rational maps from the curve to solutions of y^2 = 3(x^4+2x^3-x^2-2x+3).
// std::domain_error on a vanishing denominator; VerificationError if the image
// misses the quartic.
std::pair<Rational, Rational> birational_X(int variant, const CurvePoint& P);

// Logarithmic height of a rational tuple: log max{q, q|p_i|/q_i}, q = lcm of denominators.
double log_height(const std::vector<Rational>& values);
double log_abs(const Integer& n);

// ---- numerics on the fixed curve y^2 = x^3 - 147x + 610 ----

struct CubicRoots {
    double e1, e2, e3;  // e1 > e2 > e3
};
CubicRoots cubic_roots();

struct Periods {
    double omega;                 // least positive real period of dx/sqrt(q), halved: omega1 / 2
    double omega1;                // 2 pi / AGM(sqrt(e1-e3), sqrt(e1-e2))
    std::complex<double> omega2;  // 2 pi / AGM(sqrt(e1-e3), i sqrt(e2-e3))
    std::complex<double> tau;     // z / (z + 1), z = -omega2 / omega1
    double omega1_quadrature;     // 2 * int_{e1}^inf dt / sqrt(q(t))
};

double agm(double a, double b);
std::complex<double> agm(std::complex<double> a, std::complex<double> b);

// VerificationError if AGM and quadrature disagree beyond 1e-9 relative.
Periods real_periods();

// int_{u0}^inf du / sqrt(q(u)) for u0 >= e1.
double tail_integral(double u0);

// phi(P) in [0,1) for P on the unbounded real component; the point at
// infinity maps to 0. std::domain_error on the bounded oval.
double elliptic_log(double x, double y);
double elliptic_log(const CurvePoint& P);

struct EllogConstants {
    CubicRoots roots;
    Periods periods;
    Rational j;
    double h_inf_j = 0;   // log |j|
    double h_E = 0;       // max{1, h(a/4, b/16), h(j)}
    double h_delta = 0;   // log Delta
    double c1 = 0, c4 = 0, log10_c4 = 0, c5 = 0, c6 = 0, c9 = 0, c10 = 0, c11 = 0;
    std::array<double, 4> A{};          // chosen
    std::array<double, 4> A_lower{};    // required lower bounds
    double E_param = 0, E_lower = 0, E_upper = 0;
    double M = 0, log10_M = 0;
    std::array<double, 3> omega_phi{};  // omega * phi(R_1), omega * phi(R_2), omega * phi(R_0)
};

EllogConstants ellog_constants();

}  // namespace klines
