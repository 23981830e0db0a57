#include "klines/elliptic.hpp"

#include "klines/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace klines {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQuadTol = 1e-14;

}  // namespace

CubicRoots cubic_roots() {
    const double s = 3.0 * std::sqrt(57.0);
    return {(-5.0 + s) / 2.0, 5.0, (-5.0 - s) / 2.0};
}

double agm(double a, double b) {
    for (int i = 0; i < 64 && std::abs(a - b) > 1e-16 * std::abs(a); ++i) {
        const double m = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = m;
    }
    return a;
}

std::complex<double> agm(std::complex<double> a, std::complex<double> b) {
    for (int i = 0; i < 64 && std::abs(a - b) > 1e-16 * std::abs(a); ++i) {
        const std::complex<double> m = 0.5 * (a + b);
        std::complex<double> g = std::sqrt(a * b);
        // Right choice of square root: the one closer to the arithmetic mean.
        if (std::abs(m - g) > std::abs(m + g)) g = -g;
        a = m;
        b = g;
    }
    return a;
}

double tail_integral(double u0) {
    const CubicRoots r = cubic_roots();
    if (u0 < r.e1) throw std::domain_error("tail_integral: lower limit below e1");
    const double d1 = u0 - r.e1, d2 = u0 - r.e2, d3 = u0 - r.e3;
    // u = u0 + s, s = t^2/(1-t)^2, du = 2t/(1-t)^3 dt: finite at both ends
    // even when u0 = e1.
    auto integrand = [&](double t) {
        const double om = 1.0 - t;
        if (om <= 0) return 2.0;
        const double s = t * t / (om * om);
        const double q = (d1 + s) * (d2 + s) * (d3 + s);
        if (q <= 0) return 0.0;
        return 2.0 * t / (om * om * om) / std::sqrt(q);
    };
    double err = 0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, 0.0, 1.0, 20,
                                                                                    kQuadTol, &err);
    return v;
}

Periods real_periods() {
    const CubicRoots r = cubic_roots();
    Periods p;
    p.omega1 = 2.0 * kPi / agm(std::sqrt(r.e1 - r.e3), std::sqrt(r.e1 - r.e2));
    p.omega = p.omega1 / 2.0;
    p.omega2 = 2.0 * kPi /
               agm(std::complex<double>(std::sqrt(r.e1 - r.e3), 0.0),
                   std::complex<double>(0.0, std::sqrt(r.e2 - r.e3)));
    const std::complex<double> z = -p.omega2 / p.omega1;
    p.tau = z / (z + 1.0);
    p.omega1_quadrature = 2.0 * tail_integral(r.e1);
    if (std::abs(p.omega1_quadrature - p.omega1) > 1e-9 * p.omega1)
        throw VerificationError("real_periods: AGM and quadrature disagree");
    return p;
}

double elliptic_log(double x, double y) {
    const CubicRoots r = cubic_roots();
    if (x < r.e1) throw std::domain_error("elliptic_log: point on the bounded oval");
    const double omega = real_periods().omega;
    double v = tail_integral(x) / omega;
    if (y < 0) v = -v;
    v -= std::floor(v);
    return v >= 1.0 ? 0.0 : v;
}

double elliptic_log(const CurvePoint& P) {
    if (P.infinity) return 0.0;
    if (!on_curve(EllipticCurve{}, P)) throw std::invalid_argument("elliptic_log: point not on the curve");
    return elliptic_log(P.x.to_double(), P.y.to_double());
}

EllogConstants ellog_constants() {
    const EllipticCurve E;
    EllogConstants k;
    k.roots = cubic_roots();
    k.periods = real_periods();
    k.j = E.j_invariant();
    k.h_inf_j = std::log(std::abs(k.j.to_double()));
    k.h_E = std::max({1.0, log_height({Rational(E.a, 4), Rational(E.b, 16)}), log_height({k.j})});
    k.h_delta = log_abs(E.discriminant());
    k.c11 = (k.h_delta + k.h_inf_j) / 12.0 + 1.07;

    // Omega * phi(R_i) for R_0 = (6 sqrt3 - 1, 6(3 - sqrt3)), R_1 = (9,4), R_2 = (11,18).
    const double s3 = std::sqrt(3.0);
    const double x0 = 6.0 * s3 - 1.0;
    k.omega_phi = {tail_integral(9.0), tail_integral(11.0), tail_integral(x0)};

    const double omega = k.periods.omega;
    const double w1 = std::abs(k.periods.omega1);
    const double im_tau = k.periods.tau.imag();
    // Upper bounds for hhat(R_i) from hhat - h(x)/2 <= c11; none for R_0 (not rational).
    const double hhat_R1 = k.c11 + 0.5 * std::log(9.0);
    const double hhat_R2 = k.c11 + 0.5 * std::log(11.0);
    auto term = [&](double phi) { return 3 * kPi * omega * omega * phi * phi / (w1 * w1 * im_tau); };
    const std::array<double, 3> phis = {k.omega_phi[2] / omega, k.omega_phi[0] / omega, k.omega_phi[1] / omega};
    k.A_lower[0] = std::max(k.h_E, term(1.0));
    k.A_lower[1] = std::max(k.h_E, term(phis[0]));
    k.A_lower[2] = std::max({k.h_E, term(phis[1]), hhat_R1});
    k.A_lower[3] = std::max({k.h_E, term(phis[2]), hhat_R2});
    k.A = {13.5, 13.5, 13.5, 13.5};
    for (int i = 0; i < 4; ++i)
        if (k.A[i] < k.A_lower[i]) throw VerificationError("ellog_constants: A_i below its lower bound");

    k.E_param = 9.0;
    k.E_lower = std::numbers::e;
    double m = (w1 / omega) * std::sqrt(2 * k.A[0] * im_tau / (3 * kPi));
    for (int i = 0; i < 3; ++i)
        m = std::min(m, (w1 / (omega * phis[i])) * std::sqrt(2 * k.A[i + 1] * im_tau / (3 * kPi)));
    k.E_upper = std::numbers::e * m;
    if (k.E_param < k.E_lower || k.E_param > k.E_upper)
        throw VerificationError("ellog_constants: E outside its admissible interval");

    const double logE = std::log(k.E_param);
    const double ln_c4 = std::log(2.9) + 30 * std::log(10.0) + 10 * std::log(2.0) + 32 * std::log(4.0) +
                         80.3 * std::log(5.0) - 9 * std::log(logE) + 4 * std::log(13.5);
    k.c4 = std::exp(ln_c4);
    k.log10_c4 = ln_c4 / std::log(10.0);
    k.c5 = std::log(2 * k.E_param);
    k.c6 = k.c5 + k.h_E;
    k.c9 = 1.0 / s3;
    k.c10 = 3.0;
    k.c1 = 0.303868;  // smallest regulator eigenvalue; needs canonical heights, taken as data

    // c1 M^2 = log c9 + c10/2 + c11 + c4 (log M + c5)(log log M + c6)^5, bisection in L = log M.
    auto gap = [&](double L) {
        const double rhs = std::log(k.c9) + k.c10 / 2 + k.c11 +
                           k.c4 * (L + k.c5) * std::pow(std::log(L) + k.c6, 5);
        return k.c1 * std::exp(2 * L) - rhs;
    };
    double lo = std::log(10.0), hi = std::log(1e80);
    if (!(gap(lo) < 0 && gap(hi) > 0)) throw VerificationError("ellog_constants: bound equation not bracketed");
    for (int i = 0; i < 200 && hi - lo > 1e-14 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (gap(mid) < 0 ? lo : hi) = mid;
    }
    const double L = 0.5 * (lo + hi);
    k.M = std::exp(L);
    k.log10_M = L / std::log(10.0);
    return k;
}

}  // namespace klines
