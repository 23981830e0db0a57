#include "klines/elliptic.hpp"

#include "klines/diophantine.hpp"
#include "klines/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace klines {

Integer EllipticCurve::cubic_discriminant() const { return -(4 * a * a * a + 27 * b * b); }

Integer EllipticCurve::discriminant() const { return 16 * cubic_discriminant(); }

Rational EllipticCurve::j_invariant() const {
    const Integer a3 = 4 * a * a * a;
    return Rational(1728 * a3, a3 + 27 * b * b);
}

bool on_curve(const EllipticCurve& E, const CurvePoint& P) {
    if (P.infinity) return true;
    return P.y * P.y == P.x * P.x * P.x + Rational(E.a) * P.x + Rational(E.b);
}

static void require_on_curve(const EllipticCurve& E, const CurvePoint& P) {
    if (!on_curve(E, P))
        throw std::invalid_argument("point (" + P.x.str() + ", " + P.y.str() + ") is not on the curve");
}

CurvePoint negate(const EllipticCurve& E, const CurvePoint& P) {
    require_on_curve(E, P);
    if (P.infinity) return P;
    return CurvePoint::affine(P.x, -P.y);
}

CurvePoint add(const EllipticCurve& E, const CurvePoint& P, const CurvePoint& Q) {
    require_on_curve(E, P);
    require_on_curve(E, Q);
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    Rational slope;
    if (P.x == Q.x) {
        if (P.y == -Q.y) return CurvePoint::at_infinity();  // includes 2-torsion doubling
        slope = (Rational(3) * P.x * P.x + Rational(E.a)) / (Rational(2) * P.y);
    } else {
        slope = (Q.y - P.y) / (Q.x - P.x);
    }
    Rational x = slope * slope - P.x - Q.x;
    Rational y = slope * (P.x - x) - P.y;
    return CurvePoint::affine(std::move(x), std::move(y));
}

CurvePoint scalar_mul(const EllipticCurve& E, long n, const CurvePoint& P) {
    require_on_curve(E, P);
    CurvePoint base = n < 0 ? negate(E, P) : P;
    unsigned long k = n < 0 ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
    CurvePoint acc = CurvePoint::at_infinity();
    while (k) {
        if (k & 1UL) acc = add(E, acc, base);
        base = add(E, base, base);
        k >>= 1;
    }
    return acc;
}

std::pair<Rational, Rational> birational_X(int variant, const CurvePoint& P) {
    if (variant != 1 && variant != 2) throw std::invalid_argument("birational_X: variant must be 1 or 2");
    if (P.infinity) throw std::domain_error("birational_X: point at infinity");
    EllipticCurve E;
    require_on_curve(E, P);
    const Rational& x = P.x;
    const Rational& y = P.y;
    const int s = variant == 1 ? 1 : -1;
    // X1: den = 17 + y - x;  X2: den = -17 + x + y (the same up to y -> -y and sign).
    Rational den = variant == 1 ? Rational(17) + y - x : Rational(-17) + x + y;
    if (den.is_zero()) throw std::domain_error("birational_X: vanishing denominator");
    Rational X = variant == 1 ? -(Rational(-7) * x + Rational(35) + y) / den
                              : -(Rational(7) * x - Rational(35) + y) / den;
    Rational Y = Rational(3) *
                 (Rational(-2) * x * x * x + y * y + Rational(9) * x * x + Rational(28 * s) * y + Rational(169)) /
                 (den * den);
    if (Y * Y != quartic_rhs(X))
        throw VerificationError("birational_X: image (" + X.str() + ", " + Y.str() + ") misses the quartic");
    return {X, Y};
}

double log_abs(const Integer& n) {
    if (n == 0) throw std::domain_error("log_abs: zero");
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    return std::log(std::abs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

double log_height(const std::vector<Rational>& values) {
    if (values.empty()) throw std::invalid_argument("log_height: empty tuple");
    Integer q = 1;
    for (const auto& v : values) q = lcm(q, v.denominator());
    Integer best = q;
    for (const auto& v : values) {
        Integer t = q / v.denominator() * abs(v.numerator());
        if (t > best) best = t;
    }
    return log_abs(best);
}

}  // namespace klines
