#include "klines/combinatorics.hpp"

#include <stdexcept>

namespace klines {

Rational falling_factorial(const Rational& z, long k) {
    if (k < 0) return Rational(0);
    Rational r(1);
    Rational t = z;
    for (long i = 0; i < k; ++i) {
        r *= t;
        t -= Rational(1);
    }
    return r;
}

Integer falling_factorial(const Integer& z, long k) {
    if (k < 0) return 0;
    if (z >= 0 && z < k) return 0;
    Integer r = 1;
    for (long i = 0; i < k; ++i) r *= z - i;
    return r;
}

Integer factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational finite_difference(const IntSeqFunction& g, long k, long x) {
    if (k < 0) throw std::invalid_argument("finite_difference: negative order");
    Rational acc;
    for (long i = 0; i <= k; ++i) {
        Rational term = Rational(binomial(k, i)) * g(x + k - i);
        if (i % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

}  // namespace klines
