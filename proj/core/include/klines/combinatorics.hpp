#pragma once

#include "klines/rational.hpp"

#include <functional>

namespace klines {

// z(z-1)...(z-k+1); 1 for k = 0 and 0 for k < 0.
Rational falling_factorial(const Rational& z, long k);
Integer falling_factorial(const Integer& z, long k);

Integer factorial(long n);

// Multiplicative formula; 0 outside 0 <= k <= n. n must be >= 0.
Integer binomial(long n, long k);

using IntSeqFunction = std::function<Rational(long)>;

// Forward difference: sum_{i=0..k} (-1)^i C(k,i) g(x+k-i). Throws std::invalid_argument for k < 0.
Rational finite_difference(const IntSeqFunction& g, long k, long x);

}  // namespace klines
