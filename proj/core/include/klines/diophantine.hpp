#pragma once

#include "klines/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace klines {

// sigma_j(kappa^e) = 0 in sl_d.
struct SingularTriple {
    int d = 0, e = 0, j = 0;
    friend auto operator<=>(const SingularTriple&, const SingularTriple&) = default;
};

// Every singular (d, e, j) with 3 <= d <= d_max, sorted. Each kappa^e is
// built once per (d, e) and every sigma_j is cross-checked against the closed
// form; a mismatch throws VerificationError.
std::vector<SingularTriple> singular_scan(int d_max, unsigned workers = 1);

enum class Family { I, II, III, IV, V };

std::string to_string(Family f);
Family parse_family(const std::string& s);  // "i".."v"

struct FamilyMember {
    Family family;
    SingularTriple triple;
    int orbit_index = -1;  // k in M^k(d0, j0)^T for families iv and v
};

// Members with d <= bound, each re-verified exactly (VerificationError otherwise).
std::vector<FamilyMember> family_members(Family family, int bound);

// -d^2 + 5dj - 5j^2
Integer q3(const Integer& d, const Integer& j);

// e^4 - 6de^2 + 2e^3 + 6d^2 - 6de + 11e^2 - 18d + 10e + 12
Integer sigma3_poly(const Integer& d, const Integer& e);

// 3(x^4 + 2x^3 - x^2 - 2x + 3)
Integer quartic_rhs(const Integer& x);
Rational quartic_rhs(const Rational& x);

struct QuarticSolution {
    long e = 0;
    Integer y;                  // positive square root of quartic_rhs(e)
    std::optional<Integer> d_plus, d_minus;  // (e^2+e+3)/2 +- y/6 when integral
};

// All 0 <= e <= e_max with quartic_rhs(e) a perfect square (exact test).
std::vector<QuarticSolution> quartic_solutions(long e_max, unsigned workers = 1);

}  // namespace klines
