#pragma once

#include "klines/lie.hpp"
#include "klines/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace klines {

enum class KahlerType { A, B, C, G2 };

std::string to_string(KahlerType t);

struct KahlerFunctional {
    int d = 0;
    KahlerType type = KahlerType::A;
    std::vector<Rational> radicands;   // index e-1; zero for dropped exponents
    std::vector<double> coefficients;  // c_e = sqrt(radicand)
    std::vector<double> w;             // trace-zero ambient form: phi(a) = sum w_i a_i
    std::vector<double> native;        // subtype Cartan coordinates (= w for type A)
    std::vector<int> kept;             // exponents with a nonzero coefficient

    double operator()(const std::vector<double>& a) const;
    // Exact vectors go through the exact decomposition, rounding once per exponent.
    double operator()(const std::vector<Integer>& a) const;

    // Up to positive scale: type A projects to trace zero then divides by the
    // first coordinate; subtypes divide the native coordinates by the first.
    std::vector<double> normalized() const;
};

// Normalization used for comparisons "up to positive scaling".
std::vector<double> normalize_form(KahlerType type, std::vector<double> v);

// The exact radicand (d+e)^{_(e-1)} / (d-1)^{_e} * 3 * 2^e / ((2e+1)! (d-1)).
Rational kahler_radicand(int d, int e);
double kahler_coefficient(int d, int e);

KahlerFunctional kahler_in_coordinates(int d);
KahlerFunctional kahler_subtype(Subtype subtype, int d);

// Known closed forms (unnormalized, native coordinates) for sl3, sl4, sp4,
// sp6, so(3,4) and G2; empty otherwise.
std::optional<std::vector<double>> kahler_reference_form(KahlerType type, int d);

struct KahlerComparison {
    std::vector<double> computed;   // normalized
    std::vector<double> reference;  // normalized
    double max_rel_error = 0;
};

// Throws std::invalid_argument when no reference form exists.
KahlerComparison compare_with_reference(const KahlerFunctional& phi);

}  // namespace klines
