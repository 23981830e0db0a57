#pragma once

#include "klines/exact_matrix.hpp"
#include "klines/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace klines {

// E, F, H spanning the principal sl2 of sl_d.
struct PrincipalTriple {
    int d = 0;
    ExactMatrix E, F, H;
};

// Throws std::invalid_argument for d < 2; VerificationError if the sl2
// relations fail (they cannot, short of a bug).
PrincipalTriple principal_triple(int d);

// f(i) = i(d - i), the subdiagonal of F.
Integer principal_f(int d, long i);

// Diagonal of kappa^e with its canonical (unnormalized) integer scaling.
struct KostantVector {
    int d = 0;
    int e = 0;
    std::vector<Integer> entries;

    // Entries divided by their gcd, first entry made positive.
    std::vector<Integer> primitive() const;
    // Factor c with entries = c * primitive().
    Integer content() const;
    friend bool operator==(const KostantVector&, const KostantVector&) = default;
};

// kappa^e = (-1)^e (ad F)^e (E^e), by e exact brackets.
KostantVector kostant_vector_bracket(int d, int e);
// Closed form: entry j is (-1)^e e! sum_t (-1)^t C(e,t)^2 (j-1)^{_(e-t)} (d-j)^{_t}.
KostantVector kostant_vector_closed(int d, int e);
Integer kostant_entry_closed(int d, int e, int j);  // 1-based j

// sigma_j(kappa^e), 1-based j, via the closed form alone.
Integer simple_root_closed(int d, int e, int j);
// sigma_j(kappa^e) computed both from entry differences and the closed form;
// throws VerificationError if they differ.
Integer simple_root_on_kostant(int d, int e, int j);
// First entry of kappa^e, checked against e!(d-1)^{_e}.
Integer weight1_on_kostant(int d, int e);

// An element of a*, paired with diagonal vectors by sum_i coords_i a_i.
struct LinearFunctional {
    std::vector<Rational> coords;

    Rational operator()(const std::vector<Rational>& a) const;
    Rational operator()(const std::vector<Integer>& a) const;
    double operator()(const std::vector<double>& a) const;
};

LinearFunctional simple_root(int d, int j);           // e_j - e_{j+1}, 1-based
LinearFunctional first_fundamental_weight(int d);     // e_1

enum class RootType { A, B, C, D, E6, E7, E8, F4, G2 };

std::string to_string(RootType t);
// Accepts "A", "B", ..., "G2" (case-insensitive); throws std::invalid_argument.
RootType parse_root_type(const std::string& s);

struct ExponentTable {
    RootType type;
    int rank;
    std::vector<int> exponents;  // multiset, in table order
};

// Throws std::invalid_argument for impossible (type, rank) combinations.
ExponentTable exponents(RootType type, int rank);

// c with [[F, E^e], E^k] = c E^{e+k-1}. Requires 2 <= e, k <= d-1;
// std::out_of_range if e + k - 1 > d - 1; VerificationError if the bracket is
// not on that line, or if e = 3, k <= d-3 and c = 0.
Rational shifted_bracket_check(int d, int e, int k);

struct TypeDData {
    int n = 0;
    std::vector<Rational> antifixed_line;                 // (0,...,0,1) in R^n
    std::optional<ExactMatrix> triality;                  // n = 4 only
    std::optional<std::vector<Rational>> triality_image;  // triality * antifixed_line
};

TypeDData typeD_data(int n);
// The order-three automorphism of the D4 Cartan. std::invalid_argument unless n = 4.
ExactMatrix triality(int n);

enum class Subtype { B, C, G2 };

std::string to_string(Subtype s);
Subtype parse_subtype(const std::string& s);

// Partition of {1, ..., d-1} by the irreducible factors of sl_d under the
// subalgebra: odd | even for B (odd d) and C (even d); {1,5} | {3} | {2,4,6} for G2 (d = 7).
std::vector<std::vector<int>> adjoint_factor_split(Subtype subtype, int d);

// Throws std::invalid_argument unless (subtype, d) is one of the above.
void require_subtype_dimension(Subtype subtype, int d);

}  // namespace klines
