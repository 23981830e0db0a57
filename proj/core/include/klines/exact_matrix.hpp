#pragma once

#include "klines/rational.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace klines {

// Dense row-major matrix of exact rationals. Indices are 0-based.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols);
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static ExactMatrix zero(std::size_t n) { return ExactMatrix(n, n); }
    static ExactMatrix identity(std::size_t n);
    // pi^{i,j}: the unit matrix sending e_j to e_i (0-based i, j).
    static ExactMatrix unit(std::size_t n, std::size_t i, std::size_t j);
    static ExactMatrix diagonal(const std::vector<Rational>& diag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    const std::vector<Rational>& entries() const { return a_; }

    bool is_zero() const;
    bool is_diagonal() const;
    std::vector<Rational> diag() const;
    Rational trace() const;
    ExactMatrix transpose() const;

    ExactMatrix& operator+=(const ExactMatrix& o);
    ExactMatrix& operator-=(const ExactMatrix& o);
    ExactMatrix& operator*=(const Rational& s);
    ExactMatrix operator-() const;

    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(ExactMatrix a, const Rational& s) { return a *= s; }
    friend ExactMatrix operator*(const Rational& s, ExactMatrix a) { return a *= s; }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

    // JSON array-of-arrays of "p/q" strings.
    std::string to_json() const;
    static ExactMatrix from_json(std::string_view text);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> a_;
};

ExactMatrix matrix_power(const ExactMatrix& a, unsigned exponent);

// AB - BA. Throws std::invalid_argument unless both are square of equal size.
ExactMatrix bracket(const ExactMatrix& a, const ExactMatrix& b);

// (ad X)^k (Y)
ExactMatrix ad_power(const ExactMatrix& x, unsigned k, ExactMatrix y);

}  // namespace klines
