#include "klines/exact_matrix.hpp"

#include <json.hpp>

#include <stdexcept>

namespace klines {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols)
        throw std::invalid_argument("ExactMatrix: entry count does not match shape");
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
    if (i >= n || j >= n) throw std::out_of_range("ExactMatrix::unit: index out of range");
    ExactMatrix m(n, n);
    m(i, j) = 1;
    return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Rational>& diag) {
    ExactMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool ExactMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && !(*this)(i, j).is_zero()) return false;
    return true;
}

std::vector<Rational> ExactMatrix::diag() const {
    std::vector<Rational> d;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) d.push_back((*this)(i, i));
    return d;
}

Rational ExactMatrix::trace() const {
    Rational t;
    for (const auto& x : diag()) t += x;
    return t;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

static void require_same_shape(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("ExactMatrix: shape mismatch");
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
    require_same_shape(*this, o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
    require_same_shape(*this, o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator*=(const Rational& s) {
    for (auto& x : a_) x *= s;
    return *this;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("ExactMatrix: product shape mismatch");
    ExactMatrix c(a.rows(), b.cols());
    mpq_class acc, t;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                if (a(i, k).is_zero()) continue;
                t = a(i, k).raw() * b(k, j).raw();
                acc += t;
            }
            c(i, j) = Rational(acc);
        }
    return c;
}

ExactMatrix matrix_power(const ExactMatrix& a, unsigned exponent) {
    if (!a.square()) throw std::invalid_argument("matrix_power: non-square matrix");
    ExactMatrix r = ExactMatrix::identity(a.rows());
    for (unsigned k = 0; k < exponent; ++k) r = r * a;
    return r;
}

ExactMatrix bracket(const ExactMatrix& a, const ExactMatrix& b) {
    if (!a.square() || !b.square() || a.rows() != b.rows())
        throw std::invalid_argument("bracket: operands must be square of equal size");
    return a * b - b * a;
}

ExactMatrix ad_power(const ExactMatrix& x, unsigned k, ExactMatrix y) {
    for (unsigned i = 0; i < k; ++i) y = bracket(x, y);
    return y;
}

std::string ExactMatrix::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (std::size_t i = 0; i < rows_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < cols_; ++c) row.push_back((*this)(i, c).str());
        j.push_back(std::move(row));
    }
    return j.dump();
}

ExactMatrix ExactMatrix::from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("ExactMatrix::from_json: ") + e.what());
    }
    if (!j.is_array()) throw std::invalid_argument("ExactMatrix::from_json: expected an array of rows");
    std::size_t rows = j.size(), cols = rows ? j[0].size() : 0;
    std::vector<Rational> entries;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != cols)
            throw std::invalid_argument("ExactMatrix::from_json: ragged rows");
        for (const auto& x : row) {
            if (x.is_string()) entries.push_back(Rational::parse(x.get<std::string>()));
            else if (x.is_number_integer()) entries.emplace_back(static_cast<long>(x.get<long long>()));
            else throw std::invalid_argument("ExactMatrix::from_json: entries must be strings or integers");
        }
    }
    return ExactMatrix(rows, cols, std::move(entries));
}

}  // namespace klines
