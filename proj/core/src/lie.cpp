#include "klines/lie.hpp"

#include "klines/combinatorics.hpp"
#include "klines/errors.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace klines {

namespace {

void require_exponent(int d, int e) {
    if (d < 2) throw std::invalid_argument("d must be >= 2, got " + std::to_string(d));
    if (e < 1 || e > d - 1)
        throw std::out_of_range("exponent e=" + std::to_string(e) + " outside [1, " +
                                std::to_string(d - 1) + "]");
}

std::string upper(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

}  // namespace

Integer principal_f(int d, long i) { return Integer(i) * (d - i); }

PrincipalTriple principal_triple(int d) {
    if (d < 2) throw std::invalid_argument("principal_triple: d must be >= 2");
    PrincipalTriple t{d, ExactMatrix(d, d), ExactMatrix(d, d), ExactMatrix(d, d)};
    for (int i = 0; i < d; ++i) t.H(i, i) = d - 1 - 2 * i;
    for (int i = 0; i + 1 < d; ++i) {
        t.E(i, i + 1) = 1;
        t.F(i + 1, i) = Rational(principal_f(d, i + 1));
    }
    if (bracket(t.H, t.E) != t.E * Rational(2) || bracket(t.H, t.F) != t.F * Rational(-2) ||
        bracket(t.E, t.F) != t.H)
        throw VerificationError("principal_triple: sl2 relations fail for d=" + std::to_string(d));
    return t;
}

std::vector<Integer> KostantVector::primitive() const {
    Integer c = content();
    std::vector<Integer> p;
    for (const auto& x : entries) p.push_back(c == 0 ? x : Integer(x / c));
    return p;
}

Integer KostantVector::content() const {
    Integer g = 0;
    for (const auto& x : entries) g = gcd(g, x);
    if (!entries.empty() && entries.front() < 0) g = -g;
    return g;
}

KostantVector kostant_vector_bracket(int d, int e) {
    require_exponent(d, e);
    PrincipalTriple t = principal_triple(d);
    ExactMatrix m = ad_power(t.F, static_cast<unsigned>(e), matrix_power(t.E, static_cast<unsigned>(e)));
    if (!m.is_diagonal())
        throw VerificationError("kostant_vector_bracket: (ad F)^e(E^e) not diagonal for d=" +
                                std::to_string(d) + ", e=" + std::to_string(e));
    KostantVector k{d, e, {}};
    for (const auto& x : m.diag()) {
        if (!x.is_integer()) throw VerificationError("kostant_vector_bracket: non-integral entry");
        k.entries.push_back(e % 2 ? Integer(-x.numerator()) : x.numerator());
    }
    return k;
}

Integer kostant_entry_closed(int d, int e, int j) {
    require_exponent(d, e);
    if (j < 1 || j > d) throw std::out_of_range("Kostant entry index outside [1, d]");
    // C(e,t)^2 (j-1)^{_(e-t)} (d-j)^{_t} = e! C(e,t) C(j-1,e-t) C(d-j,t)
    Integer s = 0;
    for (int t = 0; t <= e; ++t) {
        Integer term = binomial(e, t) * binomial(j - 1, e - t) * binomial(d - j, t);
        if (t % 2) s -= term;
        else s += term;
    }
    const Integer ef = factorial(e);
    s *= ef * ef;
    return e % 2 ? Integer(-s) : s;
}

KostantVector kostant_vector_closed(int d, int e) {
    require_exponent(d, e);
    KostantVector k{d, e, {}};
    for (int j = 1; j <= d; ++j) k.entries.push_back(kostant_entry_closed(d, e, j));
    return k;
}

Integer simple_root_closed(int d, int e, int j) {
    require_exponent(d, e);
    if (j < 1 || j > d - 1) throw std::out_of_range("simple root index j outside [1, d-1]");
    // (e+1)! C(e,t) C(e,t-1) (j-1)^{_(e-t)} (d-1-j)^{_(t-1)} = e!^2 C(e+1,t) C(j-1,e-t) C(d-1-j,t-1)
    Integer s = 0;
    for (int t = 1; t <= e; ++t) {
        Integer term = binomial(e + 1, t) * binomial(j - 1, e - t) * binomial(d - 1 - j, t - 1);
        if (t % 2) s -= term;
        else s += term;
    }
    const Integer ef = factorial(e);
    s *= ef * ef;
    return e % 2 ? Integer(-s) : s;
}

Integer simple_root_on_kostant(int d, int e, int j) {
    Integer closed = simple_root_closed(d, e, j);
    // two entries suffice; the full vector is O(d e^2) big-integer work
    Integer diff = kostant_entry_closed(d, e, j) - kostant_entry_closed(d, e, j + 1);
    if (diff != closed)
        throw VerificationError("simple_root_on_kostant: entry difference " + diff.get_str() +
                                " != closed form " + closed.get_str() + " at (d,e,j)=(" +
                                std::to_string(d) + "," + std::to_string(e) + "," +
                                std::to_string(j) + ")");
    return closed;
}

Integer weight1_on_kostant(int d, int e) {
    Integer expected = factorial(e) * falling_factorial(Integer(d - 1), e);
    if (kostant_entry_closed(d, e, 1) != expected)
        throw VerificationError("weight1_on_kostant: first entry disagrees with e!(d-1)^{_e}");
    return expected;
}

Rational LinearFunctional::operator()(const std::vector<Rational>& a) const {
    if (a.size() != coords.size()) throw std::invalid_argument("LinearFunctional: dimension mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += coords[i] * a[i];
    return s;
}

Rational LinearFunctional::operator()(const std::vector<Integer>& a) const {
    if (a.size() != coords.size()) throw std::invalid_argument("LinearFunctional: dimension mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += coords[i] * Rational(a[i]);
    return s;
}

double LinearFunctional::operator()(const std::vector<double>& a) const {
    if (a.size() != coords.size()) throw std::invalid_argument("LinearFunctional: dimension mismatch");
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += coords[i].to_double() * a[i];
    return s;
}

LinearFunctional simple_root(int d, int j) {
    if (j < 1 || j > d - 1) throw std::out_of_range("simple_root: j outside [1, d-1]");
    LinearFunctional f{std::vector<Rational>(d)};
    f.coords[j - 1] = 1;
    f.coords[j] = -1;
    return f;
}

LinearFunctional first_fundamental_weight(int d) {
    if (d < 2) throw std::invalid_argument("first_fundamental_weight: d must be >= 2");
    LinearFunctional f{std::vector<Rational>(d)};
    f.coords[0] = 1;
    return f;
}

std::string to_string(RootType t) {
    switch (t) {
        case RootType::A: return "A";
        case RootType::B: return "B";
        case RootType::C: return "C";
        case RootType::D: return "D";
        case RootType::E6: return "E6";
        case RootType::E7: return "E7";
        case RootType::E8: return "E8";
        case RootType::F4: return "F4";
        case RootType::G2: return "G2";
    }
    return "?";
}

RootType parse_root_type(const std::string& s) {
    const std::string u = upper(s);
    for (RootType t : {RootType::A, RootType::B, RootType::C, RootType::D, RootType::E6,
                       RootType::E7, RootType::E8, RootType::F4, RootType::G2})
        if (to_string(t) == u) return t;
    throw std::invalid_argument("unknown root system type '" + s + "'");
}

ExponentTable exponents(RootType type, int rank) {
    auto bad = [&] {
        return std::invalid_argument("no root system " + to_string(type) + " of rank " +
                                     std::to_string(rank));
    };
    auto fixed = [&](int r, std::vector<int> ex) {
        if (rank != r) throw bad();
        return ExponentTable{type, rank, std::move(ex)};
    };
    ExponentTable t{type, rank, {}};
    switch (type) {
        case RootType::A:
            if (rank < 1) throw bad();
            for (int i = 1; i <= rank; ++i) t.exponents.push_back(i);
            return t;
        case RootType::B:
        case RootType::C:
            if (rank < 2) throw bad();
            for (int i = 1; i <= rank; ++i) t.exponents.push_back(2 * i - 1);
            return t;
        case RootType::D:
            if (rank < 3) throw bad();
            for (int i = 1; i <= rank - 1; ++i) t.exponents.push_back(2 * i - 1);
            t.exponents.push_back(rank - 1);
            return t;
        case RootType::E6: return fixed(6, {1, 4, 5, 7, 8, 11});
        case RootType::E7: return fixed(7, {1, 5, 7, 9, 11, 13, 17});
        case RootType::E8: return fixed(8, {1, 7, 11, 13, 17, 19, 23, 29});
        case RootType::F4: return fixed(4, {1, 5, 7, 11});
        case RootType::G2: return fixed(2, {1, 5});
    }
    throw bad();
}

Rational shifted_bracket_check(int d, int e, int k) {
    if (d < 3) throw std::invalid_argument("shifted_bracket_check: d must be >= 3");
    if (e < 2 || e > d - 1 || k < 2 || k > d - 1)
        throw std::out_of_range("shifted_bracket_check: e, k must lie in [2, d-1]");
    if (e + k - 1 > d - 1)
        throw std::out_of_range("shifted_bracket_check: e+k-1 exceeds d-1 (E^{e+k-1} = 0)");
    PrincipalTriple t = principal_triple(d);
    ExactMatrix Ee = matrix_power(t.E, static_cast<unsigned>(e));
    ExactMatrix Ek = matrix_power(t.E, static_cast<unsigned>(k));
    ExactMatrix target = matrix_power(t.E, static_cast<unsigned>(e + k - 1));
    ExactMatrix b = bracket(bracket(t.F, Ee), Ek);
    Rational c = b(0, static_cast<std::size_t>(e + k - 1));
    if (b != target * c)
        throw VerificationError("shifted_bracket_check: [[F,E^e],E^k] not proportional to E^{e+k-1}");
    if (e == 3 && k <= d - 3 && c.is_zero())
        throw VerificationError("shifted_bracket_check: [[F,E^3],E^k] vanishes for k <= d-3");
    return c;
}

ExactMatrix triality(int n) {
    if (n != 4) throw std::invalid_argument("triality exists only for D4 (n = 4)");
    const int m[4][4] = {{1, 1, 1, -1}, {1, 1, -1, 1}, {1, -1, 1, 1}, {1, -1, -1, -1}};
    ExactMatrix t(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t(i, j) = Rational(Integer(m[i][j]), Integer(2));
    return t;
}

TypeDData typeD_data(int n) {
    if (n < 3) throw std::invalid_argument("typeD_data: n must be >= 3");
    TypeDData data;
    data.n = n;
    data.antifixed_line.assign(n, Rational(0));
    data.antifixed_line.back() = 1;
    if (n == 4) {
        data.triality = triality(4);
        ExactMatrix col(4, 1, data.antifixed_line);
        data.triality_image = (*data.triality * col).entries();
    }
    return data;
}

std::string to_string(Subtype s) {
    switch (s) {
        case Subtype::B: return "B";
        case Subtype::C: return "C";
        case Subtype::G2: return "G2";
    }
    return "?";
}

Subtype parse_subtype(const std::string& s) {
    const std::string u = upper(s);
    if (u == "B") return Subtype::B;
    if (u == "C") return Subtype::C;
    if (u == "G2") return Subtype::G2;
    throw std::invalid_argument("unknown subtype '" + s + "' (expected B, C or G2)");
}

void require_subtype_dimension(Subtype subtype, int d) {
    switch (subtype) {
        case Subtype::B:
            if (d < 3 || d % 2 == 0) throw std::invalid_argument("subtype B needs odd d >= 3");
            return;
        case Subtype::C:
            if (d < 4 || d % 2) throw std::invalid_argument("subtype C needs even d >= 4");
            return;
        case Subtype::G2:
            if (d != 7) throw std::invalid_argument("subtype G2 needs d = 7");
            return;
    }
}

std::vector<std::vector<int>> adjoint_factor_split(Subtype subtype, int d) {
    require_subtype_dimension(subtype, d);
    if (subtype == Subtype::G2) return {{1, 5}, {3}, {2, 4, 6}};
    std::vector<std::vector<int>> parts(2);
    for (int e = 1; e <= d - 1; ++e) parts[e % 2 ? 0 : 1].push_back(e);
    return parts;
}

}  // namespace klines
