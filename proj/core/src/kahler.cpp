#include "klines/kahler.hpp"

#include "klines/combinatorics.hpp"

#include <cmath>
#include <stdexcept>

namespace klines {

std::string to_string(KahlerType t) {
    switch (t) {
        case KahlerType::A: return "A";
        case KahlerType::B: return "B";
        case KahlerType::C: return "C";
        case KahlerType::G2: return "G2";
    }
    return "?";
}

Rational kahler_radicand(int d, int e) {
    if (d < 2 || e < 1 || e > d - 1)
        throw std::out_of_range("kahler_radicand: need 1 <= e <= d-1");
    Rational r = Rational(falling_factorial(Integer(d + e), e - 1)) /
                 Rational(falling_factorial(Integer(d - 1), e));
    Integer two_e;
    mpz_ui_pow_ui(two_e.get_mpz_t(), 2, static_cast<unsigned long>(e));
    r *= Rational(Integer(3) * two_e, factorial(2 * e + 1) * (d - 1));
    if (r.sign() <= 0) throw std::domain_error("kahler_radicand: non-positive radicand");
    return r;
}

double kahler_coefficient(int d, int e) { return std::sqrt(kahler_radicand(d, e).to_double()); }

double KahlerFunctional::operator()(const std::vector<double>& a) const {
    if (a.size() != w.size()) throw std::invalid_argument("KahlerFunctional: dimension mismatch");
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += w[i] * a[i];
    return s;
}

double KahlerFunctional::operator()(const std::vector<Integer>& a) const {
    if (a.size() != w.size()) throw std::invalid_argument("KahlerFunctional: dimension mismatch");
    // Through the exact decomposition; summing w_i a_i in doubles cancels badly
    // on the large alternating entries of high Kostant vectors.
    double s = 0;
    for (int e : kept) {
        const KostantVector k = kostant_vector_closed(d, e);
        Integer dot = 0, norm2 = 0;
        for (int i = 0; i < d; ++i) {
            dot += a[i] * k.entries[i];
            norm2 += k.entries[i] * k.entries[i];
        }
        s += coefficients[e - 1] * Rational(k.entries[0] * dot, norm2).to_double();
    }
    return s;
}

std::vector<double> normalize_form(KahlerType type, std::vector<double> v) {
    if (v.empty()) return v;
    if (type == KahlerType::A) {
        double mean = 0;
        for (double x : v) mean += x;
        mean /= static_cast<double>(v.size());
        for (double& x : v) x -= mean;
    }
    if (!(v.front() > 0)) throw std::domain_error("normalize_form: first coordinate must be positive");
    const double s = v.front();
    for (double& x : v) x /= s;
    return v;
}

std::vector<double> KahlerFunctional::normalized() const { return normalize_form(type, native); }

namespace {

// sum over kept exponents of c_e * kappa^e_1 * kappa^e / <kappa^e, kappa^e>.
// Everything but the square roots is exact.
KahlerFunctional assemble(int d, KahlerType type, const std::vector<int>& kept) {
    KahlerFunctional phi;
    phi.d = d;
    phi.type = type;
    phi.radicands.assign(d - 1, Rational(0));
    phi.coefficients.assign(d - 1, 0.0);
    phi.w.assign(d, 0.0);
    phi.kept = kept;
    for (int e : kept) {
        KostantVector k = kostant_vector_closed(d, e);
        Integer norm2 = 0;
        for (const auto& x : k.entries) norm2 += x * x;
        phi.radicands[e - 1] = kahler_radicand(d, e);
        const double c = std::sqrt(phi.radicands[e - 1].to_double());
        phi.coefficients[e - 1] = c;
        for (int i = 0; i < d; ++i) {
            Rational alpha = Rational(k.entries[0] * k.entries[i], norm2);
            phi.w[i] += c * alpha.to_double();
        }
    }
    return phi;
}

}  // namespace

KahlerFunctional kahler_in_coordinates(int d) {
    if (d < 3) throw std::invalid_argument("kahler_in_coordinates: d must be >= 3");
    std::vector<int> all;
    for (int e = 1; e <= d - 1; ++e) all.push_back(e);
    KahlerFunctional phi = assemble(d, KahlerType::A, all);
    phi.native = phi.w;
    return phi;
}

KahlerFunctional kahler_subtype(Subtype subtype, int d) {
    require_subtype_dimension(subtype, d);
    std::vector<int> kept;
    if (subtype == Subtype::G2) kept = {1, 5};
    else
        for (int e = 1; e <= d - 1; e += 2) kept.push_back(e);
    KahlerType type = subtype == Subtype::B ? KahlerType::B
                    : subtype == Subtype::C ? KahlerType::C
                                            : KahlerType::G2;
    KahlerFunctional phi = assemble(d, type, kept);
    // C_n: a = (a_1..a_n, -a_n..-a_1); B_n: same with a middle zero.
    const int n = d / 2;
    std::vector<double> b(n);
    for (int i = 0; i < n; ++i) b[i] = phi.w[i] - phi.w[d - 1 - i];
    if (subtype == Subtype::G2) phi.native = {b[0] + b[2], b[1] - b[2]};  // a = (a1, a2, a1 - a2)
    else phi.native = b;
    return phi;
}

std::optional<std::vector<double>> kahler_reference_form(KahlerType type, int d) {
    const double r2 = std::sqrt(2.0), r10 = std::sqrt(10.0), r30 = std::sqrt(30.0);
    const double r35 = std::sqrt(35.0), r42 = std::sqrt(42.0), r420 = std::sqrt(420.0);
    switch (type) {
        case KahlerType::A:
            if (d == 3) return std::vector<double>{1, -r2 / 2, -1};
            if (d == 4)
                return std::vector<double>{6 + r10 / 15, 4 - r10 / 15 - r30 / 3,
                                           2 + 2 * r10 / 15 - r30 / 3, 0};
            return std::nullopt;
        case KahlerType::C:
            if (d == 4) return std::vector<double>{3 + r10 / 30, 1 - r10 / 10};
            if (d == 6)
                return std::vector<double>{5 + 211 * r35 / 3780, 3 - 299 * r35 / 3780,
                                           1 - 79 * r35 / 1890};
            return std::nullopt;
        case KahlerType::B:
            if (d == 7)
                return std::vector<double>{3 + r420 / 90 + r42 / 3780, 2 - r420 / 90 - r42 / 945,
                                           1 - r420 / 90 + r42 / 756};
            return std::nullopt;
        case KahlerType::G2:
            if (d == 7) return std::vector<double>{8 + r42 / 315, 2 - r42 / 210};
            return std::nullopt;
    }
    return std::nullopt;
}

KahlerComparison compare_with_reference(const KahlerFunctional& phi) {
    auto ref = kahler_reference_form(phi.type, phi.d);
    if (!ref)
        throw std::invalid_argument("no reference form for type " + to_string(phi.type) +
                                    ", d=" + std::to_string(phi.d));
    KahlerComparison c;
    c.computed = phi.normalized();
    c.reference = normalize_form(phi.type, *ref);
    for (std::size_t i = 0; i < c.computed.size(); ++i) {
        const double scale = std::max(std::abs(c.reference[i]), 1e-300);
        c.max_rel_error = std::max(c.max_rel_error, std::abs(c.computed[i] - c.reference[i]) / scale);
    }
    return c;
}

}  // namespace klines
