#include "klines/kahler.hpp"
#include "klines/lie.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace klines;

namespace {

// trace-zero projection, then divide by the first coordinate
std::vector<double> norm_a(std::vector<double> v) {
    double mean = 0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    for (double& x : v) x -= mean;
    const double s = v[0];
    for (double& x : v) x /= s;
    return v;
}

std::vector<double> norm_first(std::vector<double> v) {
    const double s = v[0];
    for (double& x : v) x /= s;
    return v;
}

void expect_rel(const std::vector<double>& got, const std::vector<double>& want, double tol) {
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i)
        EXPECT_LE(std::abs(got[i] - want[i]), tol * std::max(std::abs(want[i]), 1e-300)) << "coordinate " << i;
}

std::vector<double> to_double(const std::vector<Integer>& v) {
    std::vector<double> out;
    for (const auto& x : v) out.push_back(x.get_d());
    return out;
}

}  // namespace

TEST(KahlerCoefficient, Examples) {
    EXPECT_EQ(kahler_radicand(3, 1), Rational(Integer(1), Integer(4)));
    EXPECT_EQ(kahler_radicand(3, 2), Rational(Integer(1), Integer(8)));
    EXPECT_EQ(kahler_radicand(4, 3), Rational(Integer(1), Integer(90)));
    EXPECT_NEAR(kahler_coefficient(3, 1), 0.5, 1e-15);
    EXPECT_NEAR(kahler_coefficient(3, 2), 1 / (2 * std::sqrt(2.0)), 1e-15);
    EXPECT_NEAR(kahler_coefficient(4, 3), 1 / (3 * std::sqrt(10.0)), 1e-15);
    EXPECT_THROW(kahler_coefficient(4, 4), std::out_of_range);
}

TEST(KahlerCoefficient, RadicandOracle) {
    for (int d = 2; d <= 12; ++d)
        for (int e = 1; e < d; ++e) {
            auto f = oracle::kahler_radicand(d, e);
            auto r = kahler_radicand(d, e);
            EXPECT_EQ(r.numerator(), Integer(static_cast<long>(f.p)));
            EXPECT_EQ(r.denominator(), Integer(static_cast<long>(f.q)));
        }
}

TEST(KahlerForm, Sl3) {
    auto phi = kahler_in_coordinates(3);
    expect_rel(phi.normalized(), norm_a({1, -std::sqrt(2.0) / 2, -1}), 1e-9);
    // with coefficient c_e the form gives c_e * e!(d-1)^{_e}: 1 and sqrt 2 after the 1/4 scaling
    const double k1 = phi(kostant_vector_closed(3, 1).entries), k2 = phi(kostant_vector_closed(3, 2).entries);
    EXPECT_NEAR(k2 / k1, std::sqrt(2.0), 1e-12);
}

TEST(KahlerForm, Sl4) {
    const double r10 = std::sqrt(10.0), r3 = std::sqrt(3.0);
    auto phi = kahler_in_coordinates(4);
    expect_rel(phi.normalized(), norm_a({6 + r10 / 15, 4 - r10 / 15 - r10 * r3 / 3, 2 + 2 * r10 / 15 - r10 * r3 / 3, 0}),
               1e-9);
}

TEST(KahlerForm, Sp4) {
    auto phi = kahler_subtype(Subtype::C, 4);
    const double r10 = std::sqrt(10.0);
    expect_rel(norm_first(phi.native), norm_first({3 + r10 / 30, 1 - r10 / 10}), 1e-9);
    // c_1^2 = 1/9 and c_3^2 = 1/90 are the only inputs
    EXPECT_EQ(phi.radicands[0], Rational(Integer(1), Integer(9)));
    EXPECT_EQ(phi.radicands[2], Rational(Integer(1), Integer(90)));
    EXPECT_TRUE(phi.radicands[1].is_zero());
}

TEST(KahlerForm, Sp6) {
    const double r35 = std::sqrt(35.0);
    auto phi = kahler_subtype(Subtype::C, 6);
    expect_rel(norm_first(phi.native), norm_first({5 + 211 * r35 / 3780, 3 - 299 * r35 / 3780, 1 - 79 * r35 / 1890}),
               1e-9);
}

TEST(KahlerForm, So34) {
    const double r42 = std::sqrt(42.0), r10 = std::sqrt(10.0);
    auto phi = kahler_subtype(Subtype::B, 7);
    expect_rel(norm_first(phi.native),
               norm_first({3 + r42 * r10 / 90 + r42 / 3780, 2 - r42 * r10 / 90 - r42 / 945,
                           1 - r42 * r10 / 90 + r42 / 756}),
               1e-9);
}

TEST(KahlerForm, G2UnderChosenIdentification) {
    const double r42 = std::sqrt(42.0);
    auto phi = kahler_subtype(Subtype::G2, 7);
    auto cmp = compare_with_reference(phi);
    expect_rel(norm_first(phi.native), norm_first({8 + r42 / 315, 2 - r42 / 210}), 1e-9);
    EXPECT_LE(cmp.max_rel_error, 1e-9);
}

TEST(KahlerForm, ReconstructionIdentity) {
    for (int d = 3; d <= 12; ++d) {
        auto phi = kahler_in_coordinates(d);
        // rescale so that phi(kappa^1) = c_1 * varpi_1(kappa^1)
        const double s = kahler_coefficient(d, 1) * (d - 1) / phi(kostant_vector_closed(d, 1).entries);
        for (int e = 1; e < d; ++e) {
            auto k = kostant_vector_closed(d, e);
            const double want = kahler_coefficient(d, e) * k.entries[0].get_d();
            EXPECT_GT(want, 0);
            EXPECT_NEAR(s * phi(k.entries), want, 1e-12 * want) << d << "," << e;
        }
    }
}

TEST(KahlerForm, SubtypesKillEvenExponents) {
    struct Case { Subtype s; int d; };
    for (auto [s, d] : {Case{Subtype::C, 4}, Case{Subtype::C, 6}, Case{Subtype::C, 8}, Case{Subtype::C, 12},
                        Case{Subtype::B, 5}, Case{Subtype::B, 7}, Case{Subtype::B, 11}, Case{Subtype::G2, 7}}) {
        auto phi = kahler_subtype(s, d);
        double scale = 0;
        for (double x : phi.w) scale = std::max(scale, std::abs(x));
        for (int e = 2; e < d; e += 2) {
            auto k = to_double(kostant_vector_closed(d, e).entries);
            double kn = 0;
            for (double x : k) kn = std::max(kn, std::abs(x));
            EXPECT_NEAR(phi(k) / (scale * kn), 0.0, 1e-12) << to_string(s) << d << " e=" << e;
        }
        if (s == Subtype::G2) {
            auto k = to_double(kostant_vector_closed(7, 3).entries);
            EXPECT_NEAR(phi(k) / (scale * 720), 0.0, 1e-12);
        }
    }
}

TEST(KahlerForm, SubtypeParityErrors) {
    EXPECT_THROW(kahler_subtype(Subtype::C, 5), std::invalid_argument);
    EXPECT_THROW(kahler_subtype(Subtype::B, 6), std::invalid_argument);
    EXPECT_THROW(kahler_subtype(Subtype::G2, 9), std::invalid_argument);
    EXPECT_THROW(kahler_in_coordinates(2), std::invalid_argument);
}
