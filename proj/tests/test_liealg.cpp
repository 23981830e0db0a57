#include "klines/errors.hpp"
#include "klines/combinatorics.hpp"
#include "klines/lie.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace klines;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v, long scale = 1) {
    std::vector<Integer> out;
    for (long x : v) out.emplace_back(Integer(x) * scale);
    return out;
}

Integer from128(oracle::i128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    Integer r = static_cast<unsigned long>(u >> 64);
    r <<= 64;
    r += static_cast<unsigned long>(u & 0xffffffffffffffffULL);
    return neg ? Integer(-r) : r;
}

}  // namespace

TEST(PrincipalTriple, Relations) {
    for (int d = 2; d <= 9; ++d) {
        auto t = principal_triple(d);
        EXPECT_EQ(bracket(t.H, t.E), t.E * Rational(2));
        EXPECT_EQ(bracket(t.H, t.F), t.F * Rational(-2));
        EXPECT_EQ(bracket(t.E, t.F), t.H);
    }
    EXPECT_THROW(principal_triple(1), std::invalid_argument);
}

TEST(PrincipalTriple, Examples) {
    auto t4 = principal_triple(4);
    EXPECT_EQ(t4.H.diag(), (std::vector<Rational>{3, 1, -1, -3}));
    auto t2 = principal_triple(2);
    EXPECT_EQ(t2.F(1, 0), Rational(1));
    EXPECT_EQ(t2.F(0, 1), Rational(0));
    auto t5 = principal_triple(5);
    std::vector<Rational> sub;
    for (int i = 0; i < 4; ++i) sub.push_back(t5.F(i + 1, i));
    EXPECT_EQ(sub, (std::vector<Rational>{4, 6, 6, 4}));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (i != j + 1) EXPECT_TRUE(t5.F(i, j).is_zero());
}

TEST(Kostant, Examples) {
    EXPECT_EQ(kostant_vector_bracket(3, 2).entries, ints({4, -8, 4}));
    EXPECT_EQ(kostant_vector_bracket(4, 3).entries, ints({1, -3, 3, -1}, 36));
    EXPECT_EQ(kostant_vector_closed(7, 3).entries, ints({1, -1, -1, 0, 1, 1, -1}, 720));
    EXPECT_EQ(kostant_vector_closed(8, 7).entries, ints({1, -7, 21, -35, 35, -21, 7, -1}, 25401600));
    // f(1)f(2)f(3)f(4) times alternating binomials
    EXPECT_EQ(kostant_vector_closed(5, 4).entries, ints({1, -4, 6, -4, 1}, 4 * 6 * 6 * 4));
    for (int d = 2; d <= 9; ++d) {
        std::vector<Integer> h;
        for (int i = 0; i < d; ++i) h.emplace_back(d - 1 - 2 * i);
        EXPECT_EQ(kostant_vector_bracket(d, 1).entries, h);
    }
    EXPECT_THROW(kostant_vector_bracket(4, 0), std::out_of_range);
    EXPECT_THROW(kostant_vector_closed(4, 4), std::out_of_range);
}

TEST(Kostant, PublishedTable) {
    for (const auto& [key, row] : oracle::kostant_table()) {
        const auto [d, e] = key;
        std::vector<Integer> expect;
        for (long long x : row.primitive) expect.emplace_back(Integer(static_cast<long>(x)) * static_cast<long>(row.scalar));
        EXPECT_EQ(kostant_vector_bracket(d, e).entries, expect) << d << "," << e;
        EXPECT_EQ(kostant_vector_closed(d, e).entries, expect) << d << "," << e;
    }
}

TEST(Kostant, PositionSumOracle) {
    for (int d = 2; d <= 14; ++d)
        for (int e = 1; e < d; ++e) {
            auto o = oracle::kostant_by_positions(d, e);
            std::vector<Integer> expect;
            for (auto v : o) expect.push_back(from128(v));
            EXPECT_EQ(kostant_vector_closed(d, e).entries, expect) << d << "," << e;
        }
}

TEST(Kostant, TwoConstructionsAgree) {
    for (int d = 2; d <= 12; ++d)
        for (int e = 1; e < d; ++e) EXPECT_EQ(kostant_vector_bracket(d, e), kostant_vector_closed(d, e));
}

TEST(Kostant, StructuralLaws) {
    for (int d = 2; d <= 12; ++d) {
        std::vector<KostantVector> ks;
        for (int e = 1; e < d; ++e) ks.push_back(kostant_vector_closed(d, e));
        for (const auto& k : ks) {
            Integer sum = 0;
            for (const auto& x : k.entries) sum += x;
            EXPECT_EQ(sum, 0);
            auto rev = k.entries;
            std::reverse(rev.begin(), rev.end());
            for (int i = 0; i < d; ++i) EXPECT_EQ(rev[i], k.e % 2 ? Integer(-k.entries[i]) : k.entries[i]);
            EXPECT_EQ(k.entries[0], factorial(k.e) * falling_factorial(Integer(d - 1), k.e));
            EXPECT_EQ(weight1_on_kostant(d, k.e), k.entries[0]);
        }
        for (std::size_t a = 0; a < ks.size(); ++a)
            for (std::size_t b = a + 1; b < ks.size(); ++b) {
                Integer dot = 0;
                for (int i = 0; i < d; ++i) dot += ks[a].entries[i] * ks[b].entries[i];
                EXPECT_EQ(dot, 0) << d << ": " << a + 1 << "," << b + 1;
            }
    }
}

TEST(Kostant, PrimitiveAndContent) {
    auto k = kostant_vector_closed(6, 3);
    EXPECT_EQ(k.primitive(), ints({5, -7, -4, 4, 7, -5}));
    EXPECT_EQ(k.content(), 72);
}

TEST(SimpleRoot, Examples) {
    EXPECT_EQ(simple_root_on_kostant(4, 2, 2), 0);
    EXPECT_EQ(simple_root_on_kostant(7, 3, 2), 0);
    for (int d = 2; d <= 30; ++d)
        for (int j = 1; j < d; ++j) EXPECT_NE(simple_root_on_kostant(d, d - 1, j), 0) << d << "," << j;
}

TEST(SimpleRoot, ClosedFormMatchesDifferences) {
    for (int d = 2; d <= 12; ++d)
        for (int e = 1; e < d; ++e) {
            auto k = kostant_vector_bracket(d, e);
            for (int j = 1; j < d; ++j) {
                EXPECT_EQ(simple_root_closed(d, e, j), k.entries[j - 1] - k.entries[j]);
                EXPECT_EQ(simple_root(d, j)(k.entries), Rational(Integer(k.entries[j - 1] - k.entries[j])));
            }
        }
}

TEST(Weight, Examples) {
    EXPECT_EQ(weight1_on_kostant(4, 2), 12);
    for (int d = 2; d <= 10; ++d) EXPECT_EQ(weight1_on_kostant(d, 1), d - 1);
    EXPECT_EQ(weight1_on_kostant(6, 5), 14400);
    EXPECT_EQ(first_fundamental_weight(5)(ints({4, 2, 0, -2, -4})), Rational(4));
}

TEST(Exponents, Table) {
    EXPECT_EQ(exponents(RootType::A, 4).exponents, (std::vector<int>{1, 2, 3, 4}));
    auto d4 = exponents(RootType::D, 4).exponents;
    std::sort(d4.begin(), d4.end());
    EXPECT_EQ(d4, (std::vector<int>{1, 3, 3, 5}));
    EXPECT_EQ(exponents(RootType::G2, 2).exponents, (std::vector<int>{1, 5}));
    EXPECT_EQ(exponents(RootType::B, 3).exponents, (std::vector<int>{1, 3, 5}));
    EXPECT_EQ(exponents(RootType::C, 3).exponents, (std::vector<int>{1, 3, 5}));
    EXPECT_EQ(exponents(RootType::E6, 6).exponents, (std::vector<int>{1, 4, 5, 7, 8, 11}));
    EXPECT_EQ(exponents(RootType::E8, 8).exponents.size(), 8u);
    EXPECT_EQ(exponents(RootType::F4, 4).exponents, (std::vector<int>{1, 5, 7, 11}));
    for (int r = 1; r <= 9; ++r) EXPECT_EQ(exponents(RootType::A, r).exponents.size(), std::size_t(r));
    EXPECT_THROW(exponents(RootType::G2, 3), std::invalid_argument);
    EXPECT_THROW(exponents(RootType::D, 2), std::invalid_argument);
    EXPECT_EQ(parse_root_type("g2"), RootType::G2);
    EXPECT_THROW(parse_root_type("H3"), std::invalid_argument);
}

TEST(ShiftedBracket, Coefficients) {
    auto f = [](long d, long i) { return i * (d - i); };
    for (int d = 6; d <= 12; ++d) {
        for (int k = 2; k <= d - 4; ++k) {
            // coefficient at pi^{1,k+3} of E^{k+2} equals c
            EXPECT_EQ(shifted_bracket_check(d, 3, k), Rational(-6 * k)) << d << "," << k;
        }
        EXPECT_EQ(shifted_bracket_check(d, 3, d - 3), Rational(-2 * f(d, 3)));
    }
    EXPECT_THROW(shifted_bracket_check(5, 3, 3), std::out_of_range);
    for (int d = 4; d <= 9; ++d)
        for (int e = 2; e < d; ++e)
            for (int k = 2; k < d && e + k - 1 <= d - 1; ++k) EXPECT_NO_THROW(shifted_bracket_check(d, e, k));
}

TEST(TypeD, Triality) {
    auto t = triality(4);
    EXPECT_EQ(t.transpose() * t, ExactMatrix::identity(4));
    auto data = typeD_data(4);
    ASSERT_TRUE(data.triality_image);
    Rational h(Integer(1), Integer(2));
    EXPECT_EQ(*data.triality_image, (std::vector<Rational>{-h, h, h, -h}));
    EXPECT_EQ(typeD_data(5).antifixed_line, (std::vector<Rational>{0, 0, 0, 0, 1}));
    EXPECT_FALSE(typeD_data(5).triality);
    EXPECT_THROW(triality(5), std::invalid_argument);
    EXPECT_THROW(typeD_data(2), std::invalid_argument);
}

TEST(Subtypes, AdjointFactorSplit) {
    using P = std::vector<std::vector<int>>;
    EXPECT_EQ(adjoint_factor_split(Subtype::C, 4), (P{{1, 3}, {2}}));
    EXPECT_EQ(adjoint_factor_split(Subtype::G2, 7), (P{{1, 5}, {3}, {2, 4, 6}}));
    EXPECT_EQ(adjoint_factor_split(Subtype::B, 7), (P{{1, 3, 5}, {2, 4, 6}}));
    EXPECT_THROW(adjoint_factor_split(Subtype::C, 5), std::invalid_argument);
    EXPECT_THROW(adjoint_factor_split(Subtype::B, 6), std::invalid_argument);
    EXPECT_THROW(adjoint_factor_split(Subtype::G2, 5), std::invalid_argument);
}

TEST(Subtypes, KostantParityLaw) {
    for (int d = 2; d <= 12; ++d)
        for (int e = 1; e < d; ++e) {
            auto k = kostant_vector_closed(d, e);
            for (int j = 0; j < d; ++j) {
                const auto& mirror = k.entries[d - 1 - j];
                EXPECT_EQ(k.entries[j], e % 2 ? Integer(-mirror) : mirror);
            }
        }
}
