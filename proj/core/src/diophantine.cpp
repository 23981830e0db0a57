#include "klines/diophantine.hpp"

#include "klines/errors.hpp"
#include "klines/lie.hpp"
#include "klines/parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace klines {

std::vector<SingularTriple> singular_scan(int d_max, unsigned workers) {
    if (d_max < 3) throw std::invalid_argument("singular_scan: d_max must be >= 3");
    const std::size_t count = static_cast<std::size_t>(d_max - 2);
    // Larger d first keeps the pool busy; results are re-sorted anyway.
    auto per_d = parallel_map(count, workers, [&](std::size_t i) {
        const int d = d_max - static_cast<int>(i);
        std::vector<SingularTriple> found;
        for (int e = 1; e <= d - 1; ++e) {
            KostantVector k = kostant_vector_closed(d, e);
            for (int j = 1; j <= d - 1; ++j) {
                Integer diff = k.entries[j - 1] - k.entries[j];
                if (diff != simple_root_closed(d, e, j))
                    throw VerificationError("singular_scan: sigma_j disagreement at (" +
                                            std::to_string(d) + "," + std::to_string(e) + "," +
                                            std::to_string(j) + ")");
                if (diff == 0) found.push_back({d, e, j});
            }
        }
        return found;
    });
    std::vector<SingularTriple> all;
    for (auto& v : per_d) all.insert(all.end(), v.begin(), v.end());
    std::sort(all.begin(), all.end());
    return all;
}

std::string to_string(Family f) {
    switch (f) {
        case Family::I: return "i";
        case Family::II: return "ii";
        case Family::III: return "iii";
        case Family::IV: return "iv";
        case Family::V: return "v";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    for (Family f : {Family::I, Family::II, Family::III, Family::IV, Family::V})
        if (to_string(f) == s) return f;
    throw std::invalid_argument("unknown family '" + s + "' (expected i, ii, iii, iv or v)");
}

namespace {

void push_verified(std::vector<FamilyMember>& out, Family f, int d, int e, int j, int k = -1) {
    if (simple_root_on_kostant(d, e, j) != 0)
        throw VerificationError("family " + to_string(f) + " member (" + std::to_string(d) + "," +
                                std::to_string(e) + "," + std::to_string(j) +
                                ") is not singular");
    out.push_back({f, {d, e, j}, k});
}

// (d, j) -> M^k (d0, j0) with M = [[a, b], [1, -1]], while d <= bound.
template <class Emit>
void orbit(long a, long b, long d0, long j0, int bound, Emit emit) {
    long d = d0, j = j0;
    for (int k = 0; d <= bound; ++k) {
        emit(static_cast<int>(d), static_cast<int>(j), k);
        long nd = a * d + b * j, nj = d - j;
        if (nd <= d) throw std::logic_error("orbit: sequence not increasing");
        d = nd;
        j = nj;
    }
}

}  // namespace

std::vector<FamilyMember> family_members(Family family, int bound) {
    if (bound < 1) throw std::invalid_argument("family_members: bound must be >= 1");
    std::vector<FamilyMember> out;
    switch (family) {
        case Family::I:
            for (int n = 2; 2 * n <= bound; ++n)
                for (int e = 2; e <= 2 * n - 1; e += 2) push_verified(out, family, 2 * n, e, n);
            break;
        case Family::II:
            for (int e = 2; 1 + e * (e + 1) / 2 <= bound; ++e)
                push_verified(out, family, 1 + e * (e + 1) / 2, e, 2);
            break;
        case Family::III:
            for (int m = 1; 4 * m + 3 <= bound; ++m) push_verified(out, family, 4 * m + 3, 2 * m + 1, 2 * m);
            break;
        case Family::IV:
            orbit(4, -5, 7, 2, bound, [&](int d, int j, int k) {
                if (q3(d, j) != 1)
                    throw VerificationError("family iv: q3(d,j) != 1 at d=" + std::to_string(d));
                push_verified(out, family, d, 3, j, k);
            });
            break;
        case Family::V:
            orbit(6, -7, 11, 2, bound, [&](int d, int j, int k) { push_verified(out, family, d, 4, j, k); });
            orbit(6, -7, 17, 3, bound, [&](int d, int j, int k) { push_verified(out, family, d, 4, j, k); });
            std::stable_sort(out.begin(), out.end(),
                             [](const auto& a, const auto& b) { return a.triple < b.triple; });
            break;
    }
    return out;
}

Integer q3(const Integer& d, const Integer& j) { return -d * d + 5 * d * j - 5 * j * j; }

Integer sigma3_poly(const Integer& d, const Integer& e) {
    const Integer e2 = e * e;
    return e2 * e2 - 6 * d * e2 + 2 * e2 * e + 6 * d * d - 6 * d * e + 11 * e2 - 18 * d + 10 * e + 12;
}

Integer quartic_rhs(const Integer& x) {
    const Integer x2 = x * x;
    return 3 * (x2 * x2 + 2 * x2 * x - x2 - 2 * x + 3);
}

Rational quartic_rhs(const Rational& x) {
    const Rational x2 = x * x;
    return Rational(3) * (x2 * x2 + Rational(2) * x2 * x - x2 - Rational(2) * x + Rational(3));
}

std::vector<QuarticSolution> quartic_solutions(long e_max, unsigned workers) {
    if (e_max < 0) throw std::invalid_argument("quartic_solutions: e_max must be >= 0");
    const long total = e_max + 1;
    const long chunk = 1 << 14;
    const std::size_t chunks = static_cast<std::size_t>((total + chunk - 1) / chunk);
    auto parts = parallel_map(chunks, workers, [&](std::size_t c) {
        std::vector<QuarticSolution> found;
        const long lo = static_cast<long>(c) * chunk, hi = std::min(total, lo + chunk);
        Integer f, y;
        for (long e = lo; e < hi; ++e) {
            f = quartic_rhs(Integer(e));
            if (!mpz_perfect_square_p(f.get_mpz_t())) continue;
            mpz_sqrt(y.get_mpz_t(), f.get_mpz_t());
            QuarticSolution s{e, y, std::nullopt, std::nullopt};
            const Integer base = 3 * (Integer(e) * e + e + 3);  // 6 * (e^2+e+3)/2
            for (int sign : {1, -1}) {
                Integer num = base + sign * y;
                if (mpz_divisible_ui_p(num.get_mpz_t(), 6)) {
                    Integer d = num / 6;
                    (sign > 0 ? s.d_plus : s.d_minus) = d;
                }
            }
            found.push_back(std::move(s));
        }
        return found;
    });
    std::vector<QuarticSolution> all;
    for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    return all;
}

}  // namespace klines
