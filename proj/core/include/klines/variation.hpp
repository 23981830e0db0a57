#pragma once

#include "klines/affine.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace klines {

// rho(s) and the cocycle value u(s) on a free generator s.
struct Generator {
    Mat rho;
    Mat u;
};

// count generators in SL(d): exp of a random traceless matrix with entries
// N(0, scale^2); cocycle values traceless N(0, 1).
std::vector<Generator> random_generators(int d, int count, std::uint64_t seed, double scale = 0.35);

// u(s) = X - Ad(rho(s)) X, so that every word gets u(w) = X - Ad(rho(w)) X.
std::vector<Generator> coboundary_generators(const std::vector<Mat>& rho, const Mat& X);

struct VariationSample {
    std::string word;  // letters a, b, ...; inverses upper case
    Vec lambda;        // Jordan projection of rho(word)
    Vec dlambda;       // a-part of the Margulis invariant of (rho(word), u(word))
};

struct VariationCone {
    std::vector<VariationSample> samples;  // ordered by (length, word)
    std::size_t skipped = 0;               // non-loxodromic words
};

// (rho, u) on a word, with u(wh) = u(w) + Ad(rho(w)) u(h) and
// u(s^{-1}) = -Ad(rho(s)^{-1}) u(s). Letters as in VariationSample::word.
Generator evaluate_word(const std::vector<Generator>& generators, const std::string& word);

// All nonempty reduced words of length <= word_len. Parallel over the first
// letter; the merge is deterministic.
VariationCone sample_variation_cone(const std::vector<Generator>& generators, int word_len, unsigned workers = 1);

}  // namespace klines
