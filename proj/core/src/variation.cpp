#include "klines/variation.hpp"

#include "klines/parallel.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cctype>
#include <random>
#include <stdexcept>

namespace klines {

std::vector<Generator> random_generators(int d, int count, std::uint64_t seed, double scale) {
    if (d < 2 || count < 1) throw std::invalid_argument("random_generators: need d >= 2 and count >= 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    auto traceless = [&](double s) {
        Mat A(d, d);
        for (Eigen::Index i = 0; i < A.size(); ++i) A(i) = s * normal(rng);
        A -= (A.trace() / d) * Mat::Identity(d, d);
        return A;
    };
    std::vector<Generator> gens;
    for (int i = 0; i < count; ++i) {
        Mat rho = traceless(scale).exp();
        gens.push_back({rho, traceless(1.0)});
    }
    return gens;
}

std::vector<Generator> coboundary_generators(const std::vector<Mat>& rho, const Mat& X) {
    std::vector<Generator> gens;
    for (const auto& g : rho) gens.push_back({g, X - g * X * g.inverse()});
    return gens;
}

namespace {

std::size_t letter_index(char c, std::size_t count) {
    const std::size_t i = static_cast<std::size_t>(std::tolower(static_cast<unsigned char>(c)) - 'a');
    if (!std::isalpha(static_cast<unsigned char>(c)) || i >= count)
        throw std::invalid_argument(std::string("unknown generator letter '") + c + "'");
    return i;
}

Generator letter(const std::vector<Generator>& gens, char c) {
    const Generator& s = gens[letter_index(c, gens.size())];
    if (std::islower(static_cast<unsigned char>(c))) return s;
    const Mat inv = s.rho.inverse();
    return {inv, -(inv * s.u * s.rho)};
}

Generator extend(const Generator& w, const Generator& s) {
    return {w.rho * s.rho, w.u + w.rho * s.u * w.rho.inverse()};
}

char inverse_letter(char c) {
    return std::islower(static_cast<unsigned char>(c)) ? static_cast<char>(std::toupper(static_cast<unsigned char>(c)))
                                                        : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

}  // namespace

Generator evaluate_word(const std::vector<Generator>& generators, const std::string& word) {
    if (generators.empty()) throw std::invalid_argument("evaluate_word: no generators");
    const Eigen::Index d = generators.front().rho.rows();
    Generator w{Mat::Identity(d, d), Mat::Zero(d, d)};
    for (char c : word) w = extend(w, letter(generators, c));
    return w;
}

VariationCone sample_variation_cone(const std::vector<Generator>& generators, int word_len, unsigned workers) {
    if (generators.empty() || generators.size() > 26)
        throw std::invalid_argument("sample_variation_cone: need between 1 and 26 generators");
    if (word_len < 1) throw std::invalid_argument("sample_variation_cone: word_len must be >= 1");
    std::string alphabet;
    for (std::size_t i = 0; i < generators.size(); ++i) alphabet += static_cast<char>('a' + i);
    for (std::size_t i = 0; i < generators.size(); ++i) alphabet += static_cast<char>('A' + i);

    struct Partial {
        std::vector<std::vector<VariationSample>> by_length;
        std::size_t skipped = 0;
    };
    auto parts = parallel_map(alphabet.size(), workers, [&](std::size_t first) {
        Partial p;
        p.by_length.resize(word_len);
        // depth-first over reduced words starting with alphabet[first]
        struct Frame {
            std::string word;
            Generator value;
        };
        std::vector<Frame> stack{{std::string(1, alphabet[first]), letter(generators, alphabet[first])}};
        while (!stack.empty()) {
            Frame f = std::move(stack.back());
            stack.pop_back();
            try {
                const SpectralData s = spectral_data(f.value.rho);
                if (!s.loxodromic || !s.basis) throw std::domain_error("not loxodromic");
                p.by_length[f.word.size() - 1].push_back(
                    {f.word, jordan_projection(f.value.rho), margulis_a_part(f.value.rho, f.value.u)});
            } catch (const std::domain_error&) {
                ++p.skipped;
            }
            if (static_cast<int>(f.word.size()) == word_len) continue;
            for (auto it = alphabet.rbegin(); it != alphabet.rend(); ++it) {
                if (*it == inverse_letter(f.word.back())) continue;
                stack.push_back({f.word + *it, extend(f.value, letter(generators, *it))});
            }
        }
        return p;
    });
    VariationCone cone;
    for (int len = 0; len < word_len; ++len) {
        std::vector<VariationSample> layer;
        for (auto& p : parts) layer.insert(layer.end(), p.by_length[len].begin(), p.by_length[len].end());
        std::sort(layer.begin(), layer.end(), [](const auto& a, const auto& b) { return a.word < b.word; });
        for (auto& s : layer) cone.samples.push_back(std::move(s));
    }
    for (auto& p : parts) cone.skipped += p.skipped;
    return cone;
}

}  // namespace klines
