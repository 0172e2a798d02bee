#include "planar/corpus.hpp"

#include <random>

namespace planar {

namespace {

void validate(const CorpusSpec& spec) {
    if (spec.min_n < 1 || spec.max_n < spec.min_n) throw std::invalid_argument("bad n range");
    if (spec.mode == CorpusMode::ExhaustiveLabeled && spec.max_n > 7)
        throw std::invalid_argument("exhaustive mode is limited to max_n <= 7");
    if (spec.mode == CorpusMode::RandomSample && spec.sample_size < 0)
        throw std::invalid_argument("negative sample size");
}

std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

}  // namespace

void generate(const CorpusSpec& spec, const std::function<void(const Graph&)>& sink) {
    validate(spec);
    if (spec.mode == CorpusMode::ExhaustiveLabeled) {
        for (int n = spec.min_n; n <= spec.max_n; ++n) {
            auto pairs = all_pairs(n);
            std::uint64_t span = std::uint64_t{1} << pairs.size();
            for (std::uint64_t mask = 0; mask < span; ++mask) {
                std::vector<std::pair<int, int>> edges;
                for (std::size_t i = 0; i < pairs.size(); ++i)
                    if ((mask >> i) & 1) edges.push_back(pairs[i]);
                Graph g(n, std::move(edges));
                if (is_connected(g)) sink(g);
            }
        }
        return;
    }

    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<int> pick_n(spec.min_n, spec.max_n);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < spec.sample_size; ++i) {
        int n = pick_n(rng);
        auto pairs = all_pairs(n);
        for (;;) {
            double p = unit(rng);
            std::vector<std::pair<int, int>> edges;
            for (auto& pr : pairs)
                if (unit(rng) < p) edges.push_back(pr);
            Graph g(n, std::move(edges));
            if (is_connected(g)) {
                sink(g);
                break;
            }
        }
    }
}

}  // namespace planar
