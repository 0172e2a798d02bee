#pragma once

#include <cstdint>
#include <functional>

#include "planar/graph.hpp"

namespace planar {

enum class CorpusMode { ExhaustiveLabeled, RandomSample };

struct CorpusSpec {
    int min_n = 1;
    int max_n = 6;
    CorpusMode mode = CorpusMode::ExhaustiveLabeled;
    int sample_size = 0;       // random mode only
    std::uint64_t seed = 0;    // random mode only
};

// Streams connected graphs. Exhaustive mode: every labeled graph on
// min_n..max_n vertices that is connected, in deterministic order. Random
// mode: sample_size connected graphs, n uniform in [min_n, max_n] and edge
// probability uniform per attempt; deterministic under seed.
void generate(const CorpusSpec& spec, const std::function<void(const Graph&)>& sink);

}  // namespace planar
