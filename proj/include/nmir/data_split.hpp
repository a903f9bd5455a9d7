#pragma once

#include <cstdint>
#include <vector>

#include "nmir/expert.hpp"

namespace nmir {

struct RecordSplit {
    std::vector<long> train;
    std::vector<long> heldout;
};

// Deterministic episode-level train/held-out split: a seeded permutation
// picks held-out episodes, record lists are then expanded in episode
// order. Splitting by episode keeps in-episode correlation out of the
// held-out metrics.
inline RecordSplit split_by_episode(const Dataset& data, double heldout_fraction,
                                    std::uint64_t seed) {
    const int n = data.n_episodes();
    int heldout_count = static_cast<int>(heldout_fraction * n + 0.5);
    if (heldout_count >= n) heldout_count = n - 1;
    if (heldout_count < 0) heldout_count = 0;
    std::vector<bool> heldout_flag(n, false);
    Rng rng(seed);
    const std::vector<int> perm = rng.permutation(n);
    for (int i = 0; i < heldout_count; ++i) heldout_flag[perm[i]] = true;
    RecordSplit split;
    for (int e = 0; e < n; ++e) {
        auto [lo, hi] = data.episode_range(e);
        auto& dst = heldout_flag[e] ? split.heldout : split.train;
        for (long i = lo; i < hi; ++i) dst.push_back(i);
    }
    return split;
}

}  // namespace nmir
