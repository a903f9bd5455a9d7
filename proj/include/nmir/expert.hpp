#pragma once

#include <cstdint>
#include <vector>

#include "nmir/env.hpp"
#include "nmir/scan.hpp"

namespace nmir {

// Deterministic hidden state of the scripted demonstrator. Slot 0 latches
// the cue, slot 1 counts perceived observations; both are rendered into
// the scan.
struct ExpertState {
    double cue = 0.0;  // -1, 0 or +1
    long counter = 0;

    static constexpr int kMemorySlots = 2;
};

// h_{t+1} = g(h_t, x_t): latches the first nonzero cue signal forever and
// increments the counter. Total function.
ExpertState expert_tick(const ExpertState& h, const Observation& obs);

// Scripted optimal behavior: forward in the corridor and the cue-matching
// turn at the junction; greedy shortest-path moves in the gridworld with
// ties to the lowest action id.
Action expert_act(const EnvState& env, const ExpertState& h, const Observation& obs);

// Renders the hidden state into a scan. Channel 0 carries one 4x4 block
// per memory slot (cue block: -1 -> 0, 0 -> K/2, +1 -> K-1; counter block:
// counter mod K); channels 1 and 2 carry stripe textures that shift with
// the counter. Pure function of (h, cfg).
BrainScan render_scan(const ExpertState& h, const ScanConfig& cfg);

// One suit-phase step: everything the policy and generator train on.
struct Record {
    Observation obs;
    BrainScan scan;
    Action action;
    Observation obs_next;
    BrainScan scan_next;
    bool done = false;
};

struct Dataset {
    EnvSpec env_spec;
    ScanConfig scan_config;
    std::uint64_t seed = 0;
    std::vector<Record> records;
    // First record index of each episode; episode e spans
    // [episode_starts[e], episode_starts[e+1]) with the last one running to
    // the end.
    std::vector<std::int64_t> episode_starts;

    int n_episodes() const { return static_cast<int>(episode_starts.size()); }
    std::pair<long, long> episode_range(int e) const {
        const long lo = episode_starts[e];
        const long hi = e + 1 < n_episodes() ? episode_starts[e + 1]
                                             : static_cast<long>(records.size());
        return {lo, hi};
    }
};

// Runs the expert for `episodes` episodes, recording
// (x_t, F_t, u_t, x_{t+1}, F_{t+1}) per step. The scan at time t reflects
// the expert's memory after perceiving x_t, before acting. Episodes use
// independent seed streams and are collected in parallel; output order is
// by episode index, so the result is deterministic given (spec, seed).
Dataset collect_dataset(const EnvSpec& spec, int episodes, const ScanConfig& cfg,
                        std::uint64_t seed, int max_steps_per_episode = 1000);

}  // namespace nmir
