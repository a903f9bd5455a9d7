#include "nmir/expert.hpp"

#include <cmath>
#include <string>

#include "nmir/rng.hpp"

namespace nmir {

namespace {
// Block side used for the channel-0 memory coding.
constexpr int kBlockSide = 4;
}  // namespace

ExpertState expert_tick(const ExpertState& h, const Observation& obs) {
    ExpertState next = h;
    // T-maze observations carry the cue signal in feature 2; other
    // environments have none.
    if (obs.features.size() >= 3 && next.cue == 0.0 && obs.features[2] != 0.0)
        next.cue = obs.features[2] > 0.0 ? 1.0 : -1.0;
    next.counter = h.counter + 1;
    return next;
}

Action expert_act(const EnvState& env, const ExpertState& h, const Observation& obs) {
    if (env.spec.kind == EnvKind::t_maze) {
        const bool at_junction = obs.features.size() >= 2 && obs.features[1] != 0.0;
        if (!at_junction) return {kForward};
        return {h.cue > 0.0 ? kTurnRight : kTurnLeft};
    }
    const int dr = env.spec.goal_row - env.row;
    const int dc = env.spec.goal_col - env.col;
    if (dr < 0) return {kUp};
    if (dr > 0) return {kDown};
    if (dc < 0) return {kLeft};
    return {kRight};
}

BrainScan render_scan(const ExpertState& h, const ScanConfig& cfg) {
    cfg.validate();
    const int block_rows = cfg.height / kBlockSide;
    const int block_cols = cfg.width / kBlockSide;
    if (block_rows * block_cols < ExpertState::kMemorySlots)
        throw ConfigError("render_scan: " + std::to_string(ExpertState::kMemorySlots) +
                          " memory slots but only " + std::to_string(block_rows * block_cols) +
                          " blocks available in a " + std::to_string(cfg.height) + "x" +
                          std::to_string(cfg.width) + " scan");
    const int k = cfg.levels;
    BrainScan scan(cfg);
    auto block_level = [&](int slot) -> int {
        if (slot == 0) {
            if (h.cue < 0.0) return 0;
            if (h.cue > 0.0) return k - 1;
            return k / 2;
        }
        return static_cast<int>(h.counter % k);
    };
    for (int slot = 0; slot < ExpertState::kMemorySlots; ++slot) {
        const int br = slot / block_cols;
        const int bc = slot % block_cols;
        const int level = block_level(slot);
        for (int r = 0; r < kBlockSide; ++r)
            for (int c = 0; c < kBlockSide; ++c)
                scan.at(br * kBlockSide + r, bc * kBlockSide + c, 0) =
                    static_cast<std::uint8_t>(level);
    }
    const long phase = h.counter % k;
    for (int r = 0; r < cfg.height; ++r) {
        for (int c = 0; c < cfg.width; ++c) {
            if (cfg.channels >= 2)
                scan.at(r, c, 1) = static_cast<std::uint8_t>((r + phase) % k);
            if (cfg.channels >= 3)
                scan.at(r, c, 2) = static_cast<std::uint8_t>((c + 2 * phase) % k);
        }
    }
    return scan;
}

Dataset collect_dataset(const EnvSpec& spec, int episodes, const ScanConfig& cfg,
                        std::uint64_t seed, int max_steps_per_episode) {
    spec.validate();
    cfg.validate();
    if (episodes < 1) throw ConfigError("collect_dataset: need at least one episode");
    std::vector<std::vector<Record>> per_episode(episodes);
#pragma omp parallel for schedule(dynamic)
    for (int e = 0; e < episodes; ++e) {
        auto [state, obs] = env_reset(spec, mix_seed(seed, static_cast<std::uint64_t>(e)));
        ExpertState h;
        h = expert_tick(h, obs);
        BrainScan scan = render_scan(h, cfg);
        std::vector<Record>& out = per_episode[e];
        for (int step = 0; step < max_steps_per_episode; ++step) {
            const Action a = expert_act(state, h, obs);
            StepResult sr = env_step(state, a);
            const ExpertState h_next = expert_tick(h, sr.obs);
            BrainScan scan_next = render_scan(h_next, cfg);
            out.push_back({obs, scan, a, sr.obs, scan_next, sr.done});
            state = sr.state;
            obs = sr.obs;
            h = h_next;
            scan = std::move(scan_next);
            if (sr.done) break;
        }
    }
    Dataset ds;
    ds.env_spec = spec;
    ds.scan_config = cfg;
    ds.seed = seed;
    for (int e = 0; e < episodes; ++e) {
        ds.episode_starts.push_back(static_cast<std::int64_t>(ds.records.size()));
        for (Record& r : per_episode[e]) ds.records.push_back(std::move(r));
    }
    return ds;
}

}  // namespace nmir
