#pragma once

#include <cstdint>
#include <vector>

#include "nmir/errors.hpp"

namespace nmir {

enum class EnvKind : int { t_maze = 0, gridworld = 1 };

// T-maze action ids.
inline constexpr int kForward = 0;
inline constexpr int kTurnLeft = 1;
inline constexpr int kTurnRight = 2;

// Gridworld action ids (tie-breaks everywhere use this order).
inline constexpr int kUp = 0;
inline constexpr int kDown = 1;
inline constexpr int kLeft = 2;
inline constexpr int kRight = 3;

struct EnvSpec {
    EnvKind kind = EnvKind::t_maze;
    // T-maze.
    int corridor_length = 5;
    double cue_probability = 0.5;  // P(cue = +1, i.e. right)
    // Gridworld.
    int rows = 4;
    int cols = 4;
    int start_row = 0;
    int start_col = 0;
    int goal_row = 3;
    int goal_col = 3;
    std::uint64_t seed = 0;

    void validate() const;
    int n_actions() const { return kind == EnvKind::t_maze ? 3 : 4; }
    int obs_dim() const { return kind == EnvKind::t_maze ? 3 : 2; }
};

struct Observation {
    std::vector<double> features;
};

struct Action {
    int id = 0;
};

// Concrete environment state. Episodes are deterministic given the reset;
// the only stochasticity is the initial cue draw in the T-maze.
struct EnvState {
    EnvSpec spec;
    // T-maze: position in [0, L], position L is the junction.
    int position = 0;
    int cue = 0;  // -1 left, +1 right
    // Gridworld.
    int row = 0;
    int col = 0;
    int t = 0;
    bool done = false;
};

// Samples the initial state from D and returns its observation.
// Deterministic given (spec, seed).
std::pair<EnvState, Observation> env_reset(const EnvSpec& spec, std::uint64_t seed);

Observation observe(const EnvState& state);

struct StepResult {
    EnvState state;
    Observation obs;
    bool done = false;
    double reward = 0.0;
};

// Applies the deterministic dynamics. The T-maze terminates at the
// junction turn with reward 1 iff the turn matches the initial cue; the
// gridworld terminates at the goal with reward 1. Throws UsageError when
// stepping a finished episode.
StepResult env_step(const EnvState& state, Action action);

}  // namespace nmir
