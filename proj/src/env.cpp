#include "nmir/env.hpp"

#include <string>

#include "nmir/rng.hpp"

namespace nmir {

void EnvSpec::validate() const {
    if (kind == EnvKind::t_maze) {
        if (corridor_length < 1)
            throw ConfigError("t_maze: corridor_length must be >= 1, got " +
                              std::to_string(corridor_length));
        if (cue_probability < 0.0 || cue_probability > 1.0)
            throw ConfigError("t_maze: cue_probability must lie in [0, 1]");
    } else {
        if (rows < 2 || cols < 2)
            throw ConfigError("gridworld: dimensions must be >= 2, got " + std::to_string(rows) +
                              "x" + std::to_string(cols));
        if (start_row < 0 || start_row >= rows || start_col < 0 || start_col >= cols)
            throw ConfigError("gridworld: start cell out of bounds");
        if (goal_row < 0 || goal_row >= rows || goal_col < 0 || goal_col >= cols)
            throw ConfigError("gridworld: goal cell out of bounds");
        if (start_row == goal_row && start_col == goal_col)
            throw ConfigError("gridworld: start and goal must differ");
    }
}

Observation observe(const EnvState& s) {
    Observation o;
    if (s.spec.kind == EnvKind::t_maze) {
        const double l = static_cast<double>(s.spec.corridor_length);
        o.features = {static_cast<double>(s.position) / l,
                      s.position == s.spec.corridor_length ? 1.0 : 0.0,
                      s.t == 0 ? static_cast<double>(s.cue) : 0.0};
    } else {
        o.features = {static_cast<double>(s.row) / (s.spec.rows - 1),
                      static_cast<double>(s.col) / (s.spec.cols - 1)};
    }
    return o;
}

std::pair<EnvState, Observation> env_reset(const EnvSpec& spec, std::uint64_t seed) {
    spec.validate();
    EnvState s;
    s.spec = spec;
    if (spec.kind == EnvKind::t_maze) {
        Rng rng(seed);
        s.cue = rng.uniform() < spec.cue_probability ? +1 : -1;
        s.position = 0;
    } else {
        s.row = spec.start_row;
        s.col = spec.start_col;
    }
    return {s, observe(s)};
}

StepResult env_step(const EnvState& state, Action action) {
    if (state.done) throw UsageError("env_step: episode already finished");
    if (action.id < 0 || action.id >= state.spec.n_actions())
        throw UsageError("env_step: action id " + std::to_string(action.id) + " out of range");
    StepResult r;
    r.state = state;
    r.state.t = state.t + 1;
    if (state.spec.kind == EnvKind::t_maze) {
        if (state.position < state.spec.corridor_length) {
            // One cell wide: every action moves down the corridor.
            r.state.position = state.position + 1;
        } else if (action.id == kTurnLeft || action.id == kTurnRight) {
            const int turn = action.id == kTurnRight ? +1 : -1;
            r.state.done = true;
            r.reward = turn == state.cue ? 1.0 : 0.0;
        }
        // Forward at the junction faces a wall: position unchanged.
    } else {
        int nr = state.row, nc = state.col;
        switch (action.id) {
            case kUp: nr -= 1; break;
            case kDown: nr += 1; break;
            case kLeft: nc -= 1; break;
            case kRight: nc += 1; break;
        }
        if (nr >= 0 && nr < state.spec.rows && nc >= 0 && nc < state.spec.cols) {
            r.state.row = nr;
            r.state.col = nc;
        }
        if (r.state.row == state.spec.goal_row && r.state.col == state.spec.goal_col) {
            r.state.done = true;
            r.reward = 1.0;
        }
    }
    r.done = r.state.done;
    r.obs = observe(r.state);
    return r;
}

}  // namespace nmir
