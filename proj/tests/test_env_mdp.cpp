#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "nmir/kernels.hpp"
#include "nmir/mdp.hpp"
#include "nmir/rng.hpp"

using namespace nmir;

namespace {

EnvSpec tmaze_spec(int length) {
    EnvSpec s;
    s.kind = EnvKind::t_maze;
    s.corridor_length = length;
    return s;
}

EnvSpec grid_spec(int rows, int cols) {
    EnvSpec s;
    s.kind = EnvKind::gridworld;
    s.rows = rows;
    s.cols = cols;
    s.goal_row = rows - 1;
    s.goal_col = cols - 1;
    return s;
}

// Exact policy evaluation: V = (I - gamma * P_pi)^-1 R.
std::vector<double> evaluate_policy(const MDPModel& mdp, const std::vector<int>& policy) {
    const int n = mdp.n_states;
    std::vector<double> a(static_cast<long>(n) * n, 0.0);
    for (int s = 0; s < n; ++s) {
        a[static_cast<long>(s) * n + s] = 1.0;
        for (int sn = 0; sn < n; ++sn)
            a[static_cast<long>(s) * n + sn] -= mdp.discount * mdp.p(s, policy[s], sn);
    }
    return kernels::solve_linear(std::move(a), mdp.reward, n);
}

}  // namespace

TEST_CASE("env_reset is deterministic given spec and seed") {
    auto [s1, o1] = env_reset(tmaze_spec(3), 7);
    auto [s2, o2] = env_reset(tmaze_spec(3), 7);
    CHECK(s1.cue == s2.cue);
    CHECK(o1.features == o2.features);
}

TEST_CASE("gridworld observation encodes the start position") {
    auto [state, obs] = env_reset(grid_spec(3, 3), 0);
    CHECK(obs.features == std::vector<double>{0.0, 0.0});
    CHECK(state.row == 0);
    CHECK(state.col == 0);
}

TEST_CASE("t-maze cue frequency over 10000 seeds is near one half") {
    const EnvSpec spec = tmaze_spec(4);
    int right = 0;
    for (int seed = 0; seed < 10000; ++seed) {
        auto [state, obs] = env_reset(spec, static_cast<std::uint64_t>(seed));
        if (state.cue > 0) ++right;
    }
    const double freq = right / 10000.0;
    CHECK(freq > 0.47);
    CHECK(freq < 0.53);
}

TEST_CASE("gridworld moves into walls leave the position unchanged") {
    auto [state, obs] = env_reset(grid_spec(3, 3), 0);
    auto r = env_step(state, {kUp});
    CHECK(r.state.row == 0);
    CHECK(r.state.col == 0);
    CHECK_FALSE(r.done);
}

TEST_CASE("junction turn matching the cue terminates with reward one") {
    EnvSpec spec = tmaze_spec(2);
    std::uint64_t seed = 0;
    while (true) {  // find a left-cue episode
        auto [state, obs] = env_reset(spec, seed);
        if (state.cue == -1) break;
        ++seed;
    }
    auto [state, obs] = env_reset(spec, seed);
    StepResult r{state, obs, false, 0.0};
    for (int i = 0; i < spec.corridor_length; ++i) r = env_step(r.state, {kForward});
    CHECK(r.state.position == spec.corridor_length);
    CHECK(r.obs.features[1] == 1.0);
    r = env_step(r.state, {kTurnLeft});
    CHECK(r.done);
    CHECK(r.reward == 1.0);
}

TEST_CASE("exactly L forward steps reach the junction") {
    const EnvSpec spec = tmaze_spec(5);
    auto [state, obs] = env_reset(spec, 3);
    for (int i = 0; i < 5; ++i) {
        CHECK(observe(state).features[1] == 0.0);
        state = env_step(state, {kForward}).state;
    }
    CHECK(observe(state).features[1] == 1.0);
}

TEST_CASE("stepping a finished episode is a usage error") {
    auto [state, obs] = env_reset(tmaze_spec(1), 1);
    auto r = env_step(state, {kForward});
    r = env_step(r.state, {kTurnLeft});
    CHECK(r.done);
    CHECK_THROWS_AS(env_step(r.state, {kForward}), UsageError);
}

TEST_CASE("invalid specs are configuration errors") {
    EnvSpec bad = tmaze_spec(0);
    CHECK_THROWS_AS(env_reset(bad, 0), ConfigError);
    EnvSpec grid = grid_spec(1, 5);
    CHECK_THROWS_AS(env_reset(grid, 0), ConfigError);
}

TEST_CASE("tabular_build produces stochastic deterministic rows") {
    const MDPModel mdp = tabular_build(grid_spec(2, 2));
    CHECK(mdp.n_states == 4);
    CHECK(mdp.n_actions == 4);
    mdp.validate();  // row sums within 1e-12
    for (double v : mdp.transition) CHECK((v == 0.0 || v == 1.0));
}

TEST_CASE("tabular_build rejects the partially observable t-maze") {
    CHECK_THROWS_AS(tabular_build(tmaze_spec(3)), ConfigError);
}

TEST_CASE("simulated steps agree with the transition matrix everywhere") {
    const EnvSpec spec = grid_spec(4, 5);
    const MDPModel mdp = tabular_build(spec);
    Rng rng(99);
    auto [state, obs] = env_reset(spec, 0);
    for (int i = 0; i < 1000; ++i) {
        if (state.done) {
            state = env_reset(spec, rng.next_u64()).first;
            continue;
        }
        const int s = state.row * spec.cols + state.col;
        const Action a{rng.uniform_int(mdp.n_actions)};
        auto r = env_step(state, a);
        const int sn = r.state.row * spec.cols + r.state.col;
        CHECK(mdp.p(s, a.id, sn) == 1.0);
        state = r.state;
    }
}

TEST_CASE("single state single action has the geometric-series value") {
    MDPModel mdp;
    mdp.n_states = 1;
    mdp.n_actions = 1;
    mdp.transition = {1.0};
    mdp.initial_dist = {1.0};
    mdp.reward = {1.0};
    mdp.discount = 0.9;
    auto r = value_iteration(mdp, 1e-10);
    CHECK(r.values[0] == doctest::Approx(10.0).epsilon(1e-9));
}

TEST_CASE("value iteration rejects nonpositive tolerance") {
    MDPModel mdp = tabular_build(grid_spec(2, 2));
    CHECK_THROWS_AS(value_iteration(mdp, 0.0), ConfigError);
}

TEST_CASE("all-zero reward gives zero values and action zero everywhere") {
    MDPModel mdp = tabular_build(grid_spec(3, 3));
    for (double& r : mdp.reward) r = 0.0;
    auto r = value_iteration(mdp, 1e-10);
    for (double v : r.values) CHECK(v == 0.0);
    for (int a : r.policy) CHECK(a == 0);
}

TEST_CASE("greedy policy matches brute-force enumeration on the 3x3 gridworld") {
    const MDPModel mdp = tabular_build(grid_spec(3, 3));
    const int n = mdp.n_states;

    // Oracle: enumerate all 4^9 deterministic policies, evaluate each
    // exactly, and take the pointwise best value function.
    std::vector<double> best(n, -1e300);
    long total = 1;
    for (int s = 0; s < n; ++s) total *= mdp.n_actions;
    std::vector<int> policy(n, 0);
    for (long code = 0; code < total; ++code) {
        long rem = code;
        for (int s = 0; s < n; ++s) {
            policy[s] = static_cast<int>(rem % mdp.n_actions);
            rem /= mdp.n_actions;
        }
        const auto v = evaluate_policy(mdp, policy);
        for (int s = 0; s < n; ++s) best[s] = std::max(best[s], v[s]);
    }

    auto vi = value_iteration(mdp, 1e-9);
    for (int s = 0; s < n; ++s) CHECK(vi.values[s] == doctest::Approx(best[s]).epsilon(1e-6));
    // Lowest-id argmax against the oracle values must match the solver's
    // greedy policy.
    for (int s = 0; s < n; ++s) {
        int best_a = 0;
        double best_q = -1e300;
        for (int a = 0; a < mdp.n_actions; ++a) {
            const double q = q_value(mdp, best, s, a);
            if (q > best_q + 1e-9) {
                best_q = q;
                best_a = a;
            }
        }
        CHECK(vi.policy[s] == best_a);
    }
}

TEST_CASE("sweeps from the known lower bound are monotone non-decreasing") {
    const MDPModel mdp = tabular_build(grid_spec(3, 4));
    double lo = mdp.reward[0];
    for (double r : mdp.reward) lo = std::min(lo, r);
    std::vector<double> v(mdp.n_states, lo / (1.0 - mdp.discount));
    std::vector<double> next(mdp.n_states);
    for (int sweep = 0; sweep < 200; ++sweep) {
        kernels::bellman_sweep(mdp.transition.data(), mdp.reward.data(), mdp.discount, v.data(),
                               mdp.n_states, mdp.n_actions, next.data(), nullptr);
        for (int s = 0; s < mdp.n_states; ++s) CHECK(next[s] >= v[s] - 1e-12);
        v.swap(next);
    }
}
