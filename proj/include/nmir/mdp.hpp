#pragma once

#include <vector>

#include "nmir/env.hpp"

namespace nmir {

// Explicit tabular MDP. transition is indexed [state][action][next_state]
// flattened row-major; reward is over states.
struct MDPModel {
    int n_states = 0;
    int n_actions = 0;
    std::vector<double> transition;
    std::vector<double> initial_dist;
    std::vector<double> reward;
    double discount = 0.95;

    double p(int s, int a, int sn) const {
        return transition[(static_cast<long>(s) * n_actions + a) * n_states + sn];
    }
    double& p_ref(int s, int a, int sn) {
        return transition[(static_cast<long>(s) * n_actions + a) * n_states + sn];
    }

    // Checks stochasticity of every transition row and the initial
    // distribution to 1e-12, and discount in [0, 1).
    void validate() const;
};

// Builds the explicit (P, D, R) for a gridworld spec; matches env_step
// semantics exactly (the goal is absorbing). State index = row * cols + col.
// Throws ConfigError for the partially observable T-maze.
MDPModel tabular_build(const EnvSpec& spec, double discount = 0.95);

struct ValueIterationResult {
    std::vector<double> values;
    std::vector<int> policy;  // greedy action per state, ties to lowest id
    int sweeps = 0;
};

// Iterates Bellman sweeps until the values are within tol of the fixed
// point (sup-norm contraction bound). tol must be positive.
ValueIterationResult value_iteration(const MDPModel& mdp, double tol = 1e-10,
                                     int max_sweeps = 100000);

// Q(s, a) under a given value function, reward-on-current-state convention.
double q_value(const MDPModel& mdp, const std::vector<double>& values, int s, int a);

}  // namespace nmir
