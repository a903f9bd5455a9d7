#include "nmir/mdp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nmir/kernels.hpp"

namespace nmir {

void MDPModel::validate() const {
    if (n_states <= 0 || n_actions <= 0) throw ConfigError("MDPModel: empty state/action sets");
    if (discount < 0.0 || discount >= 1.0)
        throw ConfigError("MDPModel: discount must lie in [0, 1)");
    for (int s = 0; s < n_states; ++s) {
        for (int a = 0; a < n_actions; ++a) {
            double sum = 0.0;
            for (int sn = 0; sn < n_states; ++sn) {
                const double v = p(s, a, sn);
                if (v < 0.0) throw ConfigError("MDPModel: negative transition probability");
                sum += v;
            }
            if (std::fabs(sum - 1.0) > 1e-12)
                throw ConfigError("MDPModel: transition row (" + std::to_string(s) + ", " +
                                  std::to_string(a) + ") sums to " + std::to_string(sum));
        }
    }
    double dsum = 0.0;
    for (double v : initial_dist) {
        if (v < 0.0) throw ConfigError("MDPModel: negative initial probability");
        dsum += v;
    }
    if (std::fabs(dsum - 1.0) > 1e-12)
        throw ConfigError("MDPModel: initial distribution sums to " + std::to_string(dsum));
}

MDPModel tabular_build(const EnvSpec& spec, double discount) {
    if (spec.kind != EnvKind::gridworld)
        throw ConfigError("tabular_build: only the fully observable gridworld is tabular");
    spec.validate();
    MDPModel mdp;
    mdp.n_states = spec.rows * spec.cols;
    mdp.n_actions = spec.n_actions();
    mdp.discount = discount;
    mdp.transition.assign(static_cast<long>(mdp.n_states) * mdp.n_actions * mdp.n_states, 0.0);
    mdp.initial_dist.assign(mdp.n_states, 0.0);
    mdp.reward.assign(mdp.n_states, 0.0);
    const int goal = spec.goal_row * spec.cols + spec.goal_col;
    mdp.initial_dist[spec.start_row * spec.cols + spec.start_col] = 1.0;
    mdp.reward[goal] = 1.0;
    for (int r = 0; r < spec.rows; ++r) {
        for (int c = 0; c < spec.cols; ++c) {
            const int s = r * spec.cols + c;
            for (int a = 0; a < mdp.n_actions; ++a) {
                if (s == goal) {
                    mdp.p_ref(s, a, s) = 1.0;  // absorbing
                    continue;
                }
                int nr = r, nc = c;
                switch (a) {
                    case kUp: nr -= 1; break;
                    case kDown: nr += 1; break;
                    case kLeft: nc -= 1; break;
                    case kRight: nc += 1; break;
                }
                if (nr < 0 || nr >= spec.rows || nc < 0 || nc >= spec.cols) {
                    nr = r;
                    nc = c;
                }
                mdp.p_ref(s, a, nr * spec.cols + nc) = 1.0;
            }
        }
    }
    return mdp;
}

ValueIterationResult value_iteration(const MDPModel& mdp, double tol, int max_sweeps) {
    if (tol <= 0.0) throw ConfigError("value_iteration: tol must be positive");
    mdp.validate();
    ValueIterationResult r;
    r.values.assign(mdp.n_states, 0.0);
    r.policy.assign(mdp.n_states, 0);
    std::vector<double> next(mdp.n_states, 0.0);
    // Stop when one more sweep moves values by less than this; the
    // contraction bound then puts the result within tol of the fixed point.
    const double stop =
        mdp.discount > 0.0 ? tol * (1.0 - mdp.discount) / mdp.discount : tol;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        kernels::bellman_sweep(mdp.transition.data(), mdp.reward.data(), mdp.discount,
                               r.values.data(), mdp.n_states, mdp.n_actions, next.data(),
                               r.policy.data());
        double delta = 0.0;
        for (int s = 0; s < mdp.n_states; ++s)
            delta = std::max(delta, std::fabs(next[s] - r.values[s]));
        r.values.swap(next);
        r.sweeps = sweep + 1;
        if (delta <= stop) return r;
    }
    return r;
}

double q_value(const MDPModel& mdp, const std::vector<double>& values, int s, int a) {
    double acc = 0.0;
    for (int sn = 0; sn < mdp.n_states; ++sn) acc += mdp.p(s, a, sn) * values[sn];
    return mdp.reward[s] + mdp.discount * acc;
}

}  // namespace nmir
