#pragma once

#include <vector>

#include "nmir/params.hpp"

namespace nmir {

struct AdamConfig {
    double learning_rate = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

// Adaptive-moment optimizer with bias correction. Updates walk parameters
// in store order and elements in index order; two runs with the same
// gradients produce bit-identical parameters.
class Adam {
public:
    Adam() = default;
    explicit Adam(AdamConfig cfg) : cfg_(cfg) {}

    // Applies one update from ps's gradient buffers. Throws TrainError
    // naming the parameter if a gradient is non-finite.
    void step(ParamStore& ps);

    const AdamConfig& config() const { return cfg_; }
    long step_count() const { return step_; }

    // Checkpoint access.
    std::vector<Tensor>& first_moments() { return m_; }
    std::vector<Tensor>& second_moments() { return v_; }
    const std::vector<Tensor>& first_moments() const { return m_; }
    const std::vector<Tensor>& second_moments() const { return v_; }
    void restore(std::vector<Tensor> m, std::vector<Tensor> v, long step) {
        m_ = std::move(m);
        v_ = std::move(v);
        step_ = step;
    }

private:
    AdamConfig cfg_;
    std::vector<Tensor> m_;
    std::vector<Tensor> v_;
    long step_ = 0;
};

}  // namespace nmir
