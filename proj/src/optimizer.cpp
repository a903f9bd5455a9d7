#include "nmir/optimizer.hpp"

#include <cmath>

#include "nmir/errors.hpp"

namespace nmir {

void Adam::step(ParamStore& ps) {
    if (m_.empty()) {
        for (int i = 0; i < ps.size(); ++i) {
            m_.emplace_back(Tensor::zeros(ps.value(i).shape));
            v_.emplace_back(Tensor::zeros(ps.value(i).shape));
        }
    }
    ++step_;
    const double bc1 = 1.0 - std::pow(cfg_.beta1, static_cast<double>(step_));
    const double bc2 = 1.0 - std::pow(cfg_.beta2, static_cast<double>(step_));
    for (int i = 0; i < ps.size(); ++i) {
        Tensor& p = ps.value(i);
        const Tensor& g = ps.grad(i);
        Tensor& m = m_[i];
        Tensor& v = v_[i];
        for (long j = 0; j < p.numel(); ++j) {
            const double gj = g.data[j];
            if (!std::isfinite(gj))
                throw TrainError("non-finite gradient in parameter " + ps.name(i));
            m.data[j] = cfg_.beta1 * m.data[j] + (1.0 - cfg_.beta1) * gj;
            v.data[j] = cfg_.beta2 * v.data[j] + (1.0 - cfg_.beta2) * gj * gj;
            const double mhat = m.data[j] / bc1;
            const double vhat = v.data[j] / bc2;
            p.data[j] -= cfg_.learning_rate * mhat / (std::sqrt(vhat) + cfg_.epsilon);
        }
    }
}

}  // namespace nmir
