#include "nmir/tensor.hpp"

#include <cmath>

namespace nmir {

Tensor Tensor::uniform_fan_in(std::vector<int> s, int fan_in, Rng& rng) {
    Tensor t(std::move(s));
    const double limit = 1.0 / std::sqrt(static_cast<double>(fan_in));
    for (double& x : t.data) x = rng.uniform(-limit, limit);
    return t;
}

void check_same_shape(const Tensor& a, const Tensor& b, const char* op) {
    if (!a.same_shape(b))
        throw ShapeError(std::string(op) + ": shape mismatch " + a.shape_str() + " vs " +
                         b.shape_str());
}

}  // namespace nmir
