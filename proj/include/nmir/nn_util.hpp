#pragma once

#include <cmath>
#include <vector>

namespace nmir {

// Stable softmax (max subtraction). Output sums to 1 within 1e-12 for
// |logits| up to ~700.
inline std::vector<double> stable_softmax(const std::vector<double>& logits) {
    double mx = logits[0];
    for (double v : logits) mx = std::max(mx, v);
    std::vector<double> p(logits.size());
    double z = 0.0;
    for (std::size_t i = 0; i < logits.size(); ++i) z += p[i] = std::exp(logits[i] - mx);
    for (double& v : p) v /= z;
    return p;
}

// log softmax(logits)[index], stable form.
inline double log_softmax_at(const std::vector<double>& logits, int index) {
    double mx = logits[0];
    for (double v : logits) mx = std::max(mx, v);
    double z = 0.0;
    for (double v : logits) z += std::exp(v - mx);
    return logits[index] - mx - std::log(z);
}

// Argmax with ties broken toward the lowest index.
inline int argmax_lowest(const std::vector<double>& v) {
    int best = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[best]) best = static_cast<int>(i);
    return best;
}

}  // namespace nmir
