#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "nmir/tensor.hpp"

namespace nmir {

// Named parameter tensors with stable insertion order and one gradient
// buffer per parameter. The order fixes every gradient-accumulation and
// optimizer loop, which is what makes training bit-deterministic.
class ParamStore {
public:
    int add(const std::string& name, Tensor init) {
        if (index_.count(name)) throw UsageError("ParamStore: duplicate parameter " + name);
        index_[name] = static_cast<int>(names_.size());
        names_.push_back(name);
        grads_.emplace_back(Tensor::zeros(init.shape));
        values_.push_back(std::move(init));
        return static_cast<int>(names_.size()) - 1;
    }

    int index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw UsageError("ParamStore: unknown parameter " + name);
        return it->second;
    }

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[i]; }
    Tensor& value(int i) { return values_[i]; }
    const Tensor& value(int i) const { return values_[i]; }
    Tensor& value(const std::string& name) { return values_[index_of(name)]; }
    const Tensor& value(const std::string& name) const { return values_[index_of(name)]; }
    Tensor& grad(int i) { return grads_[i]; }
    const Tensor& grad(int i) const { return grads_[i]; }
    Tensor& grad(const std::string& name) { return grads_[index_of(name)]; }

    void zero_grads() {
        for (Tensor& g : grads_)
            for (double& x : g.data) x = 0.0;
    }

private:
    std::vector<std::string> names_;
    std::vector<Tensor> values_;
    std::vector<Tensor> grads_;
    std::unordered_map<std::string, int> index_;
};

}  // namespace nmir
