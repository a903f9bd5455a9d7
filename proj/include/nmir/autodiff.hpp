#pragma once

#include <vector>

#include "nmir/params.hpp"
#include "nmir/tensor.hpp"

namespace nmir {

// Reverse-mode tape. A graph is recorded per training step (sequence
// lengths vary across tasks), backward() runs once over it in reverse
// creation order, and parameter gradients are accumulated into the
// ParamStore in node creation order.
class Tape {
public:
    using NodeId = int;

    // Leaves.
    NodeId input(Tensor value);
    NodeId param(const ParamStore& ps, int param_index);

    // Ops.
    NodeId matmul(NodeId a, NodeId b);
    NodeId add(NodeId a, NodeId b);
    NodeId add_bias(NodeId x, NodeId bias);
    NodeId mul(NodeId a, NodeId b);
    NodeId relu(NodeId x);
    NodeId tanh(NodeId x);
    NodeId sigmoid(NodeId x);
    NodeId concat_cols(NodeId a, NodeId b);
    NodeId embedding(NodeId table, std::vector<int> ids);
    // Per-row cross-entropy -log softmax(logits)[target]; returns a (rows)
    // vector node. Computed with max subtraction.
    NodeId softmax_xent(NodeId logits, std::vector<int> targets);
    NodeId sum(NodeId x);
    NodeId scale(NodeId x, double factor);

    const Tensor& value(NodeId id) const { return nodes_[id].value; }
    // Valid after backward().
    const Tensor& grad(NodeId id) const { return nodes_[id].grad; }

    // Seeds d(loss)/d(loss) = 1, propagates through the recorded graph and
    // adds parameter gradients into ps. loss must be a scalar node.
    void backward(NodeId loss, ParamStore& ps);

    int size() const { return static_cast<int>(nodes_.size()); }

private:
    enum class Op {
        kInput,
        kParam,
        kMatmul,
        kAdd,
        kAddBias,
        kMul,
        kRelu,
        kTanh,
        kSigmoid,
        kConcatCols,
        kEmbedding,
        kSoftmaxXent,
        kSum,
        kScale,
    };

    struct Node {
        Op op;
        Tensor value;
        Tensor grad;
        NodeId args[2] = {-1, -1};
        std::vector<int> aux_ids;  // embedding ids / xent targets
        Tensor aux;                // cached softmax for xent
        double factor = 0.0;       // scale
        int param_index = -1;
    };

    NodeId push(Node n) {
        nodes_.push_back(std::move(n));
        return static_cast<int>(nodes_.size()) - 1;
    }

    void backprop_node(Node& n);

    std::vector<Node> nodes_;
};

}  // namespace nmir
