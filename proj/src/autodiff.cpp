#include "nmir/autodiff.hpp"

#include <cmath>
#include <string>

#include "nmir/kernels.hpp"

namespace nmir {

Tape::NodeId Tape::input(Tensor value) {
    Node n;
    n.op = Op::kInput;
    n.value = std::move(value);
    return push(std::move(n));
}

Tape::NodeId Tape::param(const ParamStore& ps, int param_index) {
    Node n;
    n.op = Op::kParam;
    n.value = ps.value(param_index);
    n.param_index = param_index;
    return push(std::move(n));
}

Tape::NodeId Tape::matmul(NodeId a, NodeId b) {
    const Tensor& ta = nodes_[a].value;
    const Tensor& tb = nodes_[b].value;
    if (ta.shape.size() != 2 || tb.shape.size() != 2 || ta.cols() != tb.rows())
        throw ShapeError("matmul: incompatible shapes " + ta.shape_str() + " vs " +
                         tb.shape_str());
    Node n;
    n.op = Op::kMatmul;
    n.args[0] = a;
    n.args[1] = b;
    n.value = Tensor::zeros({ta.rows(), tb.cols()});
    kernels::matmul(ta.data.data(), tb.data.data(), n.value.data.data(), ta.rows(), ta.cols(),
                    tb.cols());
    return push(std::move(n));
}

Tape::NodeId Tape::add(NodeId a, NodeId b) {
    const Tensor& ta = nodes_[a].value;
    const Tensor& tb = nodes_[b].value;
    check_same_shape(ta, tb, "add");
    Node n;
    n.op = Op::kAdd;
    n.args[0] = a;
    n.args[1] = b;
    n.value = ta;
    for (long i = 0; i < n.value.numel(); ++i) n.value.data[i] += tb.data[i];
    return push(std::move(n));
}

Tape::NodeId Tape::add_bias(NodeId x, NodeId bias) {
    const Tensor& tx = nodes_[x].value;
    const Tensor& tb = nodes_[bias].value;
    if (tb.numel() != tx.cols())
        throw ShapeError("add_bias: bias " + tb.shape_str() + " does not match columns of " +
                         tx.shape_str());
    Node n;
    n.op = Op::kAddBias;
    n.args[0] = x;
    n.args[1] = bias;
    n.value = tx;
    const int rows = tx.rows(), cols = tx.cols();
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) n.value.at(r, c) += tb.data[c];
    return push(std::move(n));
}

Tape::NodeId Tape::mul(NodeId a, NodeId b) {
    const Tensor& ta = nodes_[a].value;
    const Tensor& tb = nodes_[b].value;
    check_same_shape(ta, tb, "mul");
    Node n;
    n.op = Op::kMul;
    n.args[0] = a;
    n.args[1] = b;
    n.value = ta;
    for (long i = 0; i < n.value.numel(); ++i) n.value.data[i] *= tb.data[i];
    return push(std::move(n));
}

Tape::NodeId Tape::relu(NodeId x) {
    Node n;
    n.op = Op::kRelu;
    n.args[0] = x;
    n.value = nodes_[x].value;
    for (double& v : n.value.data)
        if (v < 0.0) v = 0.0;
    return push(std::move(n));
}

Tape::NodeId Tape::tanh(NodeId x) {
    Node n;
    n.op = Op::kTanh;
    n.args[0] = x;
    n.value = nodes_[x].value;
    for (double& v : n.value.data) v = std::tanh(v);
    return push(std::move(n));
}

Tape::NodeId Tape::sigmoid(NodeId x) {
    Node n;
    n.op = Op::kSigmoid;
    n.args[0] = x;
    n.value = nodes_[x].value;
    for (double& v : n.value.data) v = 1.0 / (1.0 + std::exp(-v));
    return push(std::move(n));
}

Tape::NodeId Tape::concat_cols(NodeId a, NodeId b) {
    const Tensor& ta = nodes_[a].value;
    const Tensor& tb = nodes_[b].value;
    if (ta.rows() != tb.rows())
        throw ShapeError("concat_cols: row mismatch " + ta.shape_str() + " vs " + tb.shape_str());
    Node n;
    n.op = Op::kConcatCols;
    n.args[0] = a;
    n.args[1] = b;
    const int rows = ta.rows(), ca = ta.cols(), cb = tb.cols();
    n.value = Tensor::zeros({rows, ca + cb});
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < ca; ++c) n.value.at(r, c) = ta.at(r, c);
        for (int c = 0; c < cb; ++c) n.value.at(r, ca + c) = tb.at(r, c);
    }
    return push(std::move(n));
}

Tape::NodeId Tape::embedding(NodeId table, std::vector<int> ids) {
    const Tensor& tt = nodes_[table].value;
    if (tt.shape.size() != 2) throw ShapeError("embedding: table must be rank 2");
    const int vocab = tt.rows(), dim = tt.cols();
    Node n;
    n.op = Op::kEmbedding;
    n.args[0] = table;
    n.value = Tensor::zeros({static_cast<int>(ids.size()), dim});
    for (std::size_t r = 0; r < ids.size(); ++r) {
        const int id = ids[r];
        if (id < 0 || id >= vocab)
            throw UsageError("embedding: id " + std::to_string(id) + " out of range [0, " +
                             std::to_string(vocab) + ")");
        for (int c = 0; c < dim; ++c) n.value.at(static_cast<int>(r), c) = tt.at(id, c);
    }
    n.aux_ids = std::move(ids);
    return push(std::move(n));
}

Tape::NodeId Tape::softmax_xent(NodeId logits, std::vector<int> targets) {
    const Tensor& tl = nodes_[logits].value;
    const int rows = tl.rows(), classes = tl.cols();
    if (static_cast<int>(targets.size()) != rows)
        throw ShapeError("softmax_xent: " + std::to_string(targets.size()) + " targets for " +
                         tl.shape_str() + " logits");
    Node n;
    n.op = Op::kSoftmaxXent;
    n.args[0] = logits;
    n.value = Tensor::zeros({rows});
    n.aux = Tensor::zeros({rows, classes});
    for (int r = 0; r < rows; ++r) {
        const int t = targets[r];
        if (t < 0 || t >= classes)
            throw UsageError("softmax_xent: target " + std::to_string(t) + " out of range");
        double mx = tl.at(r, 0);
        for (int c = 1; c < classes; ++c) mx = std::max(mx, tl.at(r, c));
        double z = 0.0;
        for (int c = 0; c < classes; ++c) z += std::exp(tl.at(r, c) - mx);
        const double logz = std::log(z);
        for (int c = 0; c < classes; ++c) n.aux.at(r, c) = std::exp(tl.at(r, c) - mx) / z;
        n.value.data[r] = -(tl.at(r, t) - mx - logz);
    }
    n.aux_ids = std::move(targets);
    return push(std::move(n));
}

Tape::NodeId Tape::sum(NodeId x) {
    Node n;
    n.op = Op::kSum;
    n.args[0] = x;
    double acc = 0.0;
    for (double v : nodes_[x].value.data) acc += v;
    n.value = Tensor::scalar(acc);
    return push(std::move(n));
}

Tape::NodeId Tape::scale(NodeId x, double factor) {
    Node n;
    n.op = Op::kScale;
    n.args[0] = x;
    n.factor = factor;
    n.value = nodes_[x].value;
    for (double& v : n.value.data) v *= factor;
    return push(std::move(n));
}

void Tape::backprop_node(Node& n) {
    Tensor& g = n.grad;
    switch (n.op) {
        case Op::kInput:
        case Op::kParam:
            break;
        case Op::kMatmul: {
            Node& a = nodes_[n.args[0]];
            Node& b = nodes_[n.args[1]];
            const int m = a.value.rows(), k = a.value.cols(), cols = b.value.cols();
            kernels::matmul_bt(g.data.data(), b.value.data.data(), a.grad.data.data(), m, cols,
                               k);
            kernels::matmul_at(a.value.data.data(), g.data.data(), b.grad.data.data(), m, k,
                               cols);
            break;
        }
        case Op::kAdd: {
            Tensor& ga = nodes_[n.args[0]].grad;
            Tensor& gb = nodes_[n.args[1]].grad;
            for (long i = 0; i < g.numel(); ++i) {
                ga.data[i] += g.data[i];
                gb.data[i] += g.data[i];
            }
            break;
        }
        case Op::kAddBias: {
            Tensor& gx = nodes_[n.args[0]].grad;
            Tensor& gb = nodes_[n.args[1]].grad;
            const int rows = g.rows(), cols = g.cols();
            for (long i = 0; i < g.numel(); ++i) gx.data[i] += g.data[i];
            for (int r = 0; r < rows; ++r)
                for (int c = 0; c < cols; ++c) gb.data[c] += g.at(r, c);
            break;
        }
        case Op::kMul: {
            Node& a = nodes_[n.args[0]];
            Node& b = nodes_[n.args[1]];
            for (long i = 0; i < g.numel(); ++i) {
                a.grad.data[i] += g.data[i] * b.value.data[i];
                b.grad.data[i] += g.data[i] * a.value.data[i];
            }
            break;
        }
        case Op::kRelu: {
            Node& a = nodes_[n.args[0]];
            // Subgradient at 0 is 0.
            for (long i = 0; i < g.numel(); ++i)
                if (a.value.data[i] > 0.0) a.grad.data[i] += g.data[i];
            break;
        }
        case Op::kTanh: {
            Tensor& gx = nodes_[n.args[0]].grad;
            for (long i = 0; i < g.numel(); ++i)
                gx.data[i] += g.data[i] * (1.0 - n.value.data[i] * n.value.data[i]);
            break;
        }
        case Op::kSigmoid: {
            Tensor& gx = nodes_[n.args[0]].grad;
            for (long i = 0; i < g.numel(); ++i)
                gx.data[i] += g.data[i] * n.value.data[i] * (1.0 - n.value.data[i]);
            break;
        }
        case Op::kConcatCols: {
            Node& a = nodes_[n.args[0]];
            Node& b = nodes_[n.args[1]];
            const int rows = g.rows(), ca = a.value.cols(), cb = b.value.cols();
            for (int r = 0; r < rows; ++r) {
                for (int c = 0; c < ca; ++c) a.grad.at(r, c) += g.at(r, c);
                for (int c = 0; c < cb; ++c) b.grad.at(r, c) += g.at(r, ca + c);
            }
            break;
        }
        case Op::kEmbedding: {
            Tensor& gt = nodes_[n.args[0]].grad;
            const int dim = g.cols();
            for (std::size_t r = 0; r < n.aux_ids.size(); ++r)
                for (int c = 0; c < dim; ++c)
                    gt.at(n.aux_ids[r], c) += g.at(static_cast<int>(r), c);
            break;
        }
        case Op::kSoftmaxXent: {
            Tensor& gl = nodes_[n.args[0]].grad;
            const int rows = n.aux.rows(), classes = n.aux.cols();
            for (int r = 0; r < rows; ++r) {
                const double gr = g.data[r];
                for (int c = 0; c < classes; ++c) {
                    double d = n.aux.at(r, c);
                    if (c == n.aux_ids[r]) d -= 1.0;
                    gl.at(r, c) += gr * d;
                }
            }
            break;
        }
        case Op::kSum: {
            Tensor& gx = nodes_[n.args[0]].grad;
            const double gr = g.data[0];
            for (long i = 0; i < gx.numel(); ++i) gx.data[i] += gr;
            break;
        }
        case Op::kScale: {
            Tensor& gx = nodes_[n.args[0]].grad;
            for (long i = 0; i < g.numel(); ++i) gx.data[i] += n.factor * g.data[i];
            break;
        }
    }
}

void Tape::backward(NodeId loss, ParamStore& ps) {
    if (nodes_[loss].value.numel() != 1)
        throw UsageError("backward: loss must be scalar, got " +
                         nodes_[loss].value.shape_str());
    for (Node& n : nodes_) n.grad = Tensor::zeros(n.value.shape);
    nodes_[loss].grad.data[0] = 1.0;
    for (int i = loss; i >= 0; --i) backprop_node(nodes_[i]);
    for (const Node& n : nodes_) {
        if (n.op != Op::kParam) continue;
        Tensor& g = ps.grad(n.param_index);
        for (long i = 0; i < g.numel(); ++i) g.data[i] += n.grad.data[i];
    }
}

}  // namespace nmir
