#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace proud {

// Dense row-major shapes; rank 0 is a scalar, rank <= 2 in practice.
using Shape = std::vector<std::size_t>;

std::size_t shape_size(const Shape& s);
std::string shape_str(const Shape& s);

namespace detail {
struct TensorNode;
}

// Value-semantic handle onto a graph node. An operation's result records its
// parents and a backward closure until backward() runs or the handles drop.
class Tensor {
public:
    Tensor() = default;

    static Tensor zeros(Shape shape, bool requires_grad = false);
    static Tensor full(Shape shape, double value, bool requires_grad = false);
    static Tensor from_values(Shape shape, std::vector<double> values, bool requires_grad = false);
    static Tensor scalar(double value, bool requires_grad = false);

    bool defined() const { return node_ != nullptr; }
    const Shape& shape() const;
    std::size_t size() const;
    std::size_t rows() const;  // rank-2 only
    std::size_t cols() const;  // rank-2 only

    std::span<const double> values() const;
    std::span<double> values_mut();  // leaf mutation (initializers, optimizer)
    double item() const;             // size-1 tensors

    bool requires_grad() const;
    // Gradient buffer filled by the latest backward() that reached this node.
    std::span<const double> grad() const;

    // Stable identity used as the GradientMap key.
    const void* id() const;

    // Internal: node access for the ops layer.
    detail::TensorNode* node() const { return node_.get(); }
    explicit Tensor(std::shared_ptr<detail::TensorNode> node) : node_(std::move(node)) {}

private:
    std::shared_ptr<detail::TensorNode> node_;
};

namespace detail {

struct TensorNode {
    Shape shape;
    std::vector<double> values;
    std::vector<double> grad;  // sized on demand during backward
    bool requires_grad = false;
    std::vector<std::shared_ptr<TensorNode>> parents;
    std::function<void(TensorNode&)> backward_fn;
    int topo_mark = 0;
};

}  // namespace detail

// Parameter identity -> dense gradient array of the parameter's shape.
using GradientMap = std::unordered_map<const void*, std::vector<double>>;

// Reverse-mode sweep from a scalar loss. Returns d(loss)/d(p) for every
// reachable requires_grad leaf; accumulation over shared subgraphs follows
// the sum rule. Throws ShapeError if loss is not a scalar.
GradientMap backward(const Tensor& loss);

// Graph recording switch; evaluation paths disable it to skip node bookkeeping.
bool grad_enabled();

class NoGradGuard {
public:
    NoGradGuard();
    ~NoGradGuard();
    NoGradGuard(const NoGradGuard&) = delete;
    NoGradGuard& operator=(const NoGradGuard&) = delete;

private:
    bool prev_;
};

// SGD with momentum and weight decay over a fixed parameter set.
// step() applies: v <- momentum*v + grad + weight_decay*p; p <- p - lr*v.
class Sgd {
public:
    Sgd(std::vector<Tensor> params, double lr, double momentum, double weight_decay);

    void step(const GradientMap& grads);
    const std::vector<Tensor>& params() const { return params_; }

private:
    std::vector<Tensor> params_;
    std::vector<std::vector<double>> velocity_;
    double lr_;
    double momentum_;
    double weight_decay_;
};

}  // namespace proud
