#include "proud/tensor.hpp"

#include <algorithm>
#include <sstream>

#include "proud/errors.hpp"
#include "proud/kernels.hpp"

namespace proud {

std::size_t shape_size(const Shape& s) {
    std::size_t n = 1;
    for (std::size_t d : s) n *= d;
    return n;
}

std::string shape_str(const Shape& s) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) os << 'x';
        os << s[i];
    }
    os << ']';
    return os.str();
}

namespace {

thread_local bool g_grad_enabled = true;

std::shared_ptr<detail::TensorNode> make_node(Shape shape, std::vector<double> values, bool rg) {
    auto node = std::make_shared<detail::TensorNode>();
    node->shape = std::move(shape);
    node->values = std::move(values);
    node->requires_grad = rg;
    return node;
}

}  // namespace

bool grad_enabled() { return g_grad_enabled; }

NoGradGuard::NoGradGuard() : prev_(g_grad_enabled) { g_grad_enabled = false; }
NoGradGuard::~NoGradGuard() { g_grad_enabled = prev_; }

Tensor Tensor::zeros(Shape shape, bool requires_grad) {
    std::vector<double> v(shape_size(shape), 0.0);
    return Tensor(make_node(std::move(shape), std::move(v), requires_grad));
}

Tensor Tensor::full(Shape shape, double value, bool requires_grad) {
    std::vector<double> v(shape_size(shape), value);
    return Tensor(make_node(std::move(shape), std::move(v), requires_grad));
}

Tensor Tensor::from_values(Shape shape, std::vector<double> values, bool requires_grad) {
    if (values.size() != shape_size(shape)) {
        throw ShapeError("Tensor::from_values: " + std::to_string(values.size()) +
                         " values for shape " + shape_str(shape));
    }
    return Tensor(make_node(std::move(shape), std::move(values), requires_grad));
}

Tensor Tensor::scalar(double value, bool requires_grad) {
    return Tensor(make_node(Shape{}, std::vector<double>{value}, requires_grad));
}

const Shape& Tensor::shape() const { return node_->shape; }
std::size_t Tensor::size() const { return node_->values.size(); }

std::size_t Tensor::rows() const {
    if (node_->shape.size() != 2) throw ShapeError("Tensor::rows: rank-2 required, got " + shape_str(node_->shape));
    return node_->shape[0];
}

std::size_t Tensor::cols() const {
    if (node_->shape.size() != 2) throw ShapeError("Tensor::cols: rank-2 required, got " + shape_str(node_->shape));
    return node_->shape[1];
}

std::span<const double> Tensor::values() const { return node_->values; }
std::span<double> Tensor::values_mut() { return node_->values; }

double Tensor::item() const {
    if (node_->values.size() != 1) {
        throw ShapeError("Tensor::item: size-1 tensor required, got " + shape_str(node_->shape));
    }
    return node_->values[0];
}

bool Tensor::requires_grad() const { return node_->requires_grad; }
std::span<const double> Tensor::grad() const { return node_->grad; }
const void* Tensor::id() const { return node_.get(); }

GradientMap backward(const Tensor& loss) {
    if (!loss.defined() || loss.size() != 1) {
        throw ShapeError("backward: loss must be a scalar, got " +
                         (loss.defined() ? shape_str(loss.shape()) : std::string("<empty>")));
    }
    detail::TensorNode* root = loss.node();

    // Iterative post-order DFS; topo_mark: 0 unseen, 1 on stack, 2 done.
    std::vector<detail::TensorNode*> order;
    {
        std::vector<std::pair<detail::TensorNode*, std::size_t>> stack;
        stack.emplace_back(root, 0);
        root->topo_mark = 1;
        while (!stack.empty()) {
            auto& [node, next_child] = stack.back();
            if (next_child < node->parents.size()) {
                detail::TensorNode* child = node->parents[next_child].get();
                ++next_child;
                if (child->topo_mark == 0) {
                    child->topo_mark = 1;
                    stack.emplace_back(child, 0);
                }
            } else {
                node->topo_mark = 2;
                order.push_back(node);
                stack.pop_back();
            }
        }
    }

    // Fresh accumulation per sweep.
    for (detail::TensorNode* node : order) {
        node->grad.assign(node->values.size(), 0.0);
        node->topo_mark = 0;
    }
    root->grad[0] = 1.0;

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        detail::TensorNode* node = *it;
        if (node->backward_fn) node->backward_fn(*node);
    }

    GradientMap grads;
    for (detail::TensorNode* node : order) {
        if (node->requires_grad && node->parents.empty()) {
            grads.emplace(node, node->grad);
        }
    }
    return grads;
}

Sgd::Sgd(std::vector<Tensor> params, double lr, double momentum, double weight_decay)
    : params_(std::move(params)), lr_(lr), momentum_(momentum), weight_decay_(weight_decay) {
    if (lr_ <= 0.0) throw ConfigError("Sgd: learning rate must be positive");
    if (momentum_ < 0.0 || momentum_ >= 1.0) throw ConfigError("Sgd: momentum must be in [0, 1)");
    if (weight_decay_ < 0.0) throw ConfigError("Sgd: weight decay must be nonnegative");
    velocity_.reserve(params_.size());
    for (const Tensor& p : params_) velocity_.emplace_back(p.size(), 0.0);
}

void Sgd::step(const GradientMap& grads) {
    const auto& k = kernels::active();
    for (std::size_t i = 0; i < params_.size(); ++i) {
        Tensor& p = params_[i];
        auto it = grads.find(p.id());
        if (it == grads.end()) {
            throw ShapeError("Sgd::step: gradient map does not cover parameter " + std::to_string(i));
        }
        const std::vector<double>& g = it->second;
        if (g.size() != p.size()) {
            throw ShapeError("Sgd::step: gradient size " + std::to_string(g.size()) +
                             " vs parameter size " + std::to_string(p.size()));
        }
        k.sgd_update(p.values_mut().data(), velocity_[i].data(), g.data(),
                     lr_, momentum_, weight_decay_, p.size());
    }
}

}  // namespace proud
