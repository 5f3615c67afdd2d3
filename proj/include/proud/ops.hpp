#pragma once

#include <span>
#include <vector>

#include "proud/tensor.hpp"

namespace proud {

// Differentiable primitives. Elementwise binary ops support exactly one
// broadcasting rule: a size-1 tensor against a full tensor.
Tensor matmul(const Tensor& a, const Tensor& b);
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& a, double c);
Tensor relu(const Tensor& a);
Tensor exp(const Tensor& a);
Tensor log(const Tensor& a);
Tensor mean(const Tensor& a);
Tensor sum(const Tensor& a);
Tensor concat_rows(std::span<const Tensor> parts);
Tensor select_rows(const Tensor& a, std::span<const std::size_t> idx);

// x[n x p] * w[p x q] + b[q] broadcast over rows.
Tensor affine(const Tensor& x, const Tensor& w, const Tensor& b);

enum class Primitive {
    kMatmul,
    kAdd,
    kSub,
    kElementwiseMul,
    kScaleByConstant,  // inputs: {tensor, scalar tensor holding the constant}
    kRelu,
    kExp,
    kLog,
    kMean,
    kSum,
    kConcatRows,
    kSelectRows,  // inputs: {tensor, rank-1 tensor of row indices}
};

// Uniform dispatch surface over the primitive set.
Tensor apply_primitive(Primitive kind, const std::vector<Tensor>& inputs);

// Stable softmax of a rank-1 tensor at the given temperature (> 0).
Tensor softmax(const Tensor& v, double temperature);

// Normalizes each slice along `axis` to unit Euclidean norm. Supported:
// rank-1 with axis 0, rank-2 with axis 1 (rows). Slices with norm <= 1e-12
// raise DegenerateVectorError.
Tensor l2_normalize(const Tensor& v, int axis);

// 1 - cos(a, b) for rank-1 tensors; differentiable in both arguments.
Tensor cosine_distance(const Tensor& a, const Tensor& b);

// Mean over rows of -sum_k targets * log softmax(logits). Target rows must be
// nonnegative and sum to 1 within 1e-6.
Tensor cross_entropy(const Tensor& logits, const Tensor& targets);

// Values-level helpers shared by the graph ops and no-grad paths. All sums
// run in sequential index order.
double l2_norm(std::span<const double> v);
double logsumexp(std::span<const double> z);
// out[k] = exp(z[k]/tau - max/tau) / sum, max-subtracted for overflow safety.
void softmax_values(std::span<const double> z, double temperature, std::span<double> out);
double cosine_distance_values(std::span<const double> a, std::span<const double> b);
// Entropy of softmax(z / temperature); exact zeros contribute nothing.
double softmax_entropy(std::span<const double> z, double temperature);

constexpr double kNormFloor = 1e-12;

}  // namespace proud
