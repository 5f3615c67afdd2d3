#include "proud/ops.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "proud/errors.hpp"
#include "proud/kernels.hpp"

namespace proud {
namespace {

using detail::TensorNode;

bool any_requires_grad(std::span<const Tensor> inputs) {
    for (const Tensor& t : inputs) {
        if (t.requires_grad()) return true;
    }
    return false;
}

// Builds an op result node. Parents and the backward closure are recorded
// only while grad mode is on and some input needs gradients.
Tensor make_result(Shape shape, std::vector<double> values, std::span<const Tensor> inputs,
                   std::function<void(TensorNode&)> backward_fn) {
    auto node = std::make_shared<TensorNode>();
    node->shape = std::move(shape);
    node->values = std::move(values);
    if (grad_enabled() && any_requires_grad(inputs)) {
        node->requires_grad = true;
        node->parents.reserve(inputs.size());
        for (const Tensor& t : inputs) node->parents.push_back(std::shared_ptr<TensorNode>(t.node(), [](TensorNode*) {}));
        node->backward_fn = std::move(backward_fn);
    }
    return Tensor(std::move(node));
}

void transpose_vals(double* dst, const double* src, std::size_t n, std::size_t m) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) dst[j * n + i] = src[i * m + j];
    }
}

void check_same_shape(const Tensor& a, const Tensor& b, const char* op) {
    if (a.shape() != b.shape()) {
        throw ShapeError(std::string(op) + ": shape mismatch " + shape_str(a.shape()) + " vs " +
                         shape_str(b.shape()));
    }
}

bool is_scalar_like(const Tensor& t) { return t.size() == 1; }

enum class BinKind { Add, Sub, Mul };

Tensor binary_op(const Tensor& a, const Tensor& b, BinKind kind, const char* name) {
    const auto& k = kernels::active();
    const bool a_scalar = is_scalar_like(a);
    const bool b_scalar = is_scalar_like(b);
    if (!a_scalar && !b_scalar) check_same_shape(a, b, name);

    const Tensor& big = b_scalar ? a : b;
    std::vector<double> out(big.size());
    if (!a_scalar && !b_scalar) {
        switch (kind) {
            case BinKind::Add: k.add(out.data(), a.values().data(), b.values().data(), out.size()); break;
            case BinKind::Sub: k.sub(out.data(), a.values().data(), b.values().data(), out.size()); break;
            case BinKind::Mul: k.mul(out.data(), a.values().data(), b.values().data(), out.size()); break;
        }
    } else {
        const double c = (a_scalar && !b_scalar) ? a.values()[0] : b.values()[0];
        const std::span<const double> v = (a_scalar && !b_scalar) ? b.values() : a.values();
        for (std::size_t i = 0; i < out.size(); ++i) {
            switch (kind) {
                case BinKind::Add: out[i] = v[i] + c; break;
                case BinKind::Sub:
                    out[i] = (a_scalar && !b_scalar) ? c - v[i] : v[i] - c;
                    break;
                case BinKind::Mul: out[i] = v[i] * c; break;
            }
        }
    }

    const Tensor inputs[2] = {a, b};
    return make_result(big.shape(), std::move(out), inputs, [kind, a_scalar, b_scalar](TensorNode& self) {
        TensorNode* pa = self.parents[0].get();
        TensorNode* pb = self.parents[1].get();
        const auto& kk = kernels::active();
        const std::size_t n = self.values.size();
        if (pa->requires_grad) {
            if (a_scalar && !b_scalar) {
                double s = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    double g = self.grad[i];
                    if (kind == BinKind::Mul) g *= pb->values[i];
                    s += g;
                }
                pa->grad[0] += s;
            } else {
                switch (kind) {
                    case BinKind::Add:
                    case BinKind::Sub:
                        kk.accumulate(pa->grad.data(), self.grad.data(), n);
                        break;
                    case BinKind::Mul:
                        if (b_scalar) {
                            kk.axpy(pa->grad.data(), self.grad.data(), pb->values[0], n);
                        } else {
                            for (std::size_t i = 0; i < n; ++i) pa->grad[i] += self.grad[i] * pb->values[i];
                        }
                        break;
                }
            }
        }
        if (pb->requires_grad) {
            if (b_scalar && !a_scalar) {
                double s = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    double g = self.grad[i];
                    if (kind == BinKind::Mul) g *= pa->values[i];
                    if (kind == BinKind::Sub) g = -g;
                    s += g;
                }
                pb->grad[0] += s;
            } else {
                switch (kind) {
                    case BinKind::Add:
                        kk.accumulate(pb->grad.data(), self.grad.data(), n);
                        break;
                    case BinKind::Sub:
                        kk.axpy(pb->grad.data(), self.grad.data(), -1.0, n);
                        break;
                    case BinKind::Mul:
                        if (a_scalar) {
                            kk.axpy(pb->grad.data(), self.grad.data(), pa->values[0], n);
                        } else {
                            for (std::size_t i = 0; i < n; ++i) pb->grad[i] += self.grad[i] * pa->values[i];
                        }
                        break;
                }
            }
        }
    });
}

}  // namespace

Tensor matmul(const Tensor& a, const Tensor& b) {
    if (a.shape().size() != 2 || b.shape().size() != 2 || a.cols() != b.rows()) {
        throw ShapeError("matmul: shape mismatch " + shape_str(a.shape()) + " vs " + shape_str(b.shape()));
    }
    const std::size_t n = a.rows(), kdim = a.cols(), m = b.cols();
    std::vector<double> out(n * m);
    kernels::active().matmul(out.data(), a.values().data(), b.values().data(), n, kdim, m);

    const Tensor inputs[2] = {a, b};
    return make_result({n, m}, std::move(out), inputs, [n, kdim, m](TensorNode& self) {
        TensorNode* pa = self.parents[0].get();
        TensorNode* pb = self.parents[1].get();
        const auto& kk = kernels::active();
        if (pa->requires_grad) {
            // dA += dC * B^T
            std::vector<double> bt(kdim * m);
            transpose_vals(bt.data(), pb->values.data(), kdim, m);
            std::vector<double> da(n * kdim);
            kk.matmul(da.data(), self.grad.data(), bt.data(), n, m, kdim);
            kk.accumulate(pa->grad.data(), da.data(), da.size());
        }
        if (pb->requires_grad) {
            // dB += A^T * dC
            std::vector<double> at(n * kdim);
            transpose_vals(at.data(), pa->values.data(), n, kdim);
            std::vector<double> db(kdim * m);
            kk.matmul(db.data(), at.data(), self.grad.data(), kdim, n, m);
            kk.accumulate(pb->grad.data(), db.data(), db.size());
        }
    });
}

Tensor add(const Tensor& a, const Tensor& b) { return binary_op(a, b, BinKind::Add, "add"); }
Tensor sub(const Tensor& a, const Tensor& b) { return binary_op(a, b, BinKind::Sub, "sub"); }
Tensor mul(const Tensor& a, const Tensor& b) { return binary_op(a, b, BinKind::Mul, "elementwise-mul"); }

Tensor scale(const Tensor& a, double c) {
    std::vector<double> out(a.size());
    kernels::active().scale(out.data(), a.values().data(), c, out.size());
    const Tensor inputs[1] = {a};
    return make_result(a.shape(), std::move(out), inputs, [c](TensorNode& self) {
        TensorNode* pa = self.parents[0].get();
        if (pa->requires_grad) kernels::active().axpy(pa->grad.data(), self.grad.data(), c, self.grad.size());
    });
}

Tensor relu(const Tensor& a) {
    std::vector<double> out(a.size());
    kernels::active().relu(out.data(), a.values().data(), out.size());
    const Tensor inputs[1] = {a};
    return make_result(a.shape(), std::move(out), inputs, [](TensorNode& self) {
        TensorNode* pa = self.parents[0].get();
        if (pa->requires_grad) {
            kernels::active().relu_backward_acc(pa->grad.data(), pa->values.data(), self.grad.data(),
                                                self.grad.size());
        }
    });
}

Tensor exp(const Tensor& a) {
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::exp(a.values()[i]);
    const Tensor inputs[1] = {a};
    return make_result(a.shape(), std::move(out), inputs, [](TensorNode& self) {
        TensorNode* pa = self.parents[0].get();
        if (pa->requires_grad) {
            for (std::size_t i = 0; i < self.grad.size(); ++i) pa->grad[i] += self.grad[i] * self.values[i];
        }
    });
}

Tensor log(const Tensor& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a.values()[i] > 0.0)) {
            throw DomainError("log: non-positive entry " + std::to_string(a.values()[i]) + " at index " +
                              std::to_string(i));
        }
    }
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::log(a.values()[i]);
    const Tensor inputs[1] = {a};
    return make_result(a.shape(), std::move(out), inputs, [](TensorNode& self) {
        TensorNode* pa = self.parents[0].get();
        if (pa->requires_grad) {
            for (std::size_t i = 0; i < self.grad.size(); ++i) pa->grad[i] += self.grad[i] / pa->values[i];
        }
    });
}

namespace {

Tensor reduce_op(const Tensor& a, bool take_mean, const char* name) {
    if (a.size() == 0) throw ShapeError(std::string(name) + ": empty tensor");
    double s = 0.0;
    for (double v : a.values()) s += v;
    const double denom = take_mean ? static_cast<double>(a.size()) : 1.0;
    const Tensor inputs[1] = {a};
    return make_result(Shape{}, {s / denom}, inputs, [denom](TensorNode& self) {
        TensorNode* pa = self.parents[0].get();
        if (pa->requires_grad) {
            const double g = self.grad[0] / denom;
            for (double& gi : pa->grad) gi += g;
        }
    });
}

}  // namespace

Tensor mean(const Tensor& a) { return reduce_op(a, true, "mean"); }
Tensor sum(const Tensor& a) { return reduce_op(a, false, "sum"); }

Tensor concat_rows(std::span<const Tensor> parts) {
    if (parts.empty()) throw ShapeError("concat-rows: no inputs");
    const std::size_t m = parts[0].cols();
    std::size_t total = 0;
    for (const Tensor& p : parts) {
        if (p.shape().size() != 2 || p.cols() != m) {
            throw ShapeError("concat-rows: column mismatch, expected " + std::to_string(m) + ", got " +
                             shape_str(p.shape()));
        }
        total += p.rows();
    }
    std::vector<double> out;
    out.reserve(total * m);
    for (const Tensor& p : parts) out.insert(out.end(), p.values().begin(), p.values().end());

    return make_result({total, m}, std::move(out), parts, [m](TensorNode& self) {
        std::size_t offset = 0;
        for (auto& parent : self.parents) {
            const std::size_t count = parent->values.size();
            if (parent->requires_grad) {
                kernels::active().accumulate(parent->grad.data(), self.grad.data() + offset, count);
            }
            offset += count;
        }
        (void)m;
    });
}

Tensor select_rows(const Tensor& a, std::span<const std::size_t> idx) {
    if (a.shape().size() != 2) throw ShapeError("select-rows: rank-2 input required, got " + shape_str(a.shape()));
    const std::size_t n = a.rows(), m = a.cols();
    for (std::size_t r : idx) {
        if (r >= n) throw ShapeError("select-rows: row index " + std::to_string(r) + " out of range " + std::to_string(n));
    }
    std::vector<double> out(idx.size() * m);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        const double* src = a.values().data() + idx[i] * m;
        std::copy(src, src + m, out.data() + i * m);
    }
    std::vector<std::size_t> rows(idx.begin(), idx.end());
    const Tensor inputs[1] = {a};
    return make_result({idx.size(), m}, std::move(out), inputs, [rows = std::move(rows), m](TensorNode& self) {
        TensorNode* pa = self.parents[0].get();
        if (!pa->requires_grad) return;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            kernels::active().accumulate(pa->grad.data() + rows[i] * m, self.grad.data() + i * m, m);
        }
    });
}

Tensor affine(const Tensor& x, const Tensor& w, const Tensor& b) {
    if (x.shape().size() != 2 || w.shape().size() != 2 || b.shape().size() != 1 ||
        x.cols() != w.rows() || w.cols() != b.shape()[0]) {
        throw ShapeError("affine: shape mismatch " + shape_str(x.shape()) + " * " + shape_str(w.shape()) +
                         " + " + shape_str(b.shape()));
    }
    const std::size_t n = x.rows(), p = x.cols(), q = w.cols();
    std::vector<double> out(n * q);
    kernels::active().matmul(out.data(), x.values().data(), w.values().data(), n, p, q);
    for (std::size_t i = 0; i < n; ++i) {
        kernels::active().accumulate(out.data() + i * q, b.values().data(), q);
    }

    const Tensor inputs[3] = {x, w, b};
    return make_result({n, q}, std::move(out), inputs, [n, p, q](TensorNode& self) {
        TensorNode* px = self.parents[0].get();
        TensorNode* pw = self.parents[1].get();
        TensorNode* pb = self.parents[2].get();
        const auto& kk = kernels::active();
        if (px->requires_grad) {
            std::vector<double> wt(p * q);
            transpose_vals(wt.data(), pw->values.data(), p, q);
            std::vector<double> dx(n * p);
            kk.matmul(dx.data(), self.grad.data(), wt.data(), n, q, p);
            kk.accumulate(px->grad.data(), dx.data(), dx.size());
        }
        if (pw->requires_grad) {
            std::vector<double> xt(n * p);
            transpose_vals(xt.data(), px->values.data(), n, p);
            std::vector<double> dw(p * q);
            kk.matmul(dw.data(), xt.data(), self.grad.data(), p, n, q);
            kk.accumulate(pw->grad.data(), dw.data(), dw.size());
        }
        if (pb->requires_grad) {
            for (std::size_t i = 0; i < n; ++i) {
                kk.accumulate(pb->grad.data(), self.grad.data() + i * q, q);
            }
        }
    });
}

Tensor apply_primitive(Primitive kind, const std::vector<Tensor>& inputs) {
    auto expect = [&](std::size_t count, const char* name) {
        if (inputs.size() != count) {
            throw ShapeError(std::string(name) + ": expected " + std::to_string(count) + " inputs, got " +
                             std::to_string(inputs.size()));
        }
    };
    switch (kind) {
        case Primitive::kMatmul: expect(2, "matmul"); return matmul(inputs[0], inputs[1]);
        case Primitive::kAdd: expect(2, "add"); return add(inputs[0], inputs[1]);
        case Primitive::kSub: expect(2, "sub"); return sub(inputs[0], inputs[1]);
        case Primitive::kElementwiseMul: expect(2, "elementwise-mul"); return mul(inputs[0], inputs[1]);
        case Primitive::kScaleByConstant: {
            expect(2, "scale-by-constant");
            if (inputs[1].size() != 1) {
                throw ShapeError("scale-by-constant: second input must be a scalar, got " +
                                 shape_str(inputs[1].shape()));
            }
            return scale(inputs[0], inputs[1].values()[0]);
        }
        case Primitive::kRelu: expect(1, "relu"); return relu(inputs[0]);
        case Primitive::kExp: expect(1, "exp"); return exp(inputs[0]);
        case Primitive::kLog: expect(1, "log"); return log(inputs[0]);
        case Primitive::kMean: expect(1, "mean"); return mean(inputs[0]);
        case Primitive::kSum: expect(1, "sum"); return sum(inputs[0]);
        case Primitive::kConcatRows: return concat_rows(inputs);
        case Primitive::kSelectRows: {
            expect(2, "select-rows");
            const Tensor& it = inputs[1];
            std::vector<std::size_t> idx(it.size());
            for (std::size_t i = 0; i < it.size(); ++i) {
                const double v = it.values()[i];
                if (v < 0.0 || v != std::floor(v)) {
                    throw ShapeError("select-rows: non-integral row index " + std::to_string(v));
                }
                idx[i] = static_cast<std::size_t>(v);
            }
            return select_rows(inputs[0], idx);
        }
    }
    throw ShapeError("apply_primitive: unknown primitive kind");
}

Tensor softmax(const Tensor& v, double temperature) {
    if (temperature <= 0.0) throw DomainError("softmax: temperature must be positive");
    if (v.shape().size() != 1) throw ShapeError("softmax: rank-1 input required, got " + shape_str(v.shape()));
    std::vector<double> out(v.size());
    softmax_values(v.values(), temperature, out);
    const Tensor inputs[1] = {v};
    return make_result(v.shape(), std::move(out), inputs, [temperature](TensorNode& self) {
        TensorNode* pv = self.parents[0].get();
        if (!pv->requires_grad) return;
        double dot = 0.0;
        for (std::size_t i = 0; i < self.grad.size(); ++i) dot += self.grad[i] * self.values[i];
        for (std::size_t i = 0; i < self.grad.size(); ++i) {
            pv->grad[i] += self.values[i] * (self.grad[i] - dot) / temperature;
        }
    });
}

Tensor l2_normalize(const Tensor& v, int axis) {
    const bool vec = v.shape().size() == 1 && axis == 0;
    const bool rows = v.shape().size() == 2 && axis == 1;
    if (!vec && !rows) {
        throw ShapeError("l2_normalize: unsupported shape/axis " + shape_str(v.shape()) + ", axis " +
                         std::to_string(axis));
    }
    const std::size_t nslices = vec ? 1 : v.rows();
    const std::size_t dim = vec ? v.size() : v.cols();

    std::vector<double> out(v.size());
    std::vector<double> norms(nslices);
    for (std::size_t s = 0; s < nslices; ++s) {
        const double* src = v.values().data() + s * dim;
        const double r = l2_norm({src, dim});
        if (r <= kNormFloor) {
            throw DegenerateVectorError("l2_normalize: slice " + std::to_string(s) + " has norm " +
                                        std::to_string(r) + " below floor");
        }
        norms[s] = r;
        for (std::size_t i = 0; i < dim; ++i) out[s * dim + i] = src[i] / r;
    }
    const Tensor inputs[1] = {v};
    return make_result(v.shape(), std::move(out), inputs,
                       [norms = std::move(norms), nslices, dim](TensorNode& self) {
                           TensorNode* pv = self.parents[0].get();
                           if (!pv->requires_grad) return;
                           for (std::size_t s = 0; s < nslices; ++s) {
                               const double* y = self.values.data() + s * dim;
                               const double* g = self.grad.data() + s * dim;
                               double dot = 0.0;
                               for (std::size_t i = 0; i < dim; ++i) dot += y[i] * g[i];
                               double* dst = pv->grad.data() + s * dim;
                               for (std::size_t i = 0; i < dim; ++i) dst[i] += (g[i] - y[i] * dot) / norms[s];
                           }
                       });
}

Tensor cosine_distance(const Tensor& a, const Tensor& b) {
    if (a.shape().size() != 1 || b.shape().size() != 1 || a.size() != b.size()) {
        throw ShapeError("cosine_distance: rank-1 tensors of equal length required, got " +
                         shape_str(a.shape()) + " vs " + shape_str(b.shape()));
    }
    const double ra = l2_norm(a.values());
    const double rb = l2_norm(b.values());
    if (ra <= kNormFloor || rb <= kNormFloor) {
        throw DegenerateVectorError("cosine_distance: input norm below floor (" + std::to_string(ra) +
                                    ", " + std::to_string(rb) + ")");
    }
    double dot = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) dot += a.values()[i] * b.values()[i];
    const double dist = 1.0 - dot / (ra * rb);

    const Tensor inputs[2] = {a, b};
    return make_result(Shape{}, {dist}, inputs, [ra, rb, dot](TensorNode& self) {
        TensorNode* pa = self.parents[0].get();
        TensorNode* pb = self.parents[1].get();
        const double g = self.grad[0];
        const std::size_t n = pa->values.size();
        if (pa->requires_grad) {
            for (std::size_t i = 0; i < n; ++i) {
                pa->grad[i] += g * (dot * pa->values[i] / (ra * ra * ra * rb) - pb->values[i] / (ra * rb));
            }
        }
        if (pb->requires_grad) {
            for (std::size_t i = 0; i < n; ++i) {
                pb->grad[i] += g * (dot * pb->values[i] / (rb * rb * rb * ra) - pa->values[i] / (ra * rb));
            }
        }
    });
}

Tensor cross_entropy(const Tensor& logits, const Tensor& targets) {
    if (logits.shape().size() != 2 || logits.shape() != targets.shape()) {
        throw ShapeError("cross_entropy: logits " + shape_str(logits.shape()) + " vs targets " +
                         shape_str(targets.shape()));
    }
    const std::size_t n = logits.rows(), kdim = logits.cols();
    for (std::size_t i = 0; i < n; ++i) {
        double rowsum = 0.0;
        for (std::size_t k = 0; k < kdim; ++k) {
            const double t = targets.values()[i * kdim + k];
            if (t < 0.0) throw DomainError("cross_entropy: negative target at row " + std::to_string(i));
            rowsum += t;
        }
        if (std::abs(rowsum - 1.0) > 1e-6) {
            throw DomainError("cross_entropy: target row " + std::to_string(i) + " sums to " +
                              std::to_string(rowsum));
        }
    }

    std::vector<double> lse(n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::span<const double> z{logits.values().data() + i * kdim, kdim};
        lse[i] = logsumexp(z);
        double tz = 0.0;
        for (std::size_t k = 0; k < kdim; ++k) tz += targets.values()[i * kdim + k] * z[k];
        total += lse[i] - tz;
    }

    const Tensor inputs[2] = {logits, targets};
    return make_result(Shape{}, {total / static_cast<double>(n)}, inputs,
                       [lse = std::move(lse), n, kdim](TensorNode& self) {
                           TensorNode* pz = self.parents[0].get();
                           TensorNode* pt = self.parents[1].get();
                           const double g = self.grad[0] / static_cast<double>(n);
                           if (pz->requires_grad) {
                               for (std::size_t i = 0; i < n; ++i) {
                                   for (std::size_t k = 0; k < kdim; ++k) {
                                       const double p = std::exp(pz->values[i * kdim + k] - lse[i]);
                                       pz->grad[i * kdim + k] += g * (p - pt->values[i * kdim + k]);
                                   }
                               }
                           }
                           if (pt->requires_grad) {
                               for (std::size_t i = 0; i < n; ++i) {
                                   for (std::size_t k = 0; k < kdim; ++k) {
                                       pt->grad[i * kdim + k] += g * (lse[i] - pz->values[i * kdim + k]);
                                   }
                               }
                           }
                       });
}

double l2_norm(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double logsumexp(std::span<const double> z) {
    double m = z[0];
    for (double x : z) m = std::max(m, x);
    double s = 0.0;
    for (double x : z) s += std::exp(x - m);
    return std::log(s) + m;
}

void softmax_values(std::span<const double> z, double temperature, std::span<double> out) {
    if (temperature <= 0.0) throw DomainError("softmax: temperature must be positive");
    double m = z[0];
    for (double x : z) m = std::max(m, x);
    double s = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        out[i] = std::exp((z[i] - m) / temperature);
        s += out[i];
    }
    for (std::size_t i = 0; i < z.size(); ++i) out[i] /= s;
}

double cosine_distance_values(std::span<const double> a, std::span<const double> b) {
    const double ra = l2_norm(a);
    const double rb = l2_norm(b);
    if (ra <= kNormFloor || rb <= kNormFloor) {
        throw DegenerateVectorError("cosine_distance: input norm below floor");
    }
    double dot = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
    return 1.0 - dot / (ra * rb);
}

double softmax_entropy(std::span<const double> z, double temperature) {
    if (temperature <= 0.0) throw DomainError("softmax_entropy: temperature must be positive");
    double m = z[0];
    for (double x : z) m = std::max(m, x);
    double s = 0.0;
    for (double x : z) s += std::exp((x - m) / temperature);
    const double lse = std::log(s) + m / temperature;
    // -sum p_k log p_k with log p_k = z_k/tau - lse; underflowed p_k drop out.
    double h = 0.0;
    for (double x : z) {
        const double logp = x / temperature - lse;
        const double p = std::exp(logp);
        h -= p * logp;
    }
    return h;
}

}  // namespace proud
