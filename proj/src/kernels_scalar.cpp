#include "proud/kernels.hpp"

#include <cstring>

namespace proud::kernels {
namespace {

void k_add(double* dst, const double* a, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] + b[i];
}

void k_sub(double* dst, const double* a, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] - b[i];
}

void k_mul(double* dst, const double* a, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] * b[i];
}

void k_scale(double* dst, const double* a, double c, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = c * a[i];
}

void k_relu(double* dst, const double* a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] > 0.0 ? a[i] : 0.0;
}

void k_relu_backward_acc(double* dst, const double* x, const double* g, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] > 0.0) dst[i] += g[i];
    }
}

void k_accumulate(double* dst, const double* a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] += a[i];
}

void k_axpy(double* dst, const double* a, double c, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] += c * a[i];
}

// i-k-j loop order: streams rows of B, keeps the per-element accumulation
// sequence in ascending k.
void k_matmul(double* c, const double* a, const double* b,
              std::size_t n, std::size_t k, std::size_t m) {
    std::memset(c, 0, n * m * sizeof(double));
    for (std::size_t i = 0; i < n; ++i) {
        double* crow = c + i * m;
        for (std::size_t kk = 0; kk < k; ++kk) {
            const double aik = a[i * k + kk];
            const double* brow = b + kk * m;
            for (std::size_t j = 0; j < m; ++j) {
                crow[j] += aik * brow[j];
            }
        }
    }
}

void k_sgd_update(double* p, double* v, const double* g,
                  double lr, double momentum, double wd, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double vi = (momentum * v[i] + g[i]) + wd * p[i];
        v[i] = vi;
        p[i] -= lr * vi;
    }
}

const Kernels kScalarTable = {
    k_add, k_sub, k_mul, k_scale, k_relu, k_relu_backward_acc,
    k_accumulate, k_axpy, k_matmul, k_sgd_update, "scalar",
};

}  // namespace

const Kernels& scalar() { return kScalarTable; }

}  // namespace proud::kernels
