#pragma once

#include <cstddef>

// Dense double-precision inner loops. Every kernel exists as a scalar
// reference implementation and, on x86-64 with AVX2, as a vectorized variant.
// The two produce bitwise-identical results: SIMD variants vectorize across
// independent output elements and never reassociate a reduction, and no FMA
// contraction is used on either side. Reductions (sums, norms, softmax
// denominators) stay scalar with a fixed sequential order.
//
// The active table is picked once at startup; set PROUD_KERNELS=scalar or
// PROUD_KERNELS=avx2 to override.

namespace proud::kernels {

struct Kernels {
    // dst[i] = a[i] (+|-|*) b[i]
    void (*add)(double* dst, const double* a, const double* b, std::size_t n);
    void (*sub)(double* dst, const double* a, const double* b, std::size_t n);
    void (*mul)(double* dst, const double* a, const double* b, std::size_t n);
    // dst[i] = c * a[i]
    void (*scale)(double* dst, const double* a, double c, std::size_t n);
    // dst[i] = max(a[i], 0)
    void (*relu)(double* dst, const double* a, std::size_t n);
    // dst[i] += (x[i] > 0) ? g[i] : 0
    void (*relu_backward_acc)(double* dst, const double* x, const double* g, std::size_t n);
    // dst[i] += a[i]
    void (*accumulate)(double* dst, const double* a, std::size_t n);
    // dst[i] += c * a[i], computed as dst[i] + (c * a[i]) in that order
    void (*axpy)(double* dst, const double* a, double c, std::size_t n);
    // C[n x m] = A[n x k] * B[k x m], row-major, C overwritten.
    // Each C[i][j] accumulates in ascending-k order.
    void (*matmul)(double* c, const double* a, const double* b,
                   std::size_t n, std::size_t k, std::size_t m);
    // v[i] = momentum * v[i] + g[i] + wd * p[i]; p[i] -= lr * v[i]
    // Evaluated as ((momentum*v + g) + wd*p) per element.
    void (*sgd_update)(double* p, double* v, const double* g,
                       double lr, double momentum, double wd, std::size_t n);
    const char* name;
};

// Reference kernels; always available.
const Kernels& scalar();

// AVX2 kernels, or nullptr when not compiled in or not supported by the CPU.
const Kernels* avx2();

// Runtime-selected table (AVX2 when available unless overridden by env).
const Kernels& active();

}  // namespace proud::kernels
