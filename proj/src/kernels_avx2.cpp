// AVX2 variants of the dense kernels. This translation unit is the only one
// compiled with -mavx2; everything else stays generic x86-64.
//
// Bitwise parity with the scalar kernels is a hard requirement, so the rules
// are: vectorize only across independent output elements, keep every
// reduction in its scalar accumulation order, and use separate mul/add
// instructions (no FMA, which rounds once instead of twice).

#include "proud/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

#include <cstring>

namespace proud::kernels {
namespace {

void k_add(double* dst, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(dst + i, _mm256_add_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    }
    for (; i < n; ++i) dst[i] = a[i] + b[i];
}

void k_sub(double* dst, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(dst + i, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    }
    for (; i < n; ++i) dst[i] = a[i] - b[i];
}

void k_mul(double* dst, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(dst + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    }
    for (; i < n; ++i) dst[i] = a[i] * b[i];
}

void k_scale(double* dst, const double* a, double c, std::size_t n) {
    const __m256d vc = _mm256_set1_pd(c);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(dst + i, _mm256_mul_pd(vc, _mm256_loadu_pd(a + i)));
    }
    for (; i < n; ++i) dst[i] = c * a[i];
}

void k_relu(double* dst, const double* a, std::size_t n) {
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(dst + i, _mm256_max_pd(_mm256_loadu_pd(a + i), zero));
    }
    for (; i < n; ++i) dst[i] = a[i] > 0.0 ? a[i] : 0.0;
}

void k_relu_backward_acc(double* dst, const double* x, const double* g, std::size_t n) {
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d mask = _mm256_cmp_pd(_mm256_loadu_pd(x + i), zero, _CMP_GT_OQ);
        const __m256d gv = _mm256_and_pd(mask, _mm256_loadu_pd(g + i));
        _mm256_storeu_pd(dst + i, _mm256_add_pd(_mm256_loadu_pd(dst + i), gv));
    }
    for (; i < n; ++i) {
        if (x[i] > 0.0) dst[i] += g[i];
    }
}

void k_accumulate(double* dst, const double* a, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(dst + i, _mm256_add_pd(_mm256_loadu_pd(dst + i), _mm256_loadu_pd(a + i)));
    }
    for (; i < n; ++i) dst[i] += a[i];
}

void k_axpy(double* dst, const double* a, double c, std::size_t n) {
    const __m256d vc = _mm256_set1_pd(c);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d prod = _mm256_mul_pd(vc, _mm256_loadu_pd(a + i));
        _mm256_storeu_pd(dst + i, _mm256_add_pd(_mm256_loadu_pd(dst + i), prod));
    }
    for (; i < n; ++i) dst[i] += c * a[i];
}

// Same i-k-j order as the scalar kernel, vectorized across columns of C.
// Per output element the accumulation sequence is identical.
void k_matmul(double* c, const double* a, const double* b,
              std::size_t n, std::size_t k, std::size_t m) {
    std::memset(c, 0, n * m * sizeof(double));
    for (std::size_t i = 0; i < n; ++i) {
        double* crow = c + i * m;
        for (std::size_t kk = 0; kk < k; ++kk) {
            const double aik = a[i * k + kk];
            const __m256d va = _mm256_set1_pd(aik);
            const double* brow = b + kk * m;
            std::size_t j = 0;
            for (; j + 4 <= m; j += 4) {
                const __m256d prod = _mm256_mul_pd(va, _mm256_loadu_pd(brow + j));
                _mm256_storeu_pd(crow + j, _mm256_add_pd(_mm256_loadu_pd(crow + j), prod));
            }
            for (; j < m; ++j) crow[j] += aik * brow[j];
        }
    }
}

void k_sgd_update(double* p, double* v, const double* g,
                  double lr, double momentum, double wd, std::size_t n) {
    const __m256d vm = _mm256_set1_pd(momentum);
    const __m256d vwd = _mm256_set1_pd(wd);
    const __m256d vlr = _mm256_set1_pd(lr);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d pv = _mm256_loadu_pd(p + i);
        __m256d vv = _mm256_add_pd(_mm256_mul_pd(vm, _mm256_loadu_pd(v + i)), _mm256_loadu_pd(g + i));
        vv = _mm256_add_pd(vv, _mm256_mul_pd(vwd, pv));
        _mm256_storeu_pd(v + i, vv);
        _mm256_storeu_pd(p + i, _mm256_sub_pd(pv, _mm256_mul_pd(vlr, vv)));
    }
    for (; i < n; ++i) {
        const double vi = (momentum * v[i] + g[i]) + wd * p[i];
        v[i] = vi;
        p[i] -= lr * vi;
    }
}

const Kernels kAvx2Table = {
    k_add, k_sub, k_mul, k_scale, k_relu, k_relu_backward_acc,
    k_accumulate, k_axpy, k_matmul, k_sgd_update, "avx2",
};

}  // namespace

const Kernels* avx2_table_impl() { return &kAvx2Table; }

}  // namespace proud::kernels

#else

namespace proud::kernels {
const Kernels* avx2_table_impl() { return nullptr; }
}  // namespace proud::kernels

#endif  // __AVX2__
