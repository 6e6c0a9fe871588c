// AVX2 + FMA variants. This translation unit is compiled with -mavx2 -mfma and
// must only be entered after a runtime CPU check (see kernels_dispatch.cpp).

#include <immintrin.h>

#include "dualpairs/kernels/kernels.hpp"

namespace dualpairs::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d shuf = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

}  // namespace

double dot(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) {
        s += a[i] * b[i];
    }
    return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) {
        y[i] += alpha * x[i];
    }
}

void gemm(std::size_t m, std::size_t n, std::size_t k, const double* a, const double* b, double* c) {
    for (std::size_t i = 0; i < m; ++i) {
        double* crow = c + i * n;
        std::size_t j = 0;
        // 8-wide column panels held in registers across the k loop.
        for (; j + 8 <= n; j += 8) {
            __m256d c0 = _mm256_setzero_pd();
            __m256d c1 = _mm256_setzero_pd();
            for (std::size_t p = 0; p < k; ++p) {
                const __m256d aip = _mm256_broadcast_sd(a + i * k + p);
                const double* brow = b + p * n + j;
                c0 = _mm256_fmadd_pd(aip, _mm256_loadu_pd(brow), c0);
                c1 = _mm256_fmadd_pd(aip, _mm256_loadu_pd(brow + 4), c1);
            }
            _mm256_storeu_pd(crow + j, c0);
            _mm256_storeu_pd(crow + j + 4, c1);
        }
        for (; j + 4 <= n; j += 4) {
            __m256d c0 = _mm256_setzero_pd();
            for (std::size_t p = 0; p < k; ++p) {
                const __m256d aip = _mm256_broadcast_sd(a + i * k + p);
                c0 = _mm256_fmadd_pd(aip, _mm256_loadu_pd(b + p * n + j), c0);
            }
            _mm256_storeu_pd(crow + j, c0);
        }
        for (; j < n; ++j) {
            double s = 0.0;
            for (std::size_t p = 0; p < k; ++p) {
                s += a[i * k + p] * b[p * n + j];
            }
            crow[j] = s;
        }
    }
}

double omega_pairing(std::size_t half, std::size_t cols, const double* x, const double* y) {
    const std::size_t lower = half * cols;
    return dot(x, y + lower, lower) - dot(x + lower, y, lower);
}

}  // namespace dualpairs::kernels::avx2
