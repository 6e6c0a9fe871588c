#pragma once

// Dense real arithmetic kernels with a scalar reference path and SIMD
// variants selected at runtime.
//
// All matrices handed to these kernels are row-major and contiguous. The
// scalar path is the reference: every SIMD variant must agree with it to a
// few ulps per accumulated term (see tests/test_kernels.cpp).

#include <cstddef>
#include <span>
#include <string_view>

namespace dualpairs::kernels {

enum class Backend { scalar, avx2 };

std::string_view backend_name(Backend b);

// True when the variant was compiled in and the running CPU supports it.
bool backend_supported(Backend b);

// The backend used by the dispatching entry points below. Defaults to the
// widest supported variant.
Backend active_backend();

// Throws std::invalid_argument if `b` is not supported on this machine.
void set_backend(Backend b);

// Restores the previous backend on destruction.
class ScopedBackend {
public:
    explicit ScopedBackend(Backend b);
    ~ScopedBackend();
    ScopedBackend(const ScopedBackend&) = delete;
    ScopedBackend& operator=(const ScopedBackend&) = delete;

private:
    Backend previous_;
};

/// sum_i a[i] * b[i]; spans must have equal length.
double dot(std::span<const double> a, std::span<const double> b);

/// y += alpha * x; spans must have equal length.
void axpy(double alpha, std::span<const double> x, std::span<double> y);

/// C (m x n) = A (m x k) * B (k x n).  C must not alias A or B.
void gemm(std::size_t m, std::size_t n, std::size_t k, const double* a, const double* b, double* c);

/// Sum over rows r < half of x[r,:] . y[r+half,:] - x[r+half,:] . y[r,:] for
/// two (2*half) x cols row-major blocks: Tr(X^T J Y) with J the standard
/// symplectic matrix.
double omega_pairing(std::size_t half, std::size_t cols, const double* x, const double* y);

// Per-variant entry points, exposed for equivalence testing.
namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void gemm(std::size_t m, std::size_t n, std::size_t k, const double* a, const double* b, double* c);
double omega_pairing(std::size_t half, std::size_t cols, const double* x, const double* y);
}  // namespace scalar

#if defined(DUALPAIRS_HAVE_AVX2)
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void gemm(std::size_t m, std::size_t n, std::size_t k, const double* a, const double* b, double* c);
double omega_pairing(std::size_t half, std::size_t cols, const double* x, const double* y);
}  // namespace avx2
#endif

}  // namespace dualpairs::kernels
