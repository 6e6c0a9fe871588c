#include <atomic>
#include <stdexcept>
#include <string>

#include "dualpairs/kernels/kernels.hpp"

namespace dualpairs::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(DUALPAIRS_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend detect_best() { return cpu_has_avx2() ? Backend::avx2 : Backend::scalar; }

std::atomic<Backend>& current() {
    static std::atomic<Backend> b{detect_best()};
    return b;
}

void check_same_length(std::size_t a, std::size_t b) {
    if (a != b) {
        throw std::invalid_argument("kernel operands differ in length: " + std::to_string(a) + " vs " +
                                    std::to_string(b));
    }
}

}  // namespace

std::string_view backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
    }
    return "unknown";
}

bool backend_supported(Backend b) {
    switch (b) {
        case Backend::scalar: return true;
        case Backend::avx2: return cpu_has_avx2();
    }
    return false;
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
    if (!backend_supported(b)) {
        throw std::invalid_argument("kernel backend not supported on this machine: " + std::string(backend_name(b)));
    }
    current().store(b, std::memory_order_relaxed);
}

ScopedBackend::ScopedBackend(Backend b) : previous_(active_backend()) { set_backend(b); }
ScopedBackend::~ScopedBackend() { current().store(previous_, std::memory_order_relaxed); }

double dot(std::span<const double> a, std::span<const double> b) {
    check_same_length(a.size(), b.size());
#if defined(DUALPAIRS_HAVE_AVX2)
    if (active_backend() == Backend::avx2) return avx2::dot(a.data(), b.data(), a.size());
#endif
    return scalar::dot(a.data(), b.data(), a.size());
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    check_same_length(x.size(), y.size());
#if defined(DUALPAIRS_HAVE_AVX2)
    if (active_backend() == Backend::avx2) return avx2::axpy(alpha, x.data(), y.data(), x.size());
#endif
    scalar::axpy(alpha, x.data(), y.data(), x.size());
}

void gemm(std::size_t m, std::size_t n, std::size_t k, const double* a, const double* b, double* c) {
#if defined(DUALPAIRS_HAVE_AVX2)
    if (active_backend() == Backend::avx2) return avx2::gemm(m, n, k, a, b, c);
#endif
    scalar::gemm(m, n, k, a, b, c);
}

double omega_pairing(std::size_t half, std::size_t cols, const double* x, const double* y) {
#if defined(DUALPAIRS_HAVE_AVX2)
    if (active_backend() == Backend::avx2) return avx2::omega_pairing(half, cols, x, y);
#endif
    return scalar::omega_pairing(half, cols, x, y);
}

}  // namespace dualpairs::kernels
