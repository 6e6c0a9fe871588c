#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "dualpairs/kernels/kernels.hpp"
#include "dualpairs/rng.hpp"

namespace k = dualpairs::kernels;

namespace {

std::vector<double> gaussian(std::size_t n, dualpairs::CounterRng& rng) {
    std::vector<double> v(n);
    for (auto& x : v) x = rng.gaussian();
    return v;
}

double abs_sum(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] * b[i]);
    return s;
}

constexpr double kUlpBudget = 64 * 2.220446049250313e-16;

}  // namespace

TEST(Kernels, ScalarDotMatchesHandSum) {
    const std::vector<double> a{1, 2, 3, 4, 5};
    const std::vector<double> b{5, 4, 3, 2, 1};
    EXPECT_EQ(k::scalar::dot(a.data(), b.data(), a.size()), 35.0);
}

TEST(Kernels, ScalarGemmSmall) {
    const double a[] = {1, 2, 3, 4, 5, 6};  // 2x3
    const double b[] = {7, 8, 9, 10, 11, 12};  // 3x2
    double c[4];
    k::scalar::gemm(2, 2, 3, a, b, c);
    EXPECT_EQ(c[0], 58.0);
    EXPECT_EQ(c[1], 64.0);
    EXPECT_EQ(c[2], 139.0);
    EXPECT_EQ(c[3], 154.0);
}

TEST(Kernels, ScalarOmegaOnStandardPair) {
    // x = e_1, y = e_{half+1}: omega = 1.
    const double x[] = {1, 0};
    const double y[] = {0, 1};
    EXPECT_EQ(k::scalar::omega_pairing(1, 1, x, y), 1.0);
    EXPECT_EQ(k::scalar::omega_pairing(1, 1, y, x), -1.0);
}

TEST(Kernels, DispatchRejectsUnsupportedBackend) {
    if (k::backend_supported(k::Backend::avx2)) GTEST_SKIP() << "avx2 available";
    EXPECT_THROW(k::set_backend(k::Backend::avx2), std::invalid_argument);
}

#if defined(DUALPAIRS_HAVE_AVX2)

class Avx2Equivalence : public ::testing::Test {
protected:
    void SetUp() override {
        if (!k::backend_supported(k::Backend::avx2)) GTEST_SKIP() << "CPU lacks AVX2/FMA";
    }
};

TEST_F(Avx2Equivalence, DotAllLengths) {
    dualpairs::CounterRng rng(11);
    for (std::size_t n = 0; n <= 67; ++n) {
        const auto a = gaussian(n, rng);
        const auto b = gaussian(n, rng);
        const double s = k::scalar::dot(a.data(), b.data(), n);
        const double v = k::avx2::dot(a.data(), b.data(), n);
        EXPECT_LE(std::abs(s - v), kUlpBudget * abs_sum(a, b) + 1e-300) << "n=" << n;
    }
}

TEST_F(Avx2Equivalence, AxpyAllLengths) {
    dualpairs::CounterRng rng(12);
    for (std::size_t n = 0; n <= 37; ++n) {
        const auto x = gaussian(n, rng);
        auto y1 = gaussian(n, rng);
        auto y2 = y1;
        k::scalar::axpy(0.37, x.data(), y1.data(), n);
        k::avx2::axpy(0.37, x.data(), y2.data(), n);
        for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(y1[i], y2[i], 4 * kUlpBudget * (std::abs(y1[i]) + 1.0));
    }
}

TEST_F(Avx2Equivalence, GemmRaggedShapes) {
    dualpairs::CounterRng rng(13);
    for (std::size_t m : {1u, 2u, 3u, 5u, 8u, 13u}) {
        for (std::size_t n : {1u, 3u, 4u, 7u, 9u}) {
            for (std::size_t kk : {1u, 2u, 6u, 11u}) {
                const auto a = gaussian(m * kk, rng);
                const auto b = gaussian(kk * n, rng);
                std::vector<double> c1(m * n), c2(m * n);
                k::scalar::gemm(m, n, kk, a.data(), b.data(), c1.data());
                k::avx2::gemm(m, n, kk, a.data(), b.data(), c2.data());
                for (std::size_t i = 0; i < m * n; ++i) {
                    EXPECT_NEAR(c1[i], c2[i], kUlpBudget * static_cast<double>(kk) * 8.0) << m << "x" << n << "x" << kk;
                }
            }
        }
    }
}

TEST_F(Avx2Equivalence, OmegaPairing) {
    dualpairs::CounterRng rng(14);
    for (std::size_t half = 1; half <= 7; ++half) {
        for (std::size_t cols = 1; cols <= 9; ++cols) {
            const auto x = gaussian(2 * half * cols, rng);
            const auto y = gaussian(2 * half * cols, rng);
            const double s = k::scalar::omega_pairing(half, cols, x.data(), y.data());
            const double v = k::avx2::omega_pairing(half, cols, x.data(), y.data());
            EXPECT_LE(std::abs(s - v), kUlpBudget * abs_sum(x, y) + 1e-300);
        }
    }
}

TEST_F(Avx2Equivalence, DispatchFollowsScopedBackend) {
    dualpairs::CounterRng rng(15);
    const auto a = gaussian(33, rng);
    const auto b = gaussian(33, rng);
    {
        k::ScopedBackend guard(k::Backend::scalar);
        EXPECT_EQ(k::active_backend(), k::Backend::scalar);
        EXPECT_EQ(k::dot(a, b), k::scalar::dot(a.data(), b.data(), a.size()));
    }
    {
        k::ScopedBackend guard(k::Backend::avx2);
        EXPECT_EQ(k::dot(a, b), k::avx2::dot(a.data(), b.data(), a.size()));
    }
}

#endif
