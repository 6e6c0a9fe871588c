#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "dualpairs/symplectic_pair.hpp"

using namespace dualpairs;
namespace sp = dualpairs::symplectic;

namespace {

RealMat full_rank_point(Index n, Index m, CounterRng& rng) {
    for (;;) {
        RealMat e = gaussian_matrix(2 * n, m, rng);
        if (rank_tol(e) == m) return e;
    }
}

}  // namespace

TEST(SymplecticMomentum, IdentityExample) {
    const RealMat e = RealMat::identity(2);
    const RealMat expected{{0.0, -0.5}, {0.5, 0.0}};
    EXPECT_EQ(sp::j_left(e).real(), expected);
    EXPECT_EQ(sp::j_right(e).real(), expected);
}

TEST(SymplecticMomentum, ZeroPoint) {
    EXPECT_EQ(max_abs(sp::j_left(RealMat(4, 3)).real()), 0.0);
    EXPECT_EQ(max_abs(sp::j_right(RealMat(4, 3)).real()), 0.0);
}

TEST(SymplecticMomentum, AlgebraMembership) {
    CounterRng rng(31);
    for (int t = 0; t < 40; ++t) {
        const Index n = rng.uniform_int(1, 5);
        const RealMat e = gaussian_matrix(2 * n, rng.uniform_int(1, 2 * n), rng);
        const double scale = std::max(1.0, frobenius_norm(e) * frobenius_norm(e));
        EXPECT_LE(algebra_residual(Algebra::sp, sp::j_left(e).real()), 1e-13 * scale);
        const RealMat jr = sp::j_right(e).real();
        EXPECT_EQ(max_abs(jr + jr.transpose()), 0.0);
    }
}

TEST(SymplecticMomentum, Equivariance) {
    CounterRng rng(32);
    for (int t = 0; t < 30; ++t) {
        const Index n = rng.uniform_int(1, 4), m = rng.uniform_int(1, 2 * n);
        const RealMat e = gaussian_matrix(2 * n, m, rng);
        const RealMat s = random_group_element(Group::Sp, n, rng).real();
        const RealMat o = random_group_element(Group::O, m, rng).real();
        EXPECT_LE(relative_residual(sp::j_left(s * e).real(), s * sp::j_left(e).real() * inverse(s)), 1e-9);
        EXPECT_LE(relative_residual(sp::j_right(e * o).real(), o.transpose() * sp::j_right(e).real() * o), 1e-9);
        EXPECT_LE(relative_residual(sp::j_right(s * e).real(), sp::j_right(e).real()), 1e-9);
        EXPECT_LE(relative_residual(sp::j_left(e * o).real(), sp::j_left(e).real()), 1e-9);
    }
}

TEST(Witt, IdenticalListsGiveSymplecticMap) {
    CounterRng rng(33);
    const RealMat v = gaussian_matrix(6, 3, rng);
    const RealMat s = sp::witt_extend(v, v).real();
    EXPECT_LE(group_residual(Group::Sp, s), 1e-9);
    EXPECT_LE(max_abs(s * v - v), 1e-9);
}

TEST(Witt, IsotropicLineInPlane) {
    const RealMat src{{1.0}, {0.0}};
    const RealMat dst{{0.0}, {1.0}};
    const RealMat s = sp::witt_extend(src, dst).real();
    EXPECT_LE(group_residual(Group::Sp, s), 1e-14);
    EXPECT_LE(max_abs(s * src - dst), 1e-14);
}

TEST(Witt, FullBasisIsUniqueChangeOfBasis) {
    CounterRng rng(34);
    for (Index n = 1; n <= 4; ++n) {
        const RealMat a = random_group_element(Group::Sp, n, rng).real();
        const RealMat b = random_group_element(Group::Sp, n, rng).real();
        const RealMat s = sp::witt_extend(a, b).real();
        EXPECT_LE(relative_residual(s, b * inverse(a)), 1e-9);
    }
}

TEST(Witt, RandomCompatibleLists) {
    CounterRng rng(35);
    for (int t = 0; t < 60; ++t) {
        const Index n = rng.uniform_int(1, 5), k = rng.uniform_int(1, 2 * n);
        const RealMat src = gaussian_matrix(2 * n, k, rng);
        if (rank_tol(src) < k) continue;
        const RealMat s0 = random_group_element(Group::Sp, n, rng).real();
        const RealMat dst = s0 * src;
        const RealMat s = sp::witt_extend(src, dst).real();
        EXPECT_LE(group_residual(Group::Sp, s), 1e-8 * std::max(1.0, frobenius_norm(s) * frobenius_norm(s)));
        EXPECT_LE(relative_residual(s * src, dst), 1e-8);
    }
}

TEST(Witt, RejectsMismatchedProducts) {
    const RealMat src = RealMat::identity(2);
    const RealMat dst{{1.0, 0.0}, {0.0, 2.0}};
    EXPECT_THROW(sp::witt_extend(src, dst), PreconditionError);
}

TEST(Witt, RejectsDependentLists) {
    const RealMat src{{1.0, 2.0}, {0.0, 0.0}};
    EXPECT_THROW(sp::witt_extend(src, src), PreconditionError);
}

TEST(SymplecticWitness, GroupOrbitInputs) {
    CounterRng rng(36);
    for (int t = 0; t < 40; ++t) {
        const Index n = rng.uniform_int(1, 4), m = rng.uniform_int(1, 2 * n);
        const RealMat e = full_rank_point(n, m, rng);
        const RealMat s0 = random_group_element(Group::Sp, n, rng).real();
        const RealMat o0 = random_group_element(Group::O, m, rng).real();
        const auto l = sp::witness_left(e, s0 * e);
        EXPECT_LE(l.residual, 1e-8);
        EXPECT_LE(group_residual(Group::Sp, l.witness.real()), 1e-9 * std::max(1.0, std::pow(frobenius_norm(l.witness.real()), 2)));
        const auto r = sp::witness_right(e, e * o0);
        EXPECT_LE(r.residual, 1e-9);
        EXPECT_LE(group_residual(Group::O, r.witness.real()), 1e-9);
    }
}

TEST(SymplecticWitness, OneDimensionalRightExample) {
    const RealMat e{{1.0}, {1.0}};
    const RealMat e2{{-1.0}, {-1.0}};
    const auto r = sp::witness_right(e, e2);
    ASSERT_EQ(r.witness.real().rows(), 1);
    EXPECT_EQ(r.witness.real()(0, 0), -1.0);
    EXPECT_EQ(r.residual, 0.0);
}

TEST(SymplecticWitness, IndependentTemplatePartners) {
    CounterRng rng(37);
    for (int t = 0; t < 30; ++t) {
        const Index n = rng.uniform_int(1, 4), m = rng.uniform_int(1, 2 * n);
        const Index p = rng.uniform_int(std::max<Index>(0, m - n), m / 2);
        std::vector<double> sig;
        for (Index i = 0; i < p; ++i) sig.push_back(2.5 - 0.5 * static_cast<double>(i));
        const RealMat d = sp::build_d(sp::OrbitInvariants::from_sigmas(n, m, sig));
        const RealMat e = random_group_element(Group::Sp, n, rng).real() * d;
        const RealMat e2 = random_group_element(Group::Sp, n, rng).real() * d;
        EXPECT_LE(sp::witness_left(e, e2).residual, 1e-7);
    }
}

TEST(SymplecticWitness, SquareCase) {
    CounterRng rng(38);
    for (Index n = 1; n <= 3; ++n) {
        const RealMat e = full_rank_point(n, 2 * n, rng);
        const RealMat e2 = random_group_element(Group::Sp, n, rng).real() * e;
        EXPECT_LE(sp::witness_left(e, e2).residual, 1e-10);
    }
}

TEST(SymplecticWitness, RejectsRankDeficientAndMismatched) {
    RealMat e(4, 2);
    e(0, 0) = 1.0;
    EXPECT_THROW(sp::witness_left(e, e), PreconditionError);
    const RealMat a = RealMat::identity(2);
    const RealMat b = a * 2.0;
    EXPECT_THROW(sp::witness_left(a, b), PreconditionError);
    EXPECT_THROW(sp::witness_right(a, b), PreconditionError);
}

TEST(OrbitInvariants, Validation) {
    EXPECT_THROW(sp::OrbitInvariants::from_sigmas(1, 2, {}), PreconditionError);  // r = -1
    EXPECT_THROW(sp::OrbitInvariants::from_sigmas(2, 2, {1.0, 2.0}), PreconditionError);
    const auto inv = sp::OrbitInvariants::from_sigmas(3, 4, {2.0});
    EXPECT_EQ(inv.p, 1);
    EXPECT_EQ(inv.q, 2);
    EXPECT_EQ(inv.r, 0);
}

TEST(XuTemplate, WorkedExample) {
    const auto inv = sp::OrbitInvariants::from_sigmas(2, 2, {2.0});
    EXPECT_EQ(inv.q, 0);
    EXPECT_EQ(inv.r, 1);
    RealMat d(4, 2);
    d(0, 0) = 2.0;
    d(2, 1) = 2.0;
    EXPECT_EQ(sp::build_d(inv), d);
    const RealMat expected{{0.0, -2.0}, {2.0, 0.0}};
    EXPECT_EQ(sp::j_right(d).real(), expected);
}

TEST(XuDecompose, TemplateIsFixedPoint) {
    const auto inv = sp::OrbitInvariants::from_sigmas(3, 4, {2.0});
    const RealMat d = sp::build_d(inv);
    const auto xd = sp::xu_decompose(d);
    EXPECT_EQ(xd.d, d);
    EXPECT_LE(relative_residual(xd.s.real() * xd.d * xd.o.real(), d), 1e-12);
}

TEST(XuDecompose, RandomRoundTrip) {
    CounterRng rng(39);
    for (int t = 0; t < 60; ++t) {
        const Index n = rng.uniform_int(1, 4), m = rng.uniform_int(1, 2 * n);
        const Index p = rng.uniform_int(std::max<Index>(0, m - n), m / 2);
        std::vector<double> sig;
        for (Index i = 0; i < p; ++i) sig.push_back(0.5 + 2.0 * rng.uniform());
        std::sort(sig.rbegin(), sig.rend());
        const auto inv0 = sp::OrbitInvariants::from_sigmas(n, m, sig);
        const RealMat e = random_group_element(Group::Sp, n, rng).real() * sp::build_d(inv0) *
                          random_group_element(Group::O, m, rng).real();
        const auto xd = sp::xu_decompose(e);
        EXPECT_LE(relative_residual(xd.s.real() * xd.d * xd.o.real(), e), 1e-8);
        EXPECT_EQ(xd.d, sp::build_d(xd.inv));
        EXPECT_LE(group_residual(Group::O, xd.o.real()), 1e-11);
        ASSERT_EQ(xd.inv.p, inv0.p);
        EXPECT_EQ(xd.inv.q, inv0.q);
        for (Index i = 0; i < p; ++i) EXPECT_NEAR(xd.inv.sigmas[i], sig[i], 1e-8);
    }
}

TEST(XuDecompose, GaussianInputs) {
    CounterRng rng(40);
    for (int t = 0; t < 60; ++t) {
        const Index n = rng.uniform_int(1, 4), m = rng.uniform_int(1, 2 * n);
        const RealMat e = full_rank_point(n, m, rng);
        const auto xd = sp::xu_decompose(e);
        EXPECT_LE(relative_residual(xd.s.real() * xd.d * xd.o.real(), e), 1e-8);
        const double s2 = std::pow(frobenius_norm(xd.s.real()), 2);
        EXPECT_LE(group_residual(Group::Sp, xd.s.real()), 1e-9 * std::max(1.0, s2));
    }
}

TEST(XuDecompose, RejectsRankDeficient) {
    RealMat e(4, 2);
    e(0, 0) = 1.0;
    e(1, 1) = 1.0;
    e(0, 1) = 1.0;
    e(1, 0) = 1.0;
    EXPECT_THROW(sp::xu_decompose(e), PreconditionError);
}

TEST(SymplecticNormalForms, Examples) {
    const auto left = sp::normal_form_left(sp::OrbitInvariants::from_sigmas(1, 2, {1.0})).real();
    const RealMat half_j{{0.0, -0.5}, {0.5, 0.0}};
    EXPECT_EQ(left, half_j);
    const auto right = sp::normal_form_right(sp::OrbitInvariants::from_sigmas(1, 2, {std::sqrt(2.0)})).real();
    EXPECT_NEAR(right(0, 1), -1.0, 1e-15);
    EXPECT_NEAR(right(1, 0), 1.0, 1e-15);
    EXPECT_EQ(max_abs(sp::normal_form_right(sp::OrbitInvariants::from_sigmas(2, 2, {})).real()), 0.0);
}

TEST(SymplecticNormalForms, MatchTemplateMomentaExactly) {
    for (Index n = 1; n <= 4; ++n) {
        for (Index m = 1; m <= 2 * n; ++m) {
            for (Index p = std::max<Index>(0, m - n); p <= m / 2; ++p) {
                std::vector<double> sig;
                for (Index i = 0; i < p; ++i) sig.push_back(std::sqrt(static_cast<double>(2 * (p - i))));
                const auto inv = sp::OrbitInvariants::from_sigmas(n, m, sig);
                const RealMat d = sp::build_d(inv);
                EXPECT_LE(max_abs(sp::j_left(d).real() - sp::normal_form_left(inv).real()), 1e-14);
                // Reorder the template columns (p | q | p) into adjacent pairs followed by q.
                std::vector<Index> order;
                for (Index i = 0; i < p; ++i) {
                    order.push_back(i);
                    order.push_back(m - p + i);
                }
                for (Index i = p; i < m - p; ++i) order.push_back(i);
                RealMat perm(m, m);
                for (Index k = 0; k < m; ++k) perm(order[k], k) = 1.0;
                EXPECT_LE(max_abs(sp::j_right(d * perm).real() - sp::normal_form_right(inv).real()), 1e-14);
            }
        }
    }
}

TEST(SymplecticNormalForms, RightSpectrum) {
    const auto inv = sp::OrbitInvariants::from_sigmas(3, 5, {2.0, 1.0});
    const auto ev = eigenvalues(sp::normal_form_right(inv).real());
    std::vector<double> im;
    for (const auto& l : ev) im.push_back(l.imag());
    std::sort(im.begin(), im.end());
    const std::vector<double> expected{-2.0, -0.5, 0.0, 0.5, 2.0};
    for (std::size_t i = 0; i < im.size(); ++i) EXPECT_NEAR(im[i], expected[i], 1e-12);
}

TEST(SymplecticCorrespondence, CharacteristicPolynomials) {
    CounterRng rng(41);
    for (int t = 0; t < 40; ++t) {
        const Index n = rng.uniform_int(1, 4), m = rng.uniform_int(1, 2 * n);
        const RealMat e = full_rank_point(n, m, rng);
        const auto [zl, zr] = sp::correspond(sp::xu_decompose(e).inv);
        const auto a = char_poly(sp::j_left(e).real());
        const auto b = char_poly(zl.real());
        ASSERT_EQ(a.size(), b.size());
        for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-7 * std::max(1.0, std::abs(b[i])));
        const auto c = char_poly(sp::j_right(e).real());
        const auto d = char_poly(zr.real());
        for (std::size_t i = 0; i < c.size(); ++i) EXPECT_NEAR(c[i], d[i], 1e-7 * std::max(1.0, std::abs(d[i])));
    }
}

TEST(SymplecticInvariants, LeftAndRightAgree) {
    CounterRng rng(42);
    for (int t = 0; t < 40; ++t) {
        const Index n = rng.uniform_int(1, 4), m = rng.uniform_int(1, 2 * n);
        const RealMat e = full_rank_point(n, m, rng);
        const auto l = sp::left_invariants(e);
        const auto r = sp::right_invariants(e);
        ASSERT_EQ(l.p, r.p);
        for (Index i = 0; i < l.p; ++i) EXPECT_NEAR(l.sigmas[i], r.sigmas[i], 1e-6 * r.sigmas[i]);
    }
}
