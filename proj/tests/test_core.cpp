#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "dualpairs/lie.hpp"
#include "dualpairs/linalg.hpp"
#include "dualpairs/rational.hpp"
#include "dualpairs/rng.hpp"

using namespace dualpairs;

// ---- Rational ----------------------------------------------------------------

TEST(Rational, NormalizesSignAndGcd) {
    const Rational r(6, -4);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
    EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, FromDoubleIsExact) {
    EXPECT_EQ(*Rational::from_double(0.375), Rational(3, 8));
    EXPECT_EQ(*Rational::from_double(-5.0), Rational(-5));
    EXPECT_FALSE(Rational::from_double(std::nan("")).has_value());
    EXPECT_FALSE(Rational::from_double(1e300).has_value());
}

TEST(Rational, OverflowThrows) {
    const Rational big(std::int64_t{1} << 62);
    EXPECT_THROW(big * big, std::overflow_error);
}

// ---- Philox ------------------------------------------------------------------

TEST(Philox, KnownAnswerZeroKey) {
    // Random123 known-answer vector for philox4x32-10 with zero counter and key.
    const auto out = philox4x32_10({0, 0, 0, 0}, {0, 0});
    EXPECT_EQ(out[0], 0x6627e8d5u);
    EXPECT_EQ(out[1], 0xe169c58du);
    EXPECT_EQ(out[2], 0xbc57ac4cu);
    EXPECT_EQ(out[3], 0x9b00dbd8u);
}

TEST(Philox, KnownAnswerPi) {
    const auto out = philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0});
    EXPECT_EQ(out[0], 0xd16cfe09u);
    EXPECT_EQ(out[1], 0x94fdccebu);
    EXPECT_EQ(out[2], 0x5001e420u);
    EXPECT_EQ(out[3], 0x24126ea1u);
}

TEST(CounterRng, StreamsAreReproducibleAndDistinct) {
    CounterRng a = CounterRng::for_trial(42, 3, 7);
    CounterRng b = CounterRng::for_trial(42, 3, 7);
    CounterRng c = CounterRng::for_trial(42, 3, 8);
    for (int i = 0; i < 20; ++i) {
        const auto x = a.next_u64();
        EXPECT_EQ(x, b.next_u64());
        EXPECT_NE(x, c.next_u64());
    }
}

TEST(CounterRng, UniformAndGaussianMoments) {
    CounterRng rng(5);
    double s = 0.0, s2 = 0.0, g = 0.0, g2 = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        s += u;
        s2 += u * u;
        const double z = rng.gaussian();
        g += z;
        g2 += z * z;
    }
    EXPECT_NEAR(s / n, 0.5, 0.01);
    EXPECT_NEAR(s2 / n - 0.25, 1.0 / 12.0, 0.01);
    EXPECT_NEAR(g / n, 0.0, 0.03);
    EXPECT_NEAR(g2 / n, 1.0, 0.04);
}

TEST(CounterRng, UniformIntCoversRange) {
    CounterRng rng(9);
    std::set<std::int64_t> seen;
    for (int i = 0; i < 500; ++i) {
        const auto v = rng.uniform_int(-2, 3);
        ASSERT_GE(v, -2);
        ASSERT_LE(v, 3);
        seen.insert(v);
    }
    EXPECT_EQ(seen.size(), 6u);
}

// ---- Matrix ------------------------------------------------------------------

TEST(Matrix, ShapeErrors) {
    const RealMat a(2, 3), b(2, 2);
    EXPECT_THROW(a * a, DimensionError);
    EXPECT_THROW(a + b, DimensionError);
    EXPECT_THROW(a.trace(), DimensionError);
}

TEST(Matrix, StacksAndBlocks) {
    const RealMat a{{1, 2}, {3, 4}};
    const RealMat v = vstack(a, a);
    EXPECT_EQ(v.rows(), 4);
    EXPECT_EQ(v(3, 1), 4.0);
    const RealMat d = block_diag<double>({a, RealMat{{5}}});
    EXPECT_EQ(d(2, 2), 5.0);
    EXPECT_EQ(d(0, 2), 0.0);
    EXPECT_EQ(a.transpose()(0, 1), 3.0);
}

TEST(Matrix, ToRationalRejectsNonFinite) {
    RealMat a(1, 1);
    a(0, 0) = std::numeric_limits<double>::infinity();
    EXPECT_THROW(to_rational(a), InputError);
}

// ---- linalg ------------------------------------------------------------------

TEST(Linalg, StandardJ) {
    const RealMat j = standard_J(2);
    EXPECT_EQ(j(0, 2), 1.0);
    EXPECT_EQ(j(2, 0), -1.0);
    EXPECT_EQ(frobenius_norm(j * j + RealMat::identity(4)), 0.0);
}

TEST(Linalg, OmegaRealExamples) {
    const RealMat x{{1}, {0}};
    const RealMat y{{0}, {1}};
    EXPECT_EQ(omega_real(x, y), 1.0);
    EXPECT_EQ(omega_real(y, x), -1.0);
    EXPECT_THROW(omega_real(RealMat(3, 1), RealMat(3, 1)), DimensionError);
}

TEST(Linalg, OmegaComplexMatchesRealification) {
    CounterRng rng(3);
    for (int t = 0; t < 20; ++t) {
        const ComplexMat e = gaussian_complex_matrix(3, 2, rng);
        const ComplexMat f = gaussian_complex_matrix(3, 2, rng);
        const double direct = (e.adjoint() * f).trace().imag();
        EXPECT_NEAR(omega_complex(e, f), direct, 1e-12);
        EXPECT_NEAR(omega_complex(e, f), omega_real(vstack(real_part(e), imag_part(e)), vstack(real_part(f), imag_part(f))), 1e-12);
    }
}

TEST(Linalg, OmegaAntisymmetricBilinearFuzzed) {
    CounterRng rng(4);
    for (int t = 0; t < 50; ++t) {
        const Index n = rng.uniform_int(1, 5), m = rng.uniform_int(1, 5);
        const RealMat x = gaussian_matrix(2 * n, m, rng), y = gaussian_matrix(2 * n, m, rng), z = gaussian_matrix(2 * n, m, rng);
        const double a = rng.gaussian();
        EXPECT_NEAR(omega_real(x, y), -omega_real(y, x), 1e-12);
        EXPECT_NEAR(omega_real(x * a + z, y), a * omega_real(x, y) + omega_real(z, y), 1e-11);
    }
}

TEST(Linalg, TracePairingPositiveOnAdjoint) {
    CounterRng rng(6);
    for (int t = 0; t < 20; ++t) {
        const ComplexMat a = gaussian_complex_matrix(3, 3, rng);
        EXPECT_GT(trace_pairing(a, a.adjoint()), 0.0);
        EXPECT_NEAR(trace_pairing(a, a.adjoint()), std::pow(frobenius_norm(a), 2), 1e-11);
    }
}

TEST(Linalg, RankTolRespectsThreshold) {
    const RealMat a{{1, 0}, {0, 1e-20}};
    EXPECT_EQ(rank_tol(a), 1);
    EXPECT_EQ(rank_tol(RealMat::identity(4)), 4);
    EXPECT_EQ(rank_tol(RealMat(3, 3)), 0);
}

TEST(Linalg, SkewCanonicalExamples) {
    const RealMat xi{{0, 3}, {-3, 0}};
    const auto f = skew_canonical(xi);
    ASSERT_EQ(f.pairs.size(), 1u);
    EXPECT_NEAR(f.pairs[0], 3.0, 1e-14);
    EXPECT_TRUE(skew_canonical(RealMat(3, 3)).pairs.empty());
    EXPECT_THROW(skew_canonical(RealMat{{0, 1}, {1, 0}}), PreconditionError);
}

TEST(Linalg, SkewCanonicalRoundTripFuzzed) {
    CounterRng rng(7);
    for (int t = 0; t < 60; ++t) {
        const Index k = rng.uniform_int(1, 10);
        const RealMat g = gaussian_matrix(k, k, rng);
        const RealMat xi = g - g.transpose();
        const auto f = skew_canonical(xi);
        const RealMat back = f.orthogonal.transpose() * skew_block_form(f.pairs, k) * f.orthogonal;
        EXPECT_LE(frobenius_norm(back - xi), 1e-9 * frobenius_norm(xi)) << "k=" << k;
        EXPECT_LE(group_residual(Group::O, f.orthogonal), 1e-11);
        for (std::size_t i = 1; i < f.pairs.size(); ++i) EXPECT_GE(f.pairs[i - 1], f.pairs[i]);
    }
}

TEST(Linalg, SkewCanonicalRepeatedPairs) {
    // Two equal pairs: the top eigenspace of xi^T xi is four-dimensional.
    CounterRng rng(8);
    const RealMat o = random_group_element(Group::O, 5, rng).real();
    const RealMat xi = o.transpose() * skew_block_form({2.0, 2.0}, 5) * o;
    const auto f = skew_canonical(xi);
    ASSERT_EQ(f.pairs.size(), 2u);
    EXPECT_NEAR(f.pairs[0], 2.0, 1e-12);
    EXPECT_NEAR(f.pairs[1], 2.0, 1e-12);
    EXPECT_LE(frobenius_norm(f.orthogonal.transpose() * skew_block_form(f.pairs, 5) * f.orthogonal - xi), 1e-10);
}

TEST(Linalg, MatrixExpOracles) {
    const RealMat z{{0, -1}, {1, 0}};
    const RealMat r = matrix_exp(z * 0.5);
    EXPECT_NEAR(r(0, 0), std::cos(0.5), 1e-15);
    EXPECT_NEAR(r(1, 0), std::sin(0.5), 1e-15);
    const RealMat n{{0, 1}, {0, 0}};
    const RealMat en = matrix_exp(n * 7.0);
    EXPECT_NEAR(en(0, 1), 7.0, 1e-13);
    EXPECT_NEAR(matrix_exp(RealMat{{30.0}})(0, 0), std::exp(30.0), 1e-13 * std::exp(30.0));
}

TEST(Linalg, InverseAndSingular) {
    const RealMat a{{2, 1}, {1, 1}};
    EXPECT_LE(frobenius_norm(a * inverse(a) - RealMat::identity(2)), 1e-15);
    EXPECT_THROW(inverse(RealMat{{1, 2}, {2, 4}}), PreconditionError);
    EXPECT_NEAR(determinant(a), 1.0, 1e-15);
}

TEST(Linalg, CharPolyExactAndFloat) {
    const RationalMat a = to_rational(RealMat{{2, 1}, {0, 3}});
    const auto c = char_poly(a);  // t^2 - 5t + 6
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c[0], Rational(6));
    EXPECT_EQ(c[1], Rational(-5));
    EXPECT_EQ(c[2], Rational(1));
    const auto cf = char_poly(RealMat{{0, -1}, {1, 0}});  // t^2 + 1
    EXPECT_NEAR(cf[0], 1.0, 1e-15);
    EXPECT_NEAR(cf[1], 0.0, 1e-15);
}

TEST(Linalg, ExactRank) {
    EXPECT_EQ(exact_rank(to_rational(RealMat{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})), 2);
    EXPECT_EQ(exact_rank(RationalMat(2, 3)), 0);
}

TEST(Linalg, SelectIndependentColumnsLowestIndexFirst) {
    const RealMat e{{1, 1, 0}, {0, 0, 1}, {0, 0, 0}};
    const auto cols = select_independent_columns(e, 1e-12);
    EXPECT_EQ(cols, (std::vector<Index>{0, 2}));
}

TEST(Linalg, ExtendColumnIsometryComplex) {
    CounterRng rng(10);
    const ComplexMat e = gaussian_complex_matrix(4, 2, rng);
    const ComplexMat u0 = random_group_element(Group::U, 4, rng).complex();
    const ComplexMat ep = u0 * e;
    const ComplexMat u = extend_column_isometry(e, ep, 1e-12);
    EXPECT_LE(group_residual(Group::U, u), 1e-12);
    EXPECT_LE(frobenius_norm(u * e - ep), 1e-12);
}

// ---- Lie algebras and groups --------------------------------------------------

TEST(Lie, BasisSizesAndMembership) {
    for (const Algebra a : {Algebra::u, Algebra::o, Algebra::sp, Algebra::gl}) {
        for (Index n = 1; n <= 4; ++n) {
            const auto basis = algebra_basis(a, n);
            EXPECT_EQ(static_cast<Index>(basis.size()), algebra_dim(a, n)) << algebra_name(a) << n;
            for (const auto& b : basis) EXPECT_LE(b.residual(), 1e-15);
        }
    }
    EXPECT_EQ(algebra_dim(Algebra::sp, 2), 10);
    EXPECT_EQ(algebra_dim(Algebra::u, 3), 9);
}

TEST(Lie, MakeRejectsNonMembers) {
    EXPECT_THROW(LieAlgElem::make(Algebra::o, RealMat::identity(2)), PreconditionError);
    EXPECT_THROW(GroupElem::make(Group::O, RealMat{{2.0}}), PreconditionError);
    EXPECT_NO_THROW(GroupElem::make(Group::Sp, standard_J(2)));
}

TEST(Lie, RandomGroupElementsSatisfyIdentities) {
    CounterRng rng(12);
    for (Index n = 1; n <= 8; ++n) {
        for (const Group g : {Group::U, Group::O, Group::Sp, Group::GL}) {
            const GroupElem e = random_group_element(g, n, rng);
            const double r = e.is_complex() ? group_residual(g, e.complex()) : group_residual(g, e.real());
            EXPECT_LE(r, 1e-10) << group_name(g) << n;
        }
    }
}

TEST(Lie, GroupInverse) {
    CounterRng rng(13);
    for (const Group g : {Group::O, Group::Sp, Group::GL}) {
        const GroupElem e = random_group_element(g, 3, rng);
        EXPECT_LE(frobenius_norm(e.real() * e.inverse().real() - RealMat::identity(e.size())), 1e-12);
    }
    const GroupElem u = random_group_element(Group::U, 3, rng);
    EXPECT_LE(frobenius_norm(u.complex() * u.inverse().complex() - ComplexMat::identity(3)), 1e-12);
}
