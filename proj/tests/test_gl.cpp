#include <gtest/gtest.h>

#include <cmath>

#include "dualpairs/gl_pair.hpp"

using namespace dualpairs;
using gl::CotangentPoint;
using gl::JordanData;

namespace {

CotangentPoint random_point(Index n, Index m, CounterRng& rng) {
    for (;;) {
        CotangentPoint x{gaussian_matrix(n, m, rng), gaussian_matrix(n, m, rng)};
        if (rank_tol(x.q) == m && rank_tol(x.p) == m) return x;
    }
}

RealMat random_invertible(Index n, CounterRng& rng) { return random_group_element(Group::GL, n, rng).real(); }

double det_abs_normalized(const RealMat& a) {
    double norms = 1.0;
    for (Index j = 0; j < a.cols(); ++j) norms *= frobenius_norm(a.col(j));
    return std::abs(determinant(a)) / norms;
}

JordanData jd_of(std::vector<gl::JordanBlock> blocks, std::vector<Index> nilpotent, Index n, Index m) {
    JordanData jd;
    jd.blocks = std::move(blocks);
    jd.nilpotent = std::move(nilpotent);
    jd.n = n;
    jd.m = m;
    return jd;
}

}  // namespace

TEST(GlMomentum, Examples) {
    const CotangentPoint id{RealMat::identity(3), RealMat::identity(3)};
    EXPECT_EQ(gl::j_left(id).real(), RealMat::identity(3));
    EXPECT_EQ(gl::j_right(id).real(), RealMat::identity(3));
    const CotangentPoint x{RealMat{{1.0}, {0.0}}, RealMat{{0.0}, {1.0}}};
    EXPECT_EQ(gl::j_left(x).real(), (RealMat{{0.0, 1.0}, {0.0, 0.0}}));
    EXPECT_EQ(gl::j_right(x).real(), RealMat(1, 1));
}

TEST(GlMomentum, TracesAndRightRankBound) {
    CounterRng rng(51);
    for (int t = 0; t < 50; ++t) {
        const Index n = rng.uniform_int(1, 6), m = rng.uniform_int(1, n);
        const auto x = random_point(n, m, rng);
        EXPECT_NEAR(gl::j_left(x).real().trace(), gl::j_right(x).real().trace(), 1e-12 * std::max(1.0, frobenius_norm(x.q) * frobenius_norm(x.p)));
        EXPECT_EQ(rank_tol(gl::j_left(x).real()), m);
        EXPECT_GE(rank_tol(gl::j_right(x).real()), 2 * m - n);
    }
}

TEST(GlActions, ScalarExample) {
    const CotangentPoint x{RealMat::identity(2), RealMat::identity(2)};
    const auto y = gl::act_left(RealMat::identity(2) * 2.0, x);
    EXPECT_EQ(y.q, RealMat::identity(2) * 2.0);
    EXPECT_LE(max_abs(y.p - RealMat::identity(2) * 0.5), 1e-15);
    EXPECT_EQ(gl::act_left(RealMat::identity(2), x), x);
}

TEST(GlActions, RejectSingular) {
    const CotangentPoint x{RealMat::identity(2), RealMat::identity(2)};
    EXPECT_THROW(gl::act_left(RealMat(2, 2), x), PreconditionError);
    EXPECT_THROW(gl::act_right(x, RealMat(2, 2)), PreconditionError);
}

TEST(GlActions, PreserveOmega) {
    CounterRng rng(52);
    for (int t = 0; t < 30; ++t) {
        const Index n = rng.uniform_int(1, 5), m = rng.uniform_int(1, n);
        const CotangentPoint u{gaussian_matrix(n, m, rng), gaussian_matrix(n, m, rng)};
        const CotangentPoint v{gaussian_matrix(n, m, rng), gaussian_matrix(n, m, rng)};
        const RealMat a = random_invertible(n, rng);
        const RealMat b = random_invertible(m, rng);
        const double w = omega_real(u.stacked(), v.stacked());
        const double scale = std::max(1.0, frobenius_norm(u.stacked()) * frobenius_norm(v.stacked()));
        EXPECT_NEAR(omega_real(gl::act_left(a, u).stacked(), gl::act_left(a, v).stacked()), w, 1e-10 * scale);
        EXPECT_NEAR(omega_real(gl::act_right(u, b).stacked(), gl::act_right(v, b).stacked()), w, 1e-10 * scale);
    }
}

TEST(GlMomentum, EquivarianceAndLevelInvariance) {
    CounterRng rng(53);
    for (int t = 0; t < 40; ++t) {
        const Index n = rng.uniform_int(1, 6), m = rng.uniform_int(1, n);
        const auto x = random_point(n, m, rng);
        const RealMat a = random_invertible(n, rng);
        const RealMat b = random_invertible(m, rng);
        const RealMat jl = gl::j_left(x).real(), jr = gl::j_right(x).real();
        EXPECT_LE(relative_residual(gl::j_left(gl::act_left(a, x)).real(), a * jl * inverse(a)), 1e-9);
        EXPECT_LE(relative_residual(gl::j_right(gl::act_right(x, b)).real(), inverse(b) * jr * b), 1e-9);
        EXPECT_LE(relative_residual(gl::j_left(gl::act_right(x, b)).real(), jl), 1e-10);
        EXPECT_LE(relative_residual(gl::j_right(gl::act_left(a, x)).real(), jr), 1e-10);
    }
}

TEST(GlWitnessRight, ScalarExample) {
    const CotangentPoint x{RealMat{{1.0}, {0.0}}, RealMat{{0.0}, {1.0}}};
    const CotangentPoint y{RealMat{{2.0}, {0.0}}, RealMat{{0.0}, {0.5}}};
    const auto rep = gl::witness_right(x, y);
    EXPECT_NEAR(rep.witness.real()(0, 0), 2.0, 1e-15);
    EXPECT_LE(rep.residual, 1e-15);
}

TEST(GlWitnessRight, GroupOrbitInputs) {
    CounterRng rng(54);
    for (int t = 0; t < 40; ++t) {
        const Index n = rng.uniform_int(1, 6), m = rng.uniform_int(1, n);
        const auto x = random_point(n, m, rng);
        EXPECT_LE(gl::witness_right(x, x).residual, 1e-12);
        const auto rep = gl::witness_right(x, gl::act_right(x, random_invertible(m, rng)));
        EXPECT_LE(rep.residual, 1e-9);
    }
}

TEST(GlCompletePair, Examples) {
    const RealMat e1{{1.0}, {0.0}};
    const RealMat e2{{0.0}, {1.0}};
    const RealMat x = gl::complete_pair(e1, e2);
    ASSERT_EQ(x.cols(), 1);
    EXPECT_DOUBLE_EQ(std::abs(determinant(hstack(e1, x))), 1.0);
    EXPECT_DOUBLE_EQ(std::abs(determinant(hstack(e2, x))), 1.0);
    const RealMat same = gl::complete_pair(e1, e1);
    EXPECT_GT(std::abs(determinant(hstack(e1, same))), 0.0);
    EXPECT_EQ(gl::complete_pair(RealMat::identity(2), RealMat::identity(2)).cols(), 0);
}

TEST(GlCompletePair, RandomPairsStayInvertible) {
    CounterRng rng(55);
    for (int t = 0; t < 100; ++t) {
        const Index n = rng.uniform_int(2, 6), m = rng.uniform_int(1, n - 1);
        const auto a = random_point(n, m, rng);
        const RealMat x = gl::complete_pair(a.q, a.p);
        ASSERT_EQ(x.cols(), n - m);
        EXPECT_GE(det_abs_normalized(hstack(a.q, x)), 1e-8);
        EXPECT_GE(det_abs_normalized(hstack(a.p, x)), 1e-8);
    }
}

TEST(GlCompletePair, EveryBasisVectorInSomeSpan) {
    const RealMat q1{{1.0, 0.0}, {0.0, 1.0}, {0.0, 0.0}};
    const RealMat q2{{1.0, 0.0}, {0.0, 0.0}, {0.0, 1.0}};
    const RealMat x = gl::complete_pair(q1, q2);
    EXPECT_GE(det_abs_normalized(hstack(q1, x)), 1e-8);
    EXPECT_GE(det_abs_normalized(hstack(q2, x)), 1e-8);
}

TEST(GlWitnessLeft, SquareCase) {
    CounterRng rng(56);
    const auto x = random_point(2, 2, rng);
    const RealMat a0 = random_invertible(2, rng);
    const auto y = gl::act_left(a0, x);
    const auto rep = gl::witness_left(x, y);
    EXPECT_LE(relative_residual(rep.witness.real(), y.q * inverse(x.q)), 1e-10);
    EXPECT_LE(rep.residual, 1e-10);
}

TEST(GlWitnessLeft, GroupOrbitInputs) {
    CounterRng rng(57);
    for (int t = 0; t < 60; ++t) {
        const Index n = rng.uniform_int(1, 6), m = rng.uniform_int(1, n);
        const auto x = random_point(n, m, rng);
        EXPECT_LE(gl::witness_left(x, x).residual, 1e-10);
        const auto rep = gl::witness_left(x, gl::act_left(random_invertible(n, rng), x));
        EXPECT_LE(rep.residual, 1e-8);
        ASSERT_TRUE(rep.condition.has_value());
        EXPECT_GE(*rep.condition, 1.0);
    }
}

TEST(GlWitness, RejectsDifferentLevels) {
    const CotangentPoint x{RealMat{{1.0}, {0.0}}, RealMat{{1.0}, {0.0}}};
    const CotangentPoint y{RealMat{{1.0}, {0.0}}, RealMat{{2.0}, {0.0}}};
    EXPECT_THROW(gl::witness_left(x, y), PreconditionError);
    EXPECT_THROW(gl::witness_right(x, y), PreconditionError);
}

TEST(GlImage, Examples) {
    EXPECT_TRUE(gl::in_image_left(RealMat::identity(3), 3));
    EXPECT_FALSE(gl::in_image_left(RealMat(3, 3), 1));
    EXPECT_TRUE(gl::in_image_left(RealMat{{0.0, 1.0}, {0.0, 0.0}}, 1));
    EXPECT_TRUE(gl::in_image_right(RealMat(2, 2), 4));
    EXPECT_FALSE(gl::in_image_right(RealMat(2, 2), 2));
    EXPECT_TRUE(gl::in_image_right(RealMat::identity(3), 3));
    EXPECT_TRUE(gl::in_image_right(RealMat::identity(3), 7));
}

TEST(GlJordanData, Validation) {
    EXPECT_NO_THROW(jd_of({{cplx(2.0, 0.0), 1}}, {}, 1, 1).validate());
    EXPECT_THROW(jd_of({{cplx(0.0, 0.0), 1}}, {}, 1, 1).validate(), PreconditionError);
    EXPECT_THROW(jd_of({{cplx(1.0, 1.0), 1}}, {}, 1, 1).validate(), PreconditionError);
    EXPECT_THROW(jd_of({{cplx(1.0, 0.0), 1}}, {}, 2, 2).validate(), PreconditionError);
    EXPECT_THROW(jd_of({}, {2, 2}, 3, 2).validate(), PreconditionError);  // q > n - m
    EXPECT_THROW(jd_of({}, {1}, 2, 0).validate(), PreconditionError);
}

TEST(GlBuildQp, NilpotentExample) {
    const auto jd = jd_of({}, {2}, 2, 1);
    const auto [q, p] = gl::build_qp_from_jordan_exact(jd);
    EXPECT_EQ(to_real(q), (RealMat{{1.0}, {0.0}}));
    EXPECT_EQ(to_real(p), (RealMat{{0.0}, {1.0}}));
    EXPECT_EQ(q * p.transpose(), gl::nilpotent_block_exact(2));
    EXPECT_EQ(to_real(p.transpose() * q), RealMat(1, 1));
}

TEST(GlBuildQp, ScalarExample) {
    const auto x = gl::build_qp_from_jordan(jd_of({{cplx(5.0, 0.0), 1}}, {}, 1, 1));
    EXPECT_EQ(x.q, (RealMat{{5.0}}));
    EXPECT_EQ(x.p, (RealMat{{1.0}}));
    EXPECT_EQ(gl::j_left(x).real(), (RealMat{{5.0}}));
    EXPECT_EQ(gl::j_right(x).real(), (RealMat{{5.0}}));
}

TEST(GlBuildQp, RotationBlockExample) {
    const auto jd = jd_of({{cplx(0.0, 1.0), 2}}, {}, 4, 2);
    const auto x = gl::build_qp_from_jordan(jd);
    RealMat expected(4, 4);
    expected(0, 1) = 1.0;
    expected(1, 0) = -1.0;
    EXPECT_EQ(gl::j_left(x).real(), expected);
    EXPECT_EQ(gl::j_right(x).real(), (RealMat{{0.0, 1.0}, {-1.0, 0.0}}));
}

TEST(GlCorrespond, Examples) {
    const auto [z1, x1] = gl::jordan_correspond_exact(jd_of({{cplx(1.0, 0.0), 1}}, {}, 1, 1));
    EXPECT_EQ(to_real(z1), (RealMat{{1.0}}));
    EXPECT_EQ(to_real(x1), (RealMat{{1.0}}));
    const auto [z2, x2] = gl::jordan_correspond_exact(jd_of({}, {2}, 2, 1));
    EXPECT_EQ(z2, gl::nilpotent_block_exact(2));
    EXPECT_EQ(to_real(x2), RealMat(1, 1));
}

TEST(GlCorrespond, MixedBlocksMatchBuiltMomentaExactly) {
    const auto jd = jd_of({{cplx(-2.0, 0.0), 2}, {cplx(1.0, 2.0), 2}}, {3, 2}, 9, 7).canonical();
    const auto [q, p] = gl::build_qp_from_jordan_exact(jd);
    const auto [z, x] = gl::jordan_correspond_exact(jd);
    EXPECT_EQ(q * p.transpose(), z);
    EXPECT_EQ(p.transpose() * q, x);
    EXPECT_EQ(exact_rank(q), 7);
    EXPECT_EQ(exact_rank(p), 7);
}

TEST(GlJordanStructure, DiagonalExample) {
    RealMat a(3, 3);
    a(0, 0) = 3.0;
    a(1, 1) = 3.0;
    const auto jd = gl::jordan_structure(a, Side::left, 3, 2);
    EXPECT_EQ(jd, jd_of({{cplx(3.0, 0.0), 1}, {cplx(3.0, 0.0), 1}}, {}, 3, 2));
}

TEST(GlJordanStructure, NilpotentExample) {
    const RealMat a = to_real(gl::nilpotent_block_exact(3));
    const auto jd = gl::jordan_structure(a, Side::left, 3, 2);
    EXPECT_TRUE(jd.blocks.empty());
    EXPECT_EQ(jd.nilpotent, (std::vector<Index>{3}));
}

TEST(GlJordanStructure, RoundTripIntegerData) {
    const std::vector<JordanData> cases{
        jd_of({{cplx(1.0, 0.0), 1}, {cplx(-2.0, 0.0), 2}}, {2}, 5, 4),
        jd_of({{cplx(3.0, 0.0), 3}}, {2, 2}, 7, 5),
        jd_of({{cplx(0.0, 1.0), 2}, {cplx(2.0, 0.0), 1}}, {}, 4, 3),
        jd_of({{cplx(1.0, 1.0), 4}}, {2}, 6, 5),
    };
    for (const auto& raw : cases) {
        const auto jd = raw.canonical();
        const auto [z, x] = gl::jordan_correspond(jd);
        EXPECT_EQ(gl::jordan_structure(z, Side::left, jd.n, jd.m), jd);
        EXPECT_EQ(gl::jordan_structure(x, Side::right, jd.n, jd.m), jd);
    }
}

TEST(GlJordanStructure, ConjugatedFloatingInput) {
    CounterRng rng(58);
    const auto jd = jd_of({{cplx(1.0, 0.0), 1}, {cplx(-2.0, 0.0), 1}, {cplx(0.5, 1.5), 2}}, {3}, 7, 6).canonical();
    const auto x = gl::build_qp_from_jordan(jd);
    const auto moved = gl::act_right(gl::act_left(random_invertible(7, rng), x), random_invertible(6, rng));
    for (const Side side : {Side::left, Side::right}) {
        const RealMat mom = side == Side::left ? gl::j_left(moved).real() : gl::j_right(moved).real();
        const auto got = gl::jordan_structure(mom, side, 7, 6);
        EXPECT_EQ(got.nilpotent, jd.nilpotent);
        ASSERT_EQ(got.blocks.size(), jd.blocks.size());
        for (std::size_t i = 0; i < jd.blocks.size(); ++i) {
            EXPECT_EQ(got.blocks[i].size, jd.blocks[i].size);
            EXPECT_LE(std::abs(got.blocks[i].lambda - jd.blocks[i].lambda), 1e-9);
        }
    }
}

TEST(GlJordanStructure, RejectsWrongShape) {
    EXPECT_THROW(gl::jordan_structure(RealMat::identity(2), Side::left, 3, 2), DimensionError);
}
