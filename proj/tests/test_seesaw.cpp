#include <gtest/gtest.h>

#include "dualpairs/seesaw.hpp"
#include "dualpairs/symplectic_pair.hpp"
#include "dualpairs/unitary_pair.hpp"

using namespace dualpairs;

TEST(SeesawEmbed, UnitaryScalar) {
    const auto z = seesaw::embed_u_to_sp(LieAlgElem::make(Algebra::u, ComplexMat{{cplx(0.0, 1.0)}}));
    EXPECT_EQ(z.algebra(), Algebra::sp);
    EXPECT_EQ(z.real(), (RealMat{{0.0, -1.0}, {1.0, 0.0}}));
}

TEST(SeesawEmbed, GlNilpotent) {
    const auto z = seesaw::embed_gl_to_sp(LieAlgElem::make(Algebra::gl, RealMat{{0.0, 1.0}, {0.0, 0.0}}));
    RealMat want(4, 4);
    want(0, 1) = 1.0;
    want(3, 2) = -1.0;
    EXPECT_EQ(z.real(), want);
}

TEST(SeesawEmbed, LandsInSpAndIsAMorphism) {
    CounterRng rng(81);
    for (int t = 0; t < 30; ++t) {
        const Index n = rng.uniform_int(1, 4);
        const auto a = random_algebra_element(Algebra::u, n, rng);
        const auto b = random_algebra_element(Algebra::u, n, rng);
        const RealMat ea = seesaw::embed_u_to_sp(a).real();
        const RealMat eb = seesaw::embed_u_to_sp(b).real();
        EXPECT_LE(algebra_residual(Algebra::sp, ea), 1e-14);
        const RealMat lhs = seesaw::embed_u_to_sp(LieAlgElem::make(Algebra::u, commutator(a.complex(), b.complex()))).real();
        EXPECT_LE(max_abs(lhs - commutator(ea, eb)), 1e-12);

        const auto c = random_algebra_element(Algebra::gl, n, rng);
        const auto d = random_algebra_element(Algebra::gl, n, rng);
        const RealMat ec = seesaw::embed_gl_to_sp(c).real();
        const RealMat ed = seesaw::embed_gl_to_sp(d).real();
        EXPECT_LE(algebra_residual(Algebra::sp, ec), 1e-14);
        const RealMat lhs2 = seesaw::embed_gl_to_sp(LieAlgElem::make(Algebra::gl, commutator(c.real(), d.real()))).real();
        EXPECT_LE(max_abs(lhs2 - commutator(ec, ed)), 1e-12);
    }
}

TEST(SeesawEmbed, RejectsWrongAlgebra) {
    EXPECT_THROW(seesaw::embed_u_to_sp(LieAlgElem::make(Algebra::gl, RealMat(2, 2))), PreconditionError);
    EXPECT_THROW(seesaw::embed_gl_to_sp(LieAlgElem::make(Algebra::o, RealMat(2, 2))), PreconditionError);
}

TEST(SeesawRealify, ScalarAndOmega) {
    EXPECT_EQ(seesaw::complex_to_real(ComplexMat{{cplx(0.0, 1.0)}}), (RealMat{{0.0}, {1.0}}));
    CounterRng rng(82);
    for (int t = 0; t < 20; ++t) {
        const Index n = rng.uniform_int(1, 4), m = rng.uniform_int(1, 4);
        const ComplexMat x = gaussian_complex_matrix(n, m, rng);
        const ComplexMat y = gaussian_complex_matrix(n, m, rng);
        // Omega(X, Y) = Im Tr(X^dagger Y) on C^{n x m}.
        const double lhs = (x.adjoint() * y).trace().imag();
        EXPECT_NEAR(omega_real(seesaw::complex_to_real(x), seesaw::complex_to_real(y)), lhs, 1e-12);
    }
}

TEST(SeesawRestrict, Examples) {
    const auto r = seesaw::restrict_gl_to_o(LieAlgElem::make(Algebra::gl, RealMat{{0.0, 1.0}, {0.0, 0.0}}));
    EXPECT_EQ(r.algebra(), Algebra::o);
    EXPECT_EQ(r.real(), (RealMat{{0.0, 0.5}, {-0.5, 0.0}}));
    const ComplexMat mu{{cplx(0.0, 1.0), cplx(2.0, 1.0)}, {cplx(-2.0, 1.0), cplx(0.0, -3.0)}};
    EXPECT_EQ(seesaw::restrict_u_to_o(LieAlgElem::make(Algebra::u, mu)).real(), (RealMat{{0.0, 2.0}, {-2.0, 0.0}}));
    EXPECT_THROW(seesaw::restrict_u_to_o(LieAlgElem::make(Algebra::gl, RealMat(2, 2))), PreconditionError);
}

TEST(SeesawRestrict, AdjointToInclusion) {
    CounterRng rng(83);
    for (int t = 0; t < 30; ++t) {
        const Index m = rng.uniform_int(1, 5);
        EXPECT_LE(seesaw::restriction_adjoint_residual(random_algebra_element(Algebra::u, m, rng)), 1e-12);
        EXPECT_LE(seesaw::restriction_adjoint_residual(random_algebra_element(Algebra::gl, m, rng)), 1e-12);
    }
}

TEST(SeesawDiagrams, ZeroAndScalar) {
    const auto z = seesaw::check_diagram_sp_u(ComplexMat(2, 1));
    EXPECT_EQ(z.left, 0.0);
    EXPECT_EQ(z.right, 0.0);
    const auto s = seesaw::check_diagram_sp_u(ComplexMat{{cplx(1.0, 2.0)}});
    EXPECT_LE(s.left, 1e-14);
    EXPECT_LE(s.right, 1e-14);
    const auto g = seesaw::check_diagram_sp_gl({RealMat(2, 1), RealMat(2, 1)});
    EXPECT_EQ(g.left, 0.0);
    EXPECT_EQ(g.right, 0.0);
}

TEST(SeesawDiagrams, RandomPoints) {
    CounterRng rng(84);
    for (int t = 0; t < 100; ++t) {
        const Index n = rng.uniform_int(1, 4), m = rng.uniform_int(1, n);
        const auto u = seesaw::check_diagram_sp_u(gaussian_complex_matrix(n, m, rng));
        EXPECT_LE(u.left, 1e-11);
        EXPECT_LE(u.right, 1e-11);
        const auto g = seesaw::check_diagram_sp_gl({gaussian_matrix(n, m, rng), gaussian_matrix(n, m, rng)});
        EXPECT_LE(g.left, 1e-11);
        EXPECT_LE(g.right, 1e-11);
    }
}

TEST(SeesawDiagrams, GlRightIsSkewPartOfMomentum) {
    CounterRng rng(85);
    for (int t = 0; t < 20; ++t) {
        const Index n = rng.uniform_int(1, 4), m = rng.uniform_int(1, n);
        const RealMat q = gaussian_matrix(n, m, rng);
        const RealMat p = gaussian_matrix(n, m, rng);
        RealMat er(2 * n, m);
        er.set_block(0, 0, q);
        er.set_block(n, 0, p);
        const RealMat want = (p.transpose() * q - q.transpose() * p) * 0.5;
        EXPECT_LE(max_abs(symplectic::j_right(er).real() - want), 1e-12);
    }
}
