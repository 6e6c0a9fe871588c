#include "dualpairs/seesaw.hpp"

#include <algorithm>
#include <cmath>

#include "dualpairs/symplectic_pair.hpp"
#include "dualpairs/unitary_pair.hpp"

namespace dualpairs::seesaw {

namespace {

void require_algebra(const LieAlgElem& x, Algebra a, const char* what) {
    if (x.algebra() != a) throw PreconditionError(std::string(what) + ": expected an element of " + algebra_name(a));
}

}  // namespace

LieAlgElem embed_u_to_sp(const LieAlgElem& zeta) {
    require_algebra(zeta, Algebra::u, "embed_u_to_sp");
    const RealMat z1 = real_part(zeta.complex());
    const RealMat z2 = imag_part(zeta.complex());
    return LieAlgElem::make(Algebra::sp, vstack(hstack(z1, -z2), hstack(z2, z1)));
}

LieAlgElem embed_gl_to_sp(const LieAlgElem& zeta) {
    require_algebra(zeta, Algebra::gl, "embed_gl_to_sp");
    return LieAlgElem::make(Algebra::sp, block_diag<double>({zeta.real(), -zeta.real().transpose()}));
}

RealMat complex_to_real(const ComplexMat& e) { return vstack(real_part(e), imag_part(e)); }

LieAlgElem restrict_u_to_o(const LieAlgElem& mu) {
    require_algebra(mu, Algebra::u, "restrict_u_to_o");
    return LieAlgElem::make(Algebra::o, real_part(mu.complex()));
}

LieAlgElem restrict_gl_to_o(const LieAlgElem& xi) {
    require_algebra(xi, Algebra::gl, "restrict_gl_to_o");
    return LieAlgElem::make(Algebra::o, (xi.real() - xi.real().transpose()) * 0.5);
}

double restriction_adjoint_residual(const LieAlgElem& mu) {
    const bool unitary = mu.algebra() == Algebra::u;
    const LieAlgElem r = unitary ? restrict_u_to_o(mu) : restrict_gl_to_o(mu);
    double worst = 0.0;
    for (const auto& eta : algebra_basis(Algebra::o, mu.size())) {
        const double direct = unitary ? trace_pairing(mu.complex(), to_complex(eta.real())) : trace_pairing(mu.real(), eta.real());
        worst = std::max(worst, std::abs(trace_pairing(r.real(), eta.real()) - direct));
    }
    return worst;
}

DiagramResiduals check_diagram_sp_u(const ComplexMat& e) {
    const RealMat er = complex_to_real(e);
    const RealMat jsp = symplectic::j_left(er).real();
    const ComplexMat ju = unitary::j_left(e).complex();
    DiagramResiduals out;
    for (const auto& zeta : algebra_basis(Algebra::u, e.rows())) {
        const double via_sp = trace_pairing(jsp, embed_u_to_sp(zeta).real());
        const double via_u = trace_pairing(ju, zeta.complex());
        out.left = std::max(out.left, std::abs(via_sp - via_u));
    }
    out.right = frobenius_norm(restrict_u_to_o(unitary::j_right(e)).real() - symplectic::j_right(er).real());
    return out;
}

DiagramResiduals check_diagram_sp_gl(const gl::CotangentPoint& x) {
    const RealMat er = x.stacked();
    const RealMat jsp = symplectic::j_left(er).real();
    const RealMat jgl = gl::j_left(x).real();
    DiagramResiduals out;
    for (const auto& zeta : algebra_basis(Algebra::gl, x.n())) {
        const double via_sp = trace_pairing(jsp, embed_gl_to_sp(zeta).real());
        const double via_gl = trace_pairing(jgl, zeta.real());
        out.left = std::max(out.left, std::abs(via_sp - via_gl));
    }
    out.right = frobenius_norm(restrict_gl_to_o(gl::j_right(x)).real() - symplectic::j_right(er).real());
    return out;
}

}  // namespace dualpairs::seesaw
