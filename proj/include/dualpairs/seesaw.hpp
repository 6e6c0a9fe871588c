#pragma once

// Algebra embeddings u(n) -> sp(2n), gl(n) -> sp(2n), their dual
// restrictions onto o(m), and the two commuting diagrams relating the
// momentum maps of the three pairs.

#include "dualpairs/gl_pair.hpp"
#include "dualpairs/lie.hpp"

namespace dualpairs::seesaw {

/// zeta1 + i zeta2 -> [[zeta1, -zeta2], [zeta2, zeta1]].
LieAlgElem embed_u_to_sp(const LieAlgElem& zeta);
/// zeta -> diag(zeta, -zeta^T).
LieAlgElem embed_gl_to_sp(const LieAlgElem& zeta);

/// E1 + i E2 -> [E1; E2].
RealMat complex_to_real(const ComplexMat& e);

/// Real part. Throws PreconditionError unless mu is in u(m).
LieAlgElem restrict_u_to_o(const LieAlgElem& mu);
/// (xi - xi^T) / 2. Throws PreconditionError unless xi is in gl(m).
LieAlgElem restrict_gl_to_o(const LieAlgElem& xi);

/// max over a skew basis eta of |<<restrict(mu), eta>> - <<mu, eta>>|.
double restriction_adjoint_residual(const LieAlgElem& mu);

struct DiagramResiduals {
    double left = 0.0;
    double right = 0.0;
};

/// left: max over a u(n) basis of |<<j_L^sp(E_R), l(zeta)>> - <<j_L^u(E), zeta>>|;
/// right: ‖restrict_u_to_o(j_R^u(E)) - j_R^sp(E_R)‖.
DiagramResiduals check_diagram_sp_u(const ComplexMat& e);

/// Same with l = embed_gl_to_sp, restriction = skew part and E_R = [Q; P].
DiagramResiduals check_diagram_sp_gl(const gl::CotangentPoint& x);

}  // namespace dualpairs::seesaw
