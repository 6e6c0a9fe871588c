#pragma once

// The (U(n), U(m)) pair on complex n x m matrices with Omega = Im Tr(E^dagger F).

#include <vector>

#include "dualpairs/lie.hpp"
#include "dualpairs/linalg.hpp"

namespace dualpairs::unitary {

/// (i/2) E E^dagger in u(n).
LieAlgElem j_left(const ComplexMat& e);
/// (i/2) E^dagger E in u(m).
LieAlgElem j_right(const ComplexMat& e);

ComplexMat act_left(const GroupElem& u, const ComplexMat& e);   // U E
ComplexMat act_right(const ComplexMat& e, const GroupElem& v);  // E V

/// U in U(n) with U E = E'. Requires j_right(E) = j_right(E') within
/// tol.eq_tol * max(1, ‖j_right(E)‖, ‖j_right(E')‖); rank-deficient E is fine.
WitnessReport witness_left(const ComplexMat& e, const ComplexMat& e_prime, const Tolerances& tol = {});
/// V in U(m) with E V = E', via witness_left on the conjugate transposes.
WitnessReport witness_right(const ComplexMat& e, const ComplexMat& e_prime, const Tolerances& tol = {});

/// Singular values sigma_1 >= ... >= sigma_min(n,m) >= 0.
std::vector<double> orbit_invariants(const ComplexMat& e);

/// diag((i/2) sigma_k^2) padded with zeros to size `size`.
ComplexMat normal_form(const std::vector<double>& sigmas, Index size);

/// Numerical rank of X -> (i/2)(X^dagger E + E^dagger X) over the real basis
/// {E_ij, i E_ij} of complex n x m matrices.
Index jacobian_rank_right(const ComplexMat& e, const Tolerances& tol = {});

}  // namespace dualpairs::unitary
