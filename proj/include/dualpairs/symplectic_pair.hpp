#pragma once

// The (Sp(2n,R), O(m)) pair on real 2n x m matrices of rank m, with
// Omega(X, Y) = Tr(X^T J Y).

#include <utility>
#include <vector>

#include "dualpairs/lie.hpp"
#include "dualpairs/linalg.hpp"

namespace dualpairs::symplectic {

/// -1/2 E E^T J in sp(2n).
LieAlgElem j_left(const RealMat& e);
/// -1/2 E^T J E in o(m).
LieAlgElem j_right(const RealMat& e);

RealMat act_left(const GroupElem& s, const RealMat& e);   // S E
RealMat act_right(const RealMat& e, const GroupElem& o);  // E O

/// Throws DimensionError on odd row count or m > 2n, PreconditionError if
/// rank_tol(E) < m.
void require_full_rank(const RealMat& e, const Tolerances& tol, const char* what);

/// Symplectic S with S src_i = dst_i for the columns of two 2n x k matrices.
/// Both column sets must be independent and have equal omega-Gram matrices
/// within tol * max(1, ‖src‖_F^2, ‖dst‖_F^2).
///
/// Construction: symplectic Gram-Schmidt on the source Gram matrix, mirrored
/// on the destination by the same coefficients; the leftover radical vectors
/// get partners from a min-norm solve against the processed span; both sides
/// are then completed to Darboux bases by projecting standard basis vectors,
/// and S maps one basis to the other.
GroupElem witt_extend(const RealMat& src, const RealMat& dst, double tol = 1e-9);

/// S in Sp(2n) with S E = E'; requires equal j_right.
WitnessReport witness_left(const RealMat& e, const RealMat& e_prime, const Tolerances& tol = {});
/// g in O(m) with E g = E'; requires equal j_left. In the orthogonal-map
/// phrasing O E^T = E'^T, the returned element is g = O^T.
WitnessReport witness_right(const RealMat& e, const RealMat& e_prime, const Tolerances& tol = {});

struct OrbitInvariants {
    Index n = 0;
    Index m = 0;
    Index p = 0;
    std::vector<double> sigmas;  // descending, positive
    Index q = 0;                 // m - 2p
    Index r = 0;                 // n - m + p

    // From (n, m, sigmas); throws PreconditionError if q or r would be negative.
    static OrbitInvariants from_sigmas(Index n, Index m, std::vector<double> sigmas);
    void validate() const;
};

// The template D: columns (p | q | p), rows (p, q, r | p, q, r).
RealMat build_d(const OrbitInvariants& inv);

struct XuDecomposition {
    GroupElem s;
    RealMat d;
    GroupElem o;
    OrbitInvariants inv;
};

/// E = S D O with S symplectic, O orthogonal and D = build_d(inv).
XuDecomposition xu_decompose(const RealMat& e, const Tolerances& tol = {});

/// j_left(build_d(inv)) written out blockwise: -sigma_i^2/2 at (i, n+i),
/// +sigma_i^2/2 at (n+i, i), -1/2 at (p+j, n+p+j).
LieAlgElem normal_form_left(const OrbitInvariants& inv);
/// diag(-1/2 [[0, sigma_i^2], [-sigma_i^2, 0]], ..., 0_q).
LieAlgElem normal_form_right(const OrbitInvariants& inv);
std::pair<LieAlgElem, LieAlgElem> correspond(const OrbitInvariants& inv);

/// Orbit label of j_left(E), read from its spectrum +-i sigma^2/2.
OrbitInvariants left_invariants(const RealMat& e, const Tolerances& tol = {});
/// Orbit label of j_right(E), read from its skew canonical form.
OrbitInvariants right_invariants(const RealMat& e, const Tolerances& tol = {});

}  // namespace dualpairs::symplectic
