#pragma once

// The (GL(n,R), GL(m,R)) pair on the cotangent bundle of real n x m matrices,
// restricted to points (Q, P) with both factors of rank m.
//
//   A . (Q, P) = (A Q, A^{-T} P)        (Q, P) . B = (Q B, P B^{-T})
//   j_L(Q, P) = Q P^T                   j_R(Q, P) = P^T Q

#include <utility>
#include <vector>

#include "dualpairs/lie.hpp"
#include "dualpairs/linalg.hpp"

namespace dualpairs::gl {

struct CotangentPoint {
    RealMat q;
    RealMat p;

    Index n() const { return q.rows(); }
    Index m() const { return q.cols(); }
    // Throws DimensionError unless Q and P have the same shape with m <= n.
    void validate_shape() const;
    // [Q; P], the 2n x m real form sharing Omega with the other pairs.
    RealMat stacked() const { return vstack(q, p); }
    static CotangentPoint from_stacked(const RealMat& e);

    friend bool operator==(const CotangentPoint&, const CotangentPoint&) = default;
};

LieAlgElem j_left(const CotangentPoint& x);
LieAlgElem j_right(const CotangentPoint& x);

/// Throws PreconditionError (singular A / B) or DimensionError.
CotangentPoint act_left(const RealMat& a, const CotangentPoint& x);
CotangentPoint act_right(const CotangentPoint& x, const RealMat& b);
CotangentPoint act_left(const GroupElem& a, const CotangentPoint& x);
CotangentPoint act_right(const CotangentPoint& x, const GroupElem& b);

void require_full_rank(const CotangentPoint& x, const Tolerances& tol, const char* what);

/// ‖g.x - x'‖ / max(1, ‖x'‖) with norms taken over the stacked [Q; P].
double point_residual(const CotangentPoint& gx, const CotangentPoint& x_prime);

/// B = argmin ‖Q B - Q'‖ (exact when j_left agrees).
WitnessReport witness_right(const CotangentPoint& x, const CotangentPoint& x_prime, const Tolerances& tol = {});

/// A with A.(Q, P) = (Q', P'), built as A = [Q' C X][Q X]^{-1} where
/// C^T = [P Y][P' Y]^{-1}, Y = complete_pair(P, P'), X = complete_pair(Q, C^{-1} Q').
/// For m = n this is A = Q' Q^{-1}. The report carries cond([Q X]).
WitnessReport witness_left(const CotangentPoint& x, const CotangentPoint& x_prime, const Tolerances& tol = {});

/// X (n x (n-m)) with [Q1 X] and [Q2 X] both invertible. Columns are chosen
/// one at a time from e_i, then e_i + e_j, then e_i - e_j (i < j), taking the
/// candidate farthest from both current spans (first one on ties).
RealMat complete_pair(const RealMat& q1, const RealMat& q2, const Tolerances& tol = {});

/// rank(zeta) == m.
bool in_image_left(const RealMat& zeta, Index m, const Tolerances& tol = {});
/// rank(xi) >= 2m - n with m = xi.rows().
bool in_image_right(const RealMat& xi, Index n, const Tolerances& tol = {});

// ---- Jordan data -----------------------------------------------------------

struct JordanBlock {
    cplx lambda;  // nonzero; Im >= 0
    Index size;   // real block size (even when Im > 0)

    friend bool operator==(const JordanBlock&, const JordanBlock&) = default;
};

struct JordanData {
    std::vector<JordanBlock> blocks;
    std::vector<Index> nilpotent;  // d_j >= 2
    Index n = 0;
    Index m = 0;

    Index q() const { return static_cast<Index>(nilpotent.size()); }
    // Throws PreconditionError if any invariant fails.
    void validate() const;
    // blocks by (Re asc, Im asc, size desc); nilpotent sizes descending.
    JordanData canonical() const;
    // Every block eigenvalue has an exact 64-bit rational form.
    bool is_rational() const;

    friend bool operator==(const JordanData&, const JordanData&) = default;
};

/// Real Jordan block of size c: lambda on the diagonal and 1 above it for real
/// lambda; [[a, b], [-b, a]] blocks with I_2 above them for lambda = a + ib.
RealMat real_jordan_block(cplx lambda, Index size);
RationalMat real_jordan_block_exact(cplx lambda, Index size);
RationalMat nilpotent_block_exact(Index d);  // J_d(0)

CotangentPoint build_qp_from_jordan(const JordanData& jd);
/// Exact (Q, P); throws InputError if an eigenvalue is not rational.
std::pair<RationalMat, RationalMat> build_qp_from_jordan_exact(const JordanData& jd);

/// (zeta, xi): zeta = diag(J_c(lambda)..., J_d(0)..., 0_{n-m-q}),
/// xi = diag(J_c(lambda)..., J_{d-1}(0)...).
std::pair<RealMat, RealMat> jordan_correspond(const JordanData& jd);
std::pair<RationalMat, RationalMat> jordan_correspond_exact(const JordanData& jd);

/// Jordan data of an element of the left image (n x n, rank m) or the right
/// image (m x m, rank >= 2m - n). Integer input whose spectrum is integral is
/// handled exactly; otherwise eigenvalues are clustered with radius `tol` and
/// block sizes come from the ranks of (A - lambda)^k (complex lambda: of
/// (A^2 - 2 Re(lambda) A + |lambda|^2)^k). A singular value of the k-th power
/// counts when above (tol * b)^k and the rounding floor of b^k, where
/// b = ‖A‖ + |lambda| (squared for complex lambda).
/// Clusters closer than 2 * tol raise PreconditionError.
JordanData jordan_structure(const RealMat& a, Side side, Index n, Index m, double tol = 1e-5);

}  // namespace dualpairs::gl
