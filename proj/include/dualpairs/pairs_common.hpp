#pragma once

// Pair-agnostic front end over the three dual pairs, plus the numeric checks
// of the general theory: equivariance, level-set invariance, the pairing
// identity for infinitesimal generators, orbit dimensions and symplectic
// orthogonality, and the orbit-label correspondence.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dualpairs/gl_pair.hpp"
#include "dualpairs/lie.hpp"
#include "dualpairs/symplectic_pair.hpp"
#include "dualpairs/unitary_pair.hpp"

namespace dualpairs {

enum class PairId { unitary, symplectic, general_linear };

std::string pair_name(PairId p);
// Accepts unitary|u, symplectic|sp, general_linear|gl.
PairId parse_pair(const std::string& s);

Group pair_group(PairId p, Side s);
Algebra pair_algebra(PairId p, Side s);

using Point = std::variant<ComplexMat, RealMat, gl::CotangentPoint>;

struct DualPairInstance {
    PairId pair = PairId::unitary;
    Index n = 0;
    Index m = 0;
    Point point;

    static DualPairInstance unitary(ComplexMat e);
    static DualPairInstance symplectic(RealMat e);
    static DualPairInstance general_linear(gl::CotangentPoint x);

    const ComplexMat& complex_point() const { return std::get<ComplexMat>(point); }
    const RealMat& real_point() const { return std::get<RealMat>(point); }
    const gl::CotangentPoint& cotangent_point() const { return std::get<gl::CotangentPoint>(point); }

    // Shape consistency; with full_rank also the rank-m restriction (m <= n
    // for the unitary and general linear pairs, m <= 2n for the symplectic one).
    void validate(const Tolerances& tol = {}, bool full_rank = false) const;

    // The 2n x m real form on which Omega(X, Y) = Tr(X^T J Y) for every pair:
    // [Re E; Im E], E, or [Q; P].
    RealMat realified() const;
    // Parameter of the acting group on this side (n or m).
    Index group_dim(Side s) const { return s == Side::left ? n : m; }
};

struct MomentumValue {
    Side side;
    LieAlgElem value;
};

MomentumValue momentum(const DualPairInstance& inst, Side side);

/// g . x (left) or x . g (right); g must belong to the side's group.
DualPairInstance act(const DualPairInstance& inst, Side side, const GroupElem& g);

/// Witness of the given side carrying x to x_prime; dispatches to the pair
/// module. Throws PreconditionError when the opposite momenta differ.
WitnessReport witness(const DualPairInstance& x, const DualPairInstance& x_prime, Side side, const Tolerances& tol = {});

/// Realified infinitesimal generator: xi E / E xi for the unitary and
/// symplectic pairs, (xi Q, -xi^T P) / (Q xi, -P xi^T) for the GL pair.
RealMat infinitesimal(const DualPairInstance& inst, Side side, const LieAlgElem& xi);

/// ‖j(g.x) - g j(x) g^{-1}‖ (left) or ‖j(x.g) - g^{-1} j(x) g‖ (right),
/// relative to max(1, ‖expected‖).
double check_equivariance(const DualPairInstance& inst, Side side, const GroupElem& g);

/// ‖j_side(g.x) - j_side(x)‖ relative, g acting from the opposite side.
double check_level_invariance(const DualPairInstance& inst, Side side, const GroupElem& g_opposite);

/// |Omega(xi.x, zeta.x) - eps <<j_side(x), [xi, zeta]>>| with eps = +1 on
/// the left and -1 on the right. Absolute.
double check_pairing_identity(const DualPairInstance& inst, const LieAlgElem& xi, const LieAlgElem& zeta, Side side);

struct LieWeinsteinReport {
    Index dim_left_orbit = 0;
    Index dim_right_orbit = 0;
    Index ambient_dim = 0;
    double cross_omega_residual = 0.0;  // max |Omega(xi1.x, xi2.x)| / max(1, ‖x‖^2)
};

/// Orbit dimensions from the ranks of the generator spans over the enumerated
/// algebra bases. Requires a full-rank point.
LieWeinsteinReport check_lie_weinstein(const DualPairInstance& inst, const Tolerances& tol = {});

// Singular values (unitary), (p, sigma, q, r) (symplectic), Jordan data (GL).
using OrbitLabel = std::variant<std::vector<double>, symplectic::OrbitInvariants, gl::JordanData>;

/// Labels of the orbits through j_left(x) and j_right(x), each read off its
/// own momentum value. The unitary left label is padded with zeros to size n.
std::pair<OrbitLabel, OrbitLabel> orbit_correspondence(const DualPairInstance& inst, const Tolerances& tol = {});

/// Whether a left and a right label describe corresponding orbits (singular
/// values and sigmas compared with relative tolerance `tol`).
bool labels_correspond(PairId pair, const OrbitLabel& left, const OrbitLabel& right, double tol = 1e-8);

/// Whether two labels of the same side coincide within `tol`.
bool labels_equal(const OrbitLabel& a, const OrbitLabel& b, double tol = 1e-8);

}  // namespace dualpairs
