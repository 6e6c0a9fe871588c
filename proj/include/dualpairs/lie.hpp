#pragma once

// Tagged Lie-algebra and group elements for the four matrix groups that occur
// in the three dual pairs, their enumerated bases, and random sampling.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dualpairs/linalg.hpp"
#include "dualpairs/matrix.hpp"
#include "dualpairs/rng.hpp"

namespace dualpairs {

enum class Side { left, right };
enum class Algebra { u, o, sp, gl };
enum class Group { U, O, Sp, GL };

std::string side_name(Side s);
std::string algebra_name(Algebra a);
std::string group_name(Group g);
Side parse_side(const std::string& s);  // throws InputError

Algebra algebra_of(Group g);
bool is_complex_algebra(Algebra a);

// Matrix size of the algebra/group with parameter n (2n for sp / Sp).
Index matrix_size(Algebra a, Index n);
Index matrix_size(Group g, Index n);
// Real dimension: n^2 for u(n) and gl(n), n(n-1)/2 for o(n), n(2n+1) for sp(2n).
Index algebra_dim(Algebra a, Index n);

// Defining-identity residual of a square matrix: ‖a + a^dagger‖ (u),
// ‖a + a^T‖ (o), ‖a^T J + J a‖ (sp), 0 (gl). Frobenius norms, absolute.
double algebra_residual(Algebra a, const RealMat& m);
double algebra_residual(Algebra a, const ComplexMat& m);

class LieAlgElem {
public:
    // Validated construction: throws PreconditionError when the defining
    // identity fails beyond tol * max(1, ‖value‖), DimensionError on shape.
    static LieAlgElem make(Algebra a, RealMat value, double tol = 1e-8);
    static LieAlgElem make(Algebra a, ComplexMat value, double tol = 1e-8);

    Algebra algebra() const { return algebra_; }
    bool is_complex() const { return std::holds_alternative<ComplexMat>(value_); }
    const RealMat& real() const;
    const ComplexMat& complex() const;
    // Real algebras are promoted.
    ComplexMat as_complex() const;
    Index size() const;
    double residual() const;

private:
    friend std::vector<LieAlgElem> algebra_basis(Algebra, Index);
    friend LieAlgElem random_algebra_element(Algebra, Index, CounterRng&);
    LieAlgElem(Algebra a, std::variant<RealMat, ComplexMat> v) : algebra_(a), value_(std::move(v)) {}
    Algebra algebra_;
    std::variant<RealMat, ComplexMat> value_;
};

// ‖G^dagger G - I‖ (U), ‖G^T G - I‖ (O), ‖G^T J G - J‖ (Sp), ‖G G^{-1} - I‖ (GL).
double group_residual(Group g, const RealMat& m);
double group_residual(Group g, const ComplexMat& m);

class GroupElem {
public:
    // Validated construction; the residual bound is tol * max(1, ‖G‖_F^2).
    // GL elements must be invertible (PreconditionError otherwise).
    static GroupElem make(Group g, RealMat value, double tol = 1e-8);
    static GroupElem make(Group g, ComplexMat value, double tol = 1e-8);
    static GroupElem identity(Group g, Index n);

    Group group() const { return group_; }
    bool is_complex() const { return std::holds_alternative<ComplexMat>(value_); }
    const RealMat& real() const;
    const ComplexMat& complex() const;
    Index size() const;
    double residual() const;
    // Group inverse via the structure (adjoint, transpose, -J G^T J) or LU for GL.
    GroupElem inverse() const;

private:
    friend GroupElem random_group_element(Group, Index, CounterRng&);
    GroupElem(Group g, std::variant<RealMat, ComplexMat> v) : group_(g), value_(std::move(v)) {}
    Group group_;
    std::variant<RealMat, ComplexMat> value_;
};

// Enumerated bases, in this order:
//   gl(n): E_ij row-major;
//   o(n):  E_ij - E_ji for i < j, row-major;
//   u(n):  i E_kk, then E_ij - E_ji (i < j), then i (E_ij + E_ji) (i < j);
//   sp(2n): [[A, 0], [0, -A^T]] with A = E_ij row-major, then [[0, B], [0, 0]]
//           and [[0, 0], [C, 0]] with B, C running over the symmetric basis
//           E_ii, E_ij + E_ji (i < j).
std::vector<LieAlgElem> algebra_basis(Algebra a, Index n);

// Gaussian algebra element, scaled to unit Frobenius norm.
LieAlgElem random_algebra_element(Algebra a, Index n, CounterRng& rng);

// U / O: orthonormalized Gaussian matrix. Sp / GL: exponential of a
// unit-norm random algebra element.
GroupElem random_group_element(Group g, Index n, CounterRng& rng);
GroupElem random_group_element(Group g, Index n, std::uint64_t seed);

struct WitnessReport {
    GroupElem witness;
    double residual = 0.0;  // ‖g·x - x'‖ / max(1, ‖x'‖)
    Side side = Side::left;
    std::optional<double> condition;  // conditioning of the completion (GL left only)
};

}  // namespace dualpairs
