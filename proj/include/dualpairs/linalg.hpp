#pragma once

// Shape-checked dense linear algebra shared by all three dual pairs: the
// symplectic and trace pairings, tolerant rank, the orthogonal canonical form
// of skew-symmetric matrices, exponentials, and the small set of
// factorizations (LU, SVD, symmetric eigen) the pair modules need.

#include <complex>
#include <vector>

#include "dualpairs/matrix.hpp"
#include "dualpairs/rng.hpp"

namespace dualpairs {

struct Tolerances {
    // Relative residual bound for identity checks.
    double eq_tol = 1e-9;
    // Multiplier in the rank threshold factor * max(rows, cols) * eps * sigma_max.
    double rank_tol_factor = 100.0;

    // Throws std::invalid_argument unless both fields are strictly positive.
    void validate() const;
};

/// The 2n x 2n matrix [[0, I], [-I, 0]].
RealMat standard_J(Index n);

/// Tr(X^T J Y) for 2n x m real matrices.
double omega_real(const RealMat& x, const RealMat& y);

/// Im Tr(E^dagger F).
double omega_complex(const ComplexMat& e, const ComplexMat& f);

/// Re Tr(a b) for square matrices of equal shape.
double trace_pairing(const RealMat& a, const RealMat& b);
double trace_pairing(const ComplexMat& a, const ComplexMat& b);

/// Singular values, descending.
std::vector<double> singular_values(const RealMat& a);
std::vector<double> singular_values(const ComplexMat& a);

/// Number of singular values above rank_tol_factor * max(rows, cols) * eps * sigma_max.
Index rank_tol(const RealMat& a, const Tolerances& tol = {});
Index rank_tol(const ComplexMat& a, const Tolerances& tol = {});

/// Spectral-norm condition number; +inf for singular input.
double condition_number(const RealMat& a);

struct SkewCanonicalForm {
    RealMat orthogonal;          // O with O * xi * O^T block diagonal
    std::vector<double> pairs;   // a_1 >= a_2 >= ... > 0
};

/// Orthogonal canonical form of a real skew-symmetric matrix:
/// O xi O^T = diag([[0, a_1], [-a_1, 0]], ..., [[0, a_p], [-a_p, 0]], 0).
/// Throws PreconditionError if xi is not skew within tol.eq_tol. Pairs at or
/// below the rank threshold of max(‖xi‖_2, scale) are dropped.
SkewCanonicalForm skew_canonical(const RealMat& xi, const Tolerances& tol = {}, double scale = 0.0);

/// Block-diagonal matrix diag([[0, a_i], [-a_i, 0]]..., 0) of size m.
RealMat skew_block_form(const std::vector<double>& pairs, Index m);

RealMat matrix_exp(const RealMat& a);
ComplexMat matrix_exp(const ComplexMat& a);

/// LU-based inverse; throws PreconditionError if the matrix is numerically singular.
RealMat inverse(const RealMat& a);
ComplexMat inverse(const ComplexMat& a);
double determinant(const RealMat& a);

/// Least-squares solution of A X = B (A with full column rank).
RealMat least_squares(const RealMat& a, const RealMat& b);

/// Eigenvalues of a general real square matrix.
std::vector<cplx> eigenvalues(const RealMat& a);

/// Eigen-decomposition of a real symmetric matrix; eigenvalues ascending,
/// eigenvectors in the matching columns.
struct SymmetricEigen {
    std::vector<double> values;
    RealMat vectors;
};
SymmetricEigen symmetric_eigen(const RealMat& s);

/// Characteristic polynomial det(tI - A) coefficients c_0..c_n with c_n = 1,
/// by Hessenberg reduction (real input) or the Faddeev-LeVerrier recursion
/// (exact, rational input).
std::vector<double> char_poly(const RealMat& a);
std::vector<Rational> char_poly(const RationalMat& a);

/// Exact rank by fraction-free elimination over the rationals.
Index exact_rank(const RationalMat& a);

/// Orthonormalize the columns of `a` (modified Gram-Schmidt, two passes).
/// Throws PreconditionError if a column is numerically dependent.
template <class T>
Matrix<T> orthonormalize_columns(const Matrix<T>& a);

/// Orthonormal basis of the orthogonal complement of the column span of `q`
/// (which must have orthonormal columns), built by Gram-Schmidt over the
/// standard basis vectors in index order.
template <class T>
Matrix<T> orthonormal_complement(const Matrix<T>& q);

/// Maximal linearly independent column subset by pivoted Gram-Schmidt: at
/// each step the remaining column with the largest residual is taken (lowest
/// index on ties) until residuals drop below rel_tol times the largest column
/// norm.
template <class T>
std::vector<Index> select_independent_columns(const Matrix<T>& e, double rel_tol);

/// Given E, E' with E^dagger E = E'^dagger E', returns a unitary (orthogonal
/// for real T) U with U E = E'. The map is fixed on a maximal independent
/// column subset of E and extended by the isometry between deterministic
/// orthonormal bases of (im E)^perp and (im E')^perp.
template <class T>
Matrix<T> extend_column_isometry(const Matrix<T>& e, const Matrix<T>& e_prime, double rel_tol);

RealMat gaussian_matrix(Index rows, Index cols, CounterRng& rng);
ComplexMat gaussian_complex_matrix(Index rows, Index cols, CounterRng& rng);

/// ‖a + a^T‖_F (or ‖a + a^dagger‖_F): zero for skew / anti-Hermitian matrices.
double skew_defect(const RealMat& a);
double skew_defect(const ComplexMat& a);

}  // namespace dualpairs
