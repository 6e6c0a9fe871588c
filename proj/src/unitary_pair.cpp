#include "dualpairs/unitary_pair.hpp"

#include <algorithm>
#include <limits>

namespace dualpairs::unitary {

namespace {

constexpr cplx kHalfI{0.0, 0.5};

double witness_select_tol(const ComplexMat& e, const Tolerances& tol) {
    return tol.rank_tol_factor * static_cast<double>(std::max(e.rows(), e.cols())) * std::numeric_limits<double>::epsilon();
}

void require_same_level(const LieAlgElem& a, const LieAlgElem& b, const Tolerances& tol, const char* what) {
    const double diff = frobenius_norm(a.complex() - b.complex());
    const double scale = std::max({1.0, frobenius_norm(a.complex()), frobenius_norm(b.complex())});
    if (diff > tol.eq_tol * scale) {
        throw PreconditionError(std::string(what) + ": momentum values differ (" + std::to_string(diff) + ")");
    }
}

}  // namespace

LieAlgElem j_left(const ComplexMat& e) { return LieAlgElem::make(Algebra::u, (e * e.adjoint()) * kHalfI); }

LieAlgElem j_right(const ComplexMat& e) { return LieAlgElem::make(Algebra::u, (e.adjoint() * e) * kHalfI); }

ComplexMat act_left(const GroupElem& u, const ComplexMat& e) {
    if (u.group() != Group::U || u.size() != e.rows()) throw DimensionError("unitary act_left: need U(" + std::to_string(e.rows()) + ")");
    return u.complex() * e;
}

ComplexMat act_right(const ComplexMat& e, const GroupElem& v) {
    if (v.group() != Group::U || v.size() != e.cols()) throw DimensionError("unitary act_right: need U(" + std::to_string(e.cols()) + ")");
    return e * v.complex();
}

WitnessReport witness_left(const ComplexMat& e, const ComplexMat& e_prime, const Tolerances& tol) {
    e.require_same_shape(e_prime, "unitary witness_left");
    require_same_level(j_right(e), j_right(e_prime), tol, "unitary witness_left");
    ComplexMat u = extend_column_isometry(e, e_prime, witness_select_tol(e, tol));
    const double residual = frobenius_norm(u * e - e_prime) / std::max(1.0, frobenius_norm(e_prime));
    return {GroupElem::make(Group::U, std::move(u)), residual, Side::left, std::nullopt};
}

WitnessReport witness_right(const ComplexMat& e, const ComplexMat& e_prime, const Tolerances& tol) {
    e.require_same_shape(e_prime, "unitary witness_right");
    require_same_level(j_left(e), j_left(e_prime), tol, "unitary witness_right");
    // (E V)^dagger = V^dagger E^dagger, so V = W^dagger for W E^dagger = E'^dagger.
    const ComplexMat et = e.adjoint();
    ComplexMat v = extend_column_isometry(et, e_prime.adjoint(), witness_select_tol(et, tol)).adjoint();
    const double residual = frobenius_norm(e * v - e_prime) / std::max(1.0, frobenius_norm(e_prime));
    return {GroupElem::make(Group::U, std::move(v)), residual, Side::right, std::nullopt};
}

std::vector<double> orbit_invariants(const ComplexMat& e) {
    return e.rows() >= e.cols() ? singular_values(e) : singular_values(e.adjoint());
}

ComplexMat normal_form(const std::vector<double>& sigmas, Index size) {
    if (static_cast<Index>(sigmas.size()) > size) throw DimensionError("unitary normal_form: too many singular values");
    ComplexMat z(size, size);
    for (std::size_t k = 0; k < sigmas.size(); ++k) {
        const auto i = static_cast<Index>(k);
        z(i, i) = kHalfI * (sigmas[k] * sigmas[k]);
    }
    return z;
}

Index jacobian_rank_right(const ComplexMat& e, const Tolerances& tol) {
    const Index n = e.rows(), m = e.cols();
    RealMat jac(2 * m * m, 2 * n * m);
    Index col = 0;
    for (const cplx unit : {cplx(1.0, 0.0), cplx(0.0, 1.0)}) {
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < m; ++j) {
                ComplexMat x(n, m);
                x(i, j) = unit;
                const ComplexMat t = (x.adjoint() * e + e.adjoint() * x) * kHalfI;
                for (Index k = 0; k < m * m; ++k) {
                    jac(k, col) = t.data()[k].real();
                    jac(m * m + k, col) = t.data()[k].imag();
                }
                ++col;
            }
    }
    return rank_tol(jac, tol);
}

}  // namespace dualpairs::unitary
