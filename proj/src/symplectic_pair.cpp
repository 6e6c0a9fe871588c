#include "dualpairs/symplectic_pair.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dualpairs::symplectic {

namespace {

// Size of ‖j(E)‖_2 for generic E; noise in j_right is measured against it.
double momentum_scale(const RealMat& e) {
    const auto sv = singular_values(e);
    return sv.empty() ? 0.0 : 0.5 * sv.front() * sv.front();
}

void require_same_level(const RealMat& a, const RealMat& b, const Tolerances& tol, const char* what) {
    const double diff = frobenius_norm(a - b);
    const double scale = std::max({1.0, frobenius_norm(a), frobenius_norm(b)});
    if (diff > tol.eq_tol * scale) {
        throw PreconditionError(std::string(what) + ": momentum values differ (" + std::to_string(diff) + ")");
    }
}

double select_tol(const RealMat& e, const Tolerances& tol) {
    return tol.rank_tol_factor * static_cast<double>(std::max(e.rows(), e.cols())) *
           std::numeric_limits<double>::epsilon();
}

}  // namespace

LieAlgElem j_left(const RealMat& e) {
    if (e.rows() % 2 != 0) throw DimensionError("symplectic j_left: row count must be even, got " + e.shape_str());
    return LieAlgElem::make(Algebra::sp, (e * e.transpose() * standard_J(e.rows() / 2)) * -0.5);
}

LieAlgElem j_right(const RealMat& e) {
    if (e.rows() % 2 != 0) throw DimensionError("symplectic j_right: row count must be even, got " + e.shape_str());
    // Skew part of E^T J E, which equals E^T J E in exact arithmetic.
    const RealMat g = e.transpose() * standard_J(e.rows() / 2) * e;
    return LieAlgElem::make(Algebra::o, (g - g.transpose()) * -0.25);
}

RealMat act_left(const GroupElem& s, const RealMat& e) {
    if (s.group() != Group::Sp || s.size() != e.rows()) throw DimensionError("symplectic act_left: need Sp of size " + std::to_string(e.rows()));
    return s.real() * e;
}

RealMat act_right(const RealMat& e, const GroupElem& o) {
    if (o.group() != Group::O || o.size() != e.cols()) throw DimensionError("symplectic act_right: need O(" + std::to_string(e.cols()) + ")");
    return e * o.real();
}

void require_full_rank(const RealMat& e, const Tolerances& tol, const char* what) {
    if (e.rows() % 2 != 0 || e.rows() == 0) throw DimensionError(std::string(what) + ": row count must be even and positive");
    if (e.cols() > e.rows()) throw DimensionError(std::string(what) + ": need m <= 2n, got " + e.shape_str());
    if (rank_tol(e, tol) != e.cols()) throw PreconditionError(std::string(what) + ": point does not have rank m");
}

WitnessReport witness_left(const RealMat& e, const RealMat& e_prime, const Tolerances& tol) {
    e.require_same_shape(e_prime, "symplectic witness_left");
    require_full_rank(e, tol, "symplectic witness_left");
    require_full_rank(e_prime, tol, "symplectic witness_left");
    require_same_level(j_right(e).real(), j_right(e_prime).real(), tol, "symplectic witness_left");
    GroupElem s = witt_extend(e, e_prime, tol.eq_tol);
    const double residual = frobenius_norm(s.real() * e - e_prime) / std::max(1.0, frobenius_norm(e_prime));
    return {std::move(s), residual, Side::left, std::nullopt};
}

WitnessReport witness_right(const RealMat& e, const RealMat& e_prime, const Tolerances& tol) {
    e.require_same_shape(e_prime, "symplectic witness_right");
    require_full_rank(e, tol, "symplectic witness_right");
    require_full_rank(e_prime, tol, "symplectic witness_right");
    require_same_level(j_left(e).real(), j_left(e_prime).real(), tol, "symplectic witness_right");
    const RealMat f = e.transpose();
    const RealMat o = extend_column_isometry(f, e_prime.transpose(), select_tol(f, tol));
    RealMat g = o.transpose();
    const double residual = frobenius_norm(e * g - e_prime) / std::max(1.0, frobenius_norm(e_prime));
    return {GroupElem::make(Group::O, std::move(g)), residual, Side::right, std::nullopt};
}

OrbitInvariants OrbitInvariants::from_sigmas(Index n, Index m, std::vector<double> sigmas) {
    OrbitInvariants inv;
    inv.n = n;
    inv.m = m;
    inv.p = static_cast<Index>(sigmas.size());
    inv.sigmas = std::move(sigmas);
    inv.q = m - 2 * inv.p;
    inv.r = n - m + inv.p;
    inv.validate();
    return inv;
}

void OrbitInvariants::validate() const {
    if (n < 1 || m < 0 || m > 2 * n) throw PreconditionError("invariants: need n >= 1 and 0 <= m <= 2n");
    if (p < 0 || static_cast<Index>(sigmas.size()) != p) throw PreconditionError("invariants: sigma count must equal p");
    if (q != m - 2 * p || q < 0) throw PreconditionError("invariants: q must equal m - 2p >= 0");
    if (r != n - m + p || r < 0) throw PreconditionError("invariants: r must equal n - m + p >= 0");
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
        if (!(sigmas[i] > 0.0)) throw PreconditionError("invariants: sigmas must be positive");
        if (i > 0 && sigmas[i] > sigmas[i - 1]) throw PreconditionError("invariants: sigmas must be descending");
    }
}

RealMat build_d(const OrbitInvariants& inv) {
    inv.validate();
    const Index n = inv.n, p = inv.p, q = inv.q;
    RealMat d(2 * n, inv.m);
    for (Index i = 0; i < p; ++i) {
        const double s = inv.sigmas[static_cast<std::size_t>(i)];
        d(i, i) = s;
        d(n + i, p + q + i) = s;
    }
    for (Index j = 0; j < q; ++j) d(p + j, p + j) = 1.0;
    return d;
}

XuDecomposition xu_decompose(const RealMat& e, const Tolerances& tol) {
    require_full_rank(e, tol, "xu_decompose");
    const Index n = e.rows() / 2, m = e.cols();
    const RealMat xi = j_right(e).real();
    const SkewCanonicalForm sc = skew_canonical(xi, tol, momentum_scale(e));

    std::vector<double> sigmas;
    for (const double a : sc.pairs) sigmas.push_back(std::sqrt(2.0 * a));
    OrbitInvariants inv = OrbitInvariants::from_sigmas(n, m, std::move(sigmas));
    const Index p = inv.p, q = inv.q;

    // Canonical pair (2i, 2i+1) carries +a_i in its upper-right entry, while
    // j_right(D) carries +sigma_i^2/2 at (p+q+i, i).
    RealMat perm(m, m);
    for (Index i = 0; i < p; ++i) {
        perm(p + q + i, 2 * i) = 1.0;
        perm(i, 2 * i + 1) = 1.0;
    }
    for (Index j = 0; j < q; ++j) perm(p + j, 2 * p + j) = 1.0;
    RealMat o = perm * sc.orthogonal;

    RealMat d = build_d(inv);
    GroupElem s = witt_extend(d, e * o.transpose(), std::max(tol.eq_tol, 1e-9));
    return {std::move(s), std::move(d), GroupElem::make(Group::O, std::move(o)), std::move(inv)};
}

LieAlgElem normal_form_left(const OrbitInvariants& inv) {
    inv.validate();
    const Index n = inv.n, p = inv.p, q = inv.q;
    RealMat z(2 * n, 2 * n);
    for (Index i = 0; i < p; ++i) {
        const double s = inv.sigmas[static_cast<std::size_t>(i)];
        const double s2 = s * s;
        z(i, n + i) = -0.5 * s2;
        z(n + i, i) = 0.5 * s2;
    }
    for (Index j = 0; j < q; ++j) z(p + j, n + p + j) = -0.5;
    return LieAlgElem::make(Algebra::sp, std::move(z));
}

LieAlgElem normal_form_right(const OrbitInvariants& inv) {
    inv.validate();
    std::vector<double> half_sq;
    for (const double s : inv.sigmas) half_sq.push_back(-0.5 * (s * s));
    return LieAlgElem::make(Algebra::o, skew_block_form(half_sq, inv.m));
}

std::pair<LieAlgElem, LieAlgElem> correspond(const OrbitInvariants& inv) {
    return {normal_form_left(inv), normal_form_right(inv)};
}

OrbitInvariants left_invariants(const RealMat& e, const Tolerances& tol) {
    require_full_rank(e, tol, "left_invariants");
    const RealMat z = j_left(e).real();
    const auto ev = eigenvalues(z);
    // The nilpotent part contributes eigenvalue clusters of radius ~ sqrt(eps) * scale.
    const double thresh = 1e-6 * std::max(1.0, frobenius_norm(z));
    std::vector<double> upper, lower;
    for (const auto& l : ev) {
        if (l.imag() > thresh) upper.push_back(l.imag());
        if (l.imag() < -thresh) lower.push_back(-l.imag());
        if (std::abs(l.real()) > thresh) {
            throw PreconditionError("left_invariants: j_left has an eigenvalue off the imaginary axis");
        }
    }
    if (upper.size() != lower.size()) throw PreconditionError("left_invariants: unpaired imaginary eigenvalues");
    std::sort(upper.begin(), upper.end(), std::greater<>());
    std::vector<double> sigmas;
    for (const double b : upper) sigmas.push_back(std::sqrt(2.0 * b));
    return OrbitInvariants::from_sigmas(e.rows() / 2, e.cols(), std::move(sigmas));
}

OrbitInvariants right_invariants(const RealMat& e, const Tolerances& tol) {
    require_full_rank(e, tol, "right_invariants");
    const SkewCanonicalForm sc = skew_canonical(j_right(e).real(), tol, momentum_scale(e));
    std::vector<double> sigmas;
    for (const double a : sc.pairs) sigmas.push_back(std::sqrt(2.0 * a));
    return OrbitInvariants::from_sigmas(e.rows() / 2, e.cols(), std::move(sigmas));
}

}  // namespace dualpairs::symplectic
