#include "dualpairs/gl_pair.hpp"

#include <algorithm>
#include <cmath>

namespace dualpairs::gl {

namespace {

void require_same_level(const RealMat& a, const RealMat& b, const Tolerances& tol, const char* what) {
    const double diff = frobenius_norm(a - b);
    const double scale = std::max({1.0, frobenius_norm(a), frobenius_norm(b)});
    if (diff > tol.eq_tol * scale) {
        throw PreconditionError(std::string(what) + ": momentum values differ (" + std::to_string(diff) + ")");
    }
}

// Distance of v from the column span of the orthonormal q, relative to ‖v‖.
double relative_distance(const RealMat& q, const RealMat& v) {
    RealMat r = v;
    if (q.cols() > 0) r -= q * (q.transpose() * v);
    return frobenius_norm(r) / frobenius_norm(v);
}

}  // namespace

void CotangentPoint::validate_shape() const {
    if (q.rows() != p.rows() || q.cols() != p.cols()) {
        throw DimensionError("cotangent point: Q is " + q.shape_str() + " but P is " + p.shape_str());
    }
    if (q.cols() > q.rows()) throw DimensionError("cotangent point: need m <= n, got " + q.shape_str());
}

CotangentPoint CotangentPoint::from_stacked(const RealMat& e) {
    if (e.rows() % 2 != 0) throw DimensionError("cotangent point: stacked matrix needs even row count");
    const Index n = e.rows() / 2;
    return {e.block(0, 0, n, e.cols()), e.block(n, 0, n, e.cols())};
}

LieAlgElem j_left(const CotangentPoint& x) {
    x.validate_shape();
    return LieAlgElem::make(Algebra::gl, x.q * x.p.transpose());
}

LieAlgElem j_right(const CotangentPoint& x) {
    x.validate_shape();
    return LieAlgElem::make(Algebra::gl, x.p.transpose() * x.q);
}

CotangentPoint act_left(const RealMat& a, const CotangentPoint& x) {
    x.validate_shape();
    a.require_square("gl act_left");
    if (a.rows() != x.n()) throw DimensionError("gl act_left: A is " + a.shape_str() + ", n = " + std::to_string(x.n()));
    return {a * x.q, inverse(a).transpose() * x.p};
}

CotangentPoint act_right(const CotangentPoint& x, const RealMat& b) {
    x.validate_shape();
    b.require_square("gl act_right");
    if (b.rows() != x.m()) throw DimensionError("gl act_right: B is " + b.shape_str() + ", m = " + std::to_string(x.m()));
    return {x.q * b, x.p * inverse(b).transpose()};
}

CotangentPoint act_left(const GroupElem& a, const CotangentPoint& x) {
    if (a.group() != Group::GL) throw DimensionError("gl act_left: need a GL element");
    return act_left(a.real(), x);
}

CotangentPoint act_right(const CotangentPoint& x, const GroupElem& b) {
    if (b.group() != Group::GL) throw DimensionError("gl act_right: need a GL element");
    return act_right(x, b.real());
}

void require_full_rank(const CotangentPoint& x, const Tolerances& tol, const char* what) {
    x.validate_shape();
    if (rank_tol(x.q, tol) != x.m() || rank_tol(x.p, tol) != x.m()) {
        throw PreconditionError(std::string(what) + ": Q and P must both have rank m");
    }
}

double point_residual(const CotangentPoint& gx, const CotangentPoint& x_prime) {
    return frobenius_norm(gx.stacked() - x_prime.stacked()) / std::max(1.0, frobenius_norm(x_prime.stacked()));
}

WitnessReport witness_right(const CotangentPoint& x, const CotangentPoint& x_prime, const Tolerances& tol) {
    require_full_rank(x, tol, "gl witness_right");
    require_full_rank(x_prime, tol, "gl witness_right");
    if (x.q.rows() != x_prime.q.rows() || x.q.cols() != x_prime.q.cols()) throw DimensionError("gl witness_right: shape mismatch");
    require_same_level(j_left(x).real(), j_left(x_prime).real(), tol, "gl witness_right");
    RealMat b = least_squares(x.q, x_prime.q);
    GroupElem g = GroupElem::make(Group::GL, std::move(b));
    const double residual = point_residual(act_right(x, g.real()), x_prime);
    return {std::move(g), residual, Side::right, std::nullopt};
}

RealMat complete_pair(const RealMat& q1, const RealMat& q2, const Tolerances& tol) {
    q1.require_same_shape(q2, "complete_pair");
    const Index n = q1.rows(), m = q1.cols();
    if (m > n) throw DimensionError("complete_pair: need m <= n");
    if (rank_tol(q1, tol) != m || rank_tol(q2, tol) != m) throw PreconditionError("complete_pair: inputs must have rank m");

    std::vector<RealMat> candidates;
    for (Index i = 0; i < n; ++i) {
        RealMat v(n, 1);
        v(i, 0) = 1.0;
        candidates.push_back(std::move(v));
    }
    for (const double sign : {1.0, -1.0})
        for (Index i = 0; i < n; ++i)
            for (Index j = i + 1; j < n; ++j) {
                RealMat v(n, 1);
                v(i, 0) = 1.0;
                v(j, 0) = sign;
                candidates.push_back(std::move(v));
            }

    RealMat x(n, 0);
    while (x.cols() < n - m) {
        const RealMat b1 = orthonormalize_columns(hstack(q1, x));
        const RealMat b2 = orthonormalize_columns(hstack(q2, x));
        std::size_t best = 0;
        double best_score = -1.0;
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            const double score = std::min(relative_distance(b1, candidates[c]), relative_distance(b2, candidates[c]));
            if (score > best_score + 1e-12) {
                best_score = score;
                best = c;
            }
        }
        if (!(best_score > 1e-10)) throw PreconditionError("complete_pair: no candidate avoids both spans");
        x = hstack(x, candidates[best]);
    }
    return x;
}

WitnessReport witness_left(const CotangentPoint& x, const CotangentPoint& x_prime, const Tolerances& tol) {
    require_full_rank(x, tol, "gl witness_left");
    require_full_rank(x_prime, tol, "gl witness_left");
    if (x.q.rows() != x_prime.q.rows() || x.q.cols() != x_prime.q.cols()) throw DimensionError("gl witness_left: shape mismatch");
    require_same_level(j_right(x).real(), j_right(x_prime).real(), tol, "gl witness_left");
    const Index n = x.n(), m = x.m();

    RealMat d, d_prime;
    if (m == n) {
        d = x.q;
        d_prime = x_prime.q;
    } else {
        const RealMat y = complete_pair(x.p, x_prime.p, tol);
        const RealMat ct = hstack(x.p, y) * inverse(hstack(x_prime.p, y));  // C^T P' = P
        const RealMat c = ct.transpose();
        const RealMat xc = complete_pair(x.q, inverse(c) * x_prime.q, tol);
        d = hstack(x.q, xc);
        d_prime = hstack(x_prime.q, c * xc);
    }
    RealMat a = d_prime * inverse(d);
    const double cond = condition_number(d);
    GroupElem g = GroupElem::make(Group::GL, std::move(a));
    const double residual = point_residual(act_left(g.real(), x), x_prime);
    return {std::move(g), residual, Side::left, cond};
}

bool in_image_left(const RealMat& zeta, Index m, const Tolerances& tol) {
    zeta.require_square("in_image_left");
    return rank_tol(zeta, tol) == m;
}

bool in_image_right(const RealMat& xi, Index n, const Tolerances& tol) {
    xi.require_square("in_image_right");
    return rank_tol(xi, tol) >= 2 * xi.rows() - n;
}

// ---- Jordan data -----------------------------------------------------------

void JordanData::validate() const {
    if (n < 1 || m < 0 || m > n) throw PreconditionError("jordan data: need 0 <= m <= n, n >= 1");
    Index rank = 0, used = 0;
    for (const auto& b : blocks) {
        if (b.lambda == cplx(0.0, 0.0)) throw PreconditionError("jordan data: block eigenvalues must be nonzero");
        if (b.lambda.imag() < 0.0) throw PreconditionError("jordan data: store eigenvalues with Im >= 0");
        if (b.size < 1) throw PreconditionError("jordan data: block sizes must be positive");
        if (b.lambda.imag() > 0.0 && b.size % 2 != 0) throw PreconditionError("jordan data: complex blocks need even size");
        rank += b.size;
        used += b.size;
    }
    for (const Index d : nilpotent) {
        if (d < 2) throw PreconditionError("jordan data: nilpotent blocks need d >= 2");
        rank += d - 1;
        used += d;
    }
    if (rank != m) throw PreconditionError("jordan data: sum c_i + sum (d_j - 1) must equal m");
    if (q() > std::min(m, n - m) || used > n) throw PreconditionError("jordan data: need q <= min(m, n - m)");
}

JordanData JordanData::canonical() const {
    JordanData out = *this;
    std::sort(out.blocks.begin(), out.blocks.end(), [](const JordanBlock& a, const JordanBlock& b) {
        if (a.lambda.real() != b.lambda.real()) return a.lambda.real() < b.lambda.real();
        if (a.lambda.imag() != b.lambda.imag()) return a.lambda.imag() < b.lambda.imag();
        return a.size > b.size;
    });
    std::sort(out.nilpotent.begin(), out.nilpotent.end(), std::greater<>());
    return out;
}

bool JordanData::is_rational() const {
    return std::all_of(blocks.begin(), blocks.end(), [](const JordanBlock& b) {
        return Rational::from_double(b.lambda.real()).has_value() && Rational::from_double(b.lambda.imag()).has_value();
    });
}

RationalMat real_jordan_block_exact(cplx lambda, Index size) {
    const auto re = Rational::from_double(lambda.real());
    const auto im = Rational::from_double(lambda.imag());
    if (!re || !im) throw InputError("jordan block: eigenvalue has no exact rational form");
    RationalMat b(size, size);
    if (lambda.imag() == 0.0) {
        for (Index i = 0; i < size; ++i) {
            b(i, i) = *re;
            if (i + 1 < size) b(i, i + 1) = Rational(1);
        }
        return b;
    }
    if (size % 2 != 0) throw PreconditionError("jordan block: complex eigenvalue needs even size");
    for (Index k = 0; k < size; k += 2) {
        b(k, k) = *re;
        b(k, k + 1) = *im;
        b(k + 1, k) = -*im;
        b(k + 1, k + 1) = *re;
        if (k + 2 < size) {
            b(k, k + 2) = Rational(1);
            b(k + 1, k + 3) = Rational(1);
        }
    }
    return b;
}

RealMat real_jordan_block(cplx lambda, Index size) {
    if (lambda.imag() != 0.0 && size % 2 != 0) throw PreconditionError("jordan block: complex eigenvalue needs even size");
    RealMat b(size, size);
    if (lambda.imag() == 0.0) {
        for (Index i = 0; i < size; ++i) {
            b(i, i) = lambda.real();
            if (i + 1 < size) b(i, i + 1) = 1.0;
        }
        return b;
    }
    for (Index k = 0; k < size; k += 2) {
        b(k, k) = lambda.real();
        b(k, k + 1) = lambda.imag();
        b(k + 1, k) = -lambda.imag();
        b(k + 1, k + 1) = lambda.real();
        if (k + 2 < size) {
            b(k, k + 2) = 1.0;
            b(k + 1, k + 3) = 1.0;
        }
    }
    return b;
}

RationalMat nilpotent_block_exact(Index d) {
    RationalMat b(d, d);
    for (Index i = 0; i + 1 < d; ++i) b(i, i + 1) = Rational(1);
    return b;
}

std::pair<RationalMat, RationalMat> build_qp_from_jordan_exact(const JordanData& jd) {
    jd.validate();
    std::vector<RationalMat> qs, ps;
    for (const auto& b : jd.blocks) {
        qs.push_back(real_jordan_block_exact(b.lambda, b.size));
        ps.push_back(RationalMat::identity(b.size));
    }
    for (const Index d : jd.nilpotent) {
        // I-check = [I; 0] and I-hat = [0; I], both d x (d-1).
        RationalMat check(d, d - 1), hat(d, d - 1);
        for (Index i = 0; i < d - 1; ++i) {
            check(i, i) = Rational(1);
            hat(i + 1, i) = Rational(1);
        }
        qs.push_back(std::move(check));
        ps.push_back(std::move(hat));
    }
    const Index zero_rows = jd.n - jd.m - jd.q();
    qs.push_back(RationalMat(zero_rows, 0));
    ps.push_back(RationalMat(zero_rows, 0));
    return {block_diag(qs), block_diag(ps)};
}

CotangentPoint build_qp_from_jordan(const JordanData& jd) {
    if (jd.is_rational()) {
        auto [q, p] = build_qp_from_jordan_exact(jd);
        return {to_real(q), to_real(p)};
    }
    jd.validate();
    std::vector<RealMat> qs, ps;
    for (const auto& b : jd.blocks) {
        qs.push_back(real_jordan_block(b.lambda, b.size));
        ps.push_back(RealMat::identity(b.size));
    }
    for (const Index d : jd.nilpotent) {
        RealMat check(d, d - 1), hat(d, d - 1);
        for (Index i = 0; i < d - 1; ++i) {
            check(i, i) = 1.0;
            hat(i + 1, i) = 1.0;
        }
        qs.push_back(std::move(check));
        ps.push_back(std::move(hat));
    }
    const Index zero_rows = jd.n - jd.m - jd.q();
    qs.push_back(RealMat(zero_rows, 0));
    ps.push_back(RealMat(zero_rows, 0));
    return {block_diag(qs), block_diag(ps)};
}

std::pair<RationalMat, RationalMat> jordan_correspond_exact(const JordanData& jd) {
    jd.validate();
    std::vector<RationalMat> zs, xs;
    for (const auto& b : jd.blocks) {
        zs.push_back(real_jordan_block_exact(b.lambda, b.size));
        xs.push_back(zs.back());
    }
    for (const Index d : jd.nilpotent) {
        zs.push_back(nilpotent_block_exact(d));
        xs.push_back(nilpotent_block_exact(d - 1));
    }
    const Index zero = jd.n - jd.m - jd.q();
    zs.push_back(RationalMat(zero, zero));
    return {block_diag(zs), block_diag(xs)};
}

std::pair<RealMat, RealMat> jordan_correspond(const JordanData& jd) {
    if (jd.is_rational()) {
        auto [z, x] = jordan_correspond_exact(jd);
        return {to_real(z), to_real(x)};
    }
    jd.validate();
    std::vector<RealMat> zs, xs;
    for (const auto& b : jd.blocks) {
        zs.push_back(real_jordan_block(b.lambda, b.size));
        xs.push_back(zs.back());
    }
    for (const Index d : jd.nilpotent) {
        zs.push_back(real_jordan_block(0.0, d));
        xs.push_back(real_jordan_block(0.0, d - 1));
    }
    const Index zero = jd.n - jd.m - jd.q();
    zs.push_back(RealMat(zero, zero));
    return {block_diag(zs), block_diag(xs)};
}

}  // namespace dualpairs::gl
