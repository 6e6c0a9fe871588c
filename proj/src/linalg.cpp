#include "dualpairs/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "dualpairs/kernels/kernels.hpp"

namespace dualpairs {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

template <class T>
using EigenMat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <class T>
EigenMat<T> to_eigen(const Matrix<T>& a) {
    EigenMat<T> m(a.rows(), a.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    return m;
}

template <class Derived>
auto from_eigen(const Eigen::MatrixBase<Derived>& m) {
    using T = typename Derived::Scalar;
    Matrix<T> a(m.rows(), m.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j) a(i, j) = m(i, j);
    return a;
}

template <class T>
std::vector<double> singular_values_impl(const Matrix<T>& a) {
    if (a.size() == 0) return {};
    Eigen::JacobiSVD<EigenMat<T>> svd(to_eigen(a));
    const auto& s = svd.singularValues();
    return std::vector<double>(s.data(), s.data() + s.size());
}

template <class T>
Index rank_impl(const Matrix<T>& a, const Tolerances& tol) {
    const auto s = singular_values_impl(a);
    if (s.empty() || s.front() == 0.0) return 0;
    const double thresh =
        tol.rank_tol_factor * static_cast<double>(std::max(a.rows(), a.cols())) * kEps * s.front();
    return static_cast<Index>(std::count_if(s.begin(), s.end(), [&](double x) { return x > thresh; }));
}

template <class T>
T inner(const Matrix<T>& a, Index ca, const Matrix<T>& b, Index cb) {
    T s(0);
    for (Index i = 0; i < a.rows(); ++i) {
        if constexpr (is_complex_v<T>) {
            s += std::conj(a(i, ca)) * b(i, cb);
        } else {
            s += a(i, ca) * b(i, cb);
        }
    }
    return s;
}

template <class T>
double col_norm(const Matrix<T>& a, Index c) {
    double s = 0.0;
    for (Index i = 0; i < a.rows(); ++i) s += std::norm(a(i, c));
    return std::sqrt(s);
}

// Removes from column c of `v` its components along the first k columns of q.
template <class T>
void project_out(Matrix<T>& v, Index c, const Matrix<T>& q, Index k) {
    for (Index j = 0; j < k; ++j) {
        const T h = inner(q, j, v, c);
        for (Index i = 0; i < v.rows(); ++i) v(i, c) -= q(i, j) * h;
    }
}

template <class T>
Matrix<T> exp_impl(const Matrix<T>& a) {
    a.require_square("matrix_exp");
    const Index n = a.rows();
    double norm1 = 0.0;
    for (Index j = 0; j < n; ++j) {
        double s = 0.0;
        for (Index i = 0; i < n; ++i) s += std::abs(a(i, j));
        norm1 = std::max(norm1, s);
    }
    int squarings = 0;
    if (norm1 > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
    const Matrix<T> scaled = a * T(std::ldexp(1.0, -squarings));
    // Taylor series; with ‖A‖_1 <= 1/2 the truncation error after 20 terms is far below eps.
    Matrix<T> result = Matrix<T>::identity(n);
    Matrix<T> term = Matrix<T>::identity(n);
    for (int k = 1; k <= 20; ++k) {
        term = term * scaled;
        term *= T(1.0 / k);
        result += term;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

template <class T>
Matrix<T> inverse_impl(const Matrix<T>& a) {
    a.require_square("inverse");
    if (a.rows() == 0) return a;
    Eigen::PartialPivLU<EigenMat<T>> lu(to_eigen(a));
    if (!(lu.rcond() > 10.0 * kEps)) {
        throw PreconditionError("inverse: matrix is numerically singular (" + a.shape_str() + ")");
    }
    return from_eigen(lu.inverse());
}

template <class T>
std::vector<T> char_poly_impl(const Matrix<T>& a) {
    a.require_square("char_poly");
    const Index n = a.rows();
    std::vector<T> c(static_cast<std::size_t>(n + 1), T(0));
    c[static_cast<std::size_t>(n)] = T(1);
    Matrix<T> mk = Matrix<T>::zeros(n, n);
    for (Index k = 1; k <= n; ++k) {
        Matrix<T> next = a * mk;
        for (Index i = 0; i < n; ++i) next(i, i) += c[static_cast<std::size_t>(n - k + 1)];
        mk = std::move(next);
        const Matrix<T> amk = a * mk;
        c[static_cast<std::size_t>(n - k)] = -(amk.trace() / T(static_cast<std::int64_t>(k)));
    }
    return c;
}

}  // namespace

void Tolerances::validate() const {
    if (!(eq_tol > 0.0) || !(rank_tol_factor > 0.0)) {
        throw std::invalid_argument("tolerances must be strictly positive");
    }
}

RealMat standard_J(Index n) {
    if (n < 1) throw DimensionError("standard_J: n must be >= 1");
    RealMat j(2 * n, 2 * n);
    for (Index i = 0; i < n; ++i) {
        j(i, n + i) = 1.0;
        j(n + i, i) = -1.0;
    }
    return j;
}

double omega_real(const RealMat& x, const RealMat& y) {
    x.require_same_shape(y, "omega_real");
    if (x.rows() % 2 != 0) throw DimensionError("omega_real: row count must be even, got " + x.shape_str());
    return kernels::omega_pairing(static_cast<std::size_t>(x.rows() / 2), static_cast<std::size_t>(x.cols()),
                                  x.data().data(), y.data().data());
}

double omega_complex(const ComplexMat& e, const ComplexMat& f) {
    e.require_same_shape(f, "omega_complex");
    // Im sum conj(e) f = sum (re_e * im_f - im_e * re_f)
    double s = 0.0;
    for (Index i = 0; i < e.size(); ++i) {
        s += e.data()[i].real() * f.data()[i].imag() - e.data()[i].imag() * f.data()[i].real();
    }
    return s;
}

double trace_pairing(const RealMat& a, const RealMat& b) {
    a.require_square("trace_pairing");
    a.require_same_shape(b, "trace_pairing");
    // Tr(ab) = sum_ij a_ij b_ji
    const RealMat bt = b.transpose();
    return kernels::dot(a.data(), bt.data());
}

double trace_pairing(const ComplexMat& a, const ComplexMat& b) {
    a.require_square("trace_pairing");
    a.require_same_shape(b, "trace_pairing");
    double s = 0.0;
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j) s += (a(i, j) * b(j, i)).real();
    return s;
}

std::vector<double> singular_values(const RealMat& a) { return singular_values_impl(a); }
std::vector<double> singular_values(const ComplexMat& a) { return singular_values_impl(a); }

Index rank_tol(const RealMat& a, const Tolerances& tol) { return rank_impl(a, tol); }
Index rank_tol(const ComplexMat& a, const Tolerances& tol) { return rank_impl(a, tol); }

double condition_number(const RealMat& a) {
    const auto s = singular_values(a);
    if (s.empty()) return 1.0;
    if (s.back() == 0.0) return std::numeric_limits<double>::infinity();
    return s.front() / s.back();
}

RealMat skew_block_form(const std::vector<double>& pairs, Index m) {
    if (static_cast<Index>(2 * pairs.size()) > m) throw DimensionError("skew_block_form: too many pairs for size");
    RealMat r(m, m);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto k = static_cast<Index>(2 * i);
        r(k, k + 1) = pairs[i];
        r(k + 1, k) = -pairs[i];
    }
    return r;
}

SkewCanonicalForm skew_canonical(const RealMat& xi, const Tolerances& tol, double scale) {
    xi.require_square("skew_canonical");
    const Index m = xi.rows();
    const double norm = frobenius_norm(xi);
    if (skew_defect(xi) > tol.eq_tol * norm) {
        throw PreconditionError("skew_canonical: input is not skew-symmetric within tolerance");
    }
    const RealMat xs = (xi - xi.transpose()) * 0.5;
    const auto sv = singular_values(xs);
    const double sigma_max = sv.empty() ? 0.0 : sv.front();
    const double zero_thresh = tol.rank_tol_factor * static_cast<double>(m) * kEps * std::max(sigma_max, scale);

    // -xs^2 = xs^T xs is positive semidefinite with eigenvalues a_i^2 (twice each).
    const RealMat gram = xs.transpose() * xs;
    RealMat chosen(m, 0);
    std::vector<double> pairs;
    while (2 * static_cast<Index>(pairs.size()) + 2 <= m) {
        RealMat proj = RealMat::identity(m) - chosen * chosen.transpose();
        RealMat restricted = proj * gram * proj;
        restricted = (restricted + restricted.transpose()) * 0.5;
        const auto eig = symmetric_eigen(restricted);
        const double top = eig.values.back();
        if (!(top > 0.0)) break;

        // Top eigenspace (values within a relative 1e-8 of the largest).
        std::vector<Index> cluster;
        for (Index c = m - 1; c >= 0; --c) {
            if (eig.values[static_cast<std::size_t>(c)] >= top * (1.0 - 1e-8)) cluster.push_back(c);
        }
        RealMat basis(m, static_cast<Index>(cluster.size()));
        for (std::size_t c = 0; c < cluster.size(); ++c) basis.set_col(static_cast<Index>(c), eig.vectors.col(cluster[c]));

        // Seed with the standard basis vector best represented in that space.
        Index best = 0;
        double best_norm = -1.0;
        for (Index j = 0; j < m; ++j) {
            double s = 0.0;
            for (Index c = 0; c < basis.cols(); ++c) s += basis(j, c) * basis(j, c);
            if (s > best_norm + 1e-12) {
                best_norm = s;
                best = j;
            }
        }
        RealMat v = basis * basis.row(best).transpose();
        project_out(v, 0, chosen, chosen.cols());
        const double vn = col_norm(v, 0);
        if (vn == 0.0) break;
        v *= 1.0 / vn;

        RealMat w = xs * v;
        const double a = col_norm(w, 0);
        if (a <= zero_thresh) break;
        RealMat y = w * (-1.0 / a);
        project_out(y, 0, chosen, chosen.cols());
        project_out(y, 0, v, 1);
        y *= 1.0 / col_norm(y, 0);

        pairs.push_back((v.transpose() * xs * y)(0, 0));
        chosen = hstack(hstack(chosen, v), y);
    }

    const RealMat rest = orthonormal_complement(chosen);
    return {hstack(chosen, rest).transpose(), std::move(pairs)};
}

RealMat matrix_exp(const RealMat& a) { return exp_impl(a); }
ComplexMat matrix_exp(const ComplexMat& a) { return exp_impl(a); }

RealMat inverse(const RealMat& a) { return inverse_impl(a); }
ComplexMat inverse(const ComplexMat& a) { return inverse_impl(a); }

double determinant(const RealMat& a) {
    a.require_square("determinant");
    if (a.rows() == 0) return 1.0;
    return to_eigen(a).partialPivLu().determinant();
}

RealMat least_squares(const RealMat& a, const RealMat& b) {
    if (a.rows() != b.rows()) throw DimensionError("least_squares: row counts differ");
    const EigenMat<double> x = to_eigen(a).colPivHouseholderQr().solve(to_eigen(b));
    return from_eigen(x);
}

std::vector<cplx> eigenvalues(const RealMat& a) {
    a.require_square("eigenvalues");
    if (a.rows() == 0) return {};
    Eigen::EigenSolver<Eigen::MatrixXd> es(to_eigen(a), false);
    const auto& ev = es.eigenvalues();
    return std::vector<cplx>(ev.data(), ev.data() + ev.size());
}

SymmetricEigen symmetric_eigen(const RealMat& s) {
    s.require_square("symmetric_eigen");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(s));
    const auto& vals = es.eigenvalues();
    return {std::vector<double>(vals.data(), vals.data() + vals.size()), from_eigen(es.eigenvectors())};
}

std::vector<double> char_poly(const RealMat& a) {
    a.require_square("char_poly");
    const Index n = a.rows();
    if (n == 0) return {1.0};
    // Upper Hessenberg H = Q^T A Q, then the column recurrence
    // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (h_{i+1,i} ... h_{k,k-1}) p_{i-1}.
    const Eigen::HessenbergDecomposition<EigenMat<double>> hd(to_eigen(a));
    const EigenMat<double> h = hd.matrixH();
    std::vector<std::vector<double>> p(static_cast<std::size_t>(n + 1));
    p[0] = {1.0};
    for (Index k = 1; k <= n; ++k) {
        const auto& prev = p[static_cast<std::size_t>(k - 1)];
        std::vector<double> cur(static_cast<std::size_t>(k + 1), 0.0);
        for (std::size_t d = 0; d < prev.size(); ++d) {
            cur[d + 1] += prev[d];
            cur[d] -= h(k - 1, k - 1) * prev[d];
        }
        double sub = 1.0;
        for (Index i = k - 1; i >= 1; --i) {
            sub *= h(i, i - 1);
            const double coeff = h(i - 1, k - 1) * sub;
            const auto& q = p[static_cast<std::size_t>(i - 1)];
            for (std::size_t d = 0; d < q.size(); ++d) cur[d] -= coeff * q[d];
        }
        p[static_cast<std::size_t>(k)] = std::move(cur);
    }
    return p[static_cast<std::size_t>(n)];
}
std::vector<Rational> char_poly(const RationalMat& a) { return char_poly_impl(a); }

Index exact_rank(const RationalMat& a) {
    RationalMat w = a;
    Index rank = 0;
    for (Index c = 0; c < w.cols() && rank < w.rows(); ++c) {
        Index piv = -1;
        for (Index r = rank; r < w.rows(); ++r) {
            if (!(w(r, c) == Rational{})) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != rank)
            for (Index j = 0; j < w.cols(); ++j) std::swap(w(piv, j), w(rank, j));
        for (Index r = rank + 1; r < w.rows(); ++r) {
            if (w(r, c) == Rational{}) continue;
            const Rational f = w(r, c) / w(rank, c);
            for (Index j = c; j < w.cols(); ++j) w(r, j) -= f * w(rank, j);
        }
        ++rank;
    }
    return rank;
}

template <class T>
Matrix<T> orthonormalize_columns(const Matrix<T>& a) {
    Matrix<T> q = a;
    for (Index c = 0; c < q.cols(); ++c) {
        const double original = col_norm(q, c);
        project_out(q, c, q, c);
        project_out(q, c, q, c);
        const double nrm = col_norm(q, c);
        if (!(nrm > 1e-13 * original) || nrm == 0.0) {
            throw PreconditionError("orthonormalize_columns: column " + std::to_string(c) + " is dependent");
        }
        for (Index i = 0; i < q.rows(); ++i) q(i, c) /= nrm;
    }
    return q;
}

template <class T>
Matrix<T> orthonormal_complement(const Matrix<T>& q) {
    const Index n = q.rows();
    const Index k = q.cols();
    Matrix<T> basis = hstack(q, Matrix<T>(n, n - k));
    Index filled = k;
    for (Index j = 0; j < n && filled < n; ++j) {
        Matrix<T> v(n, 1);
        v(j, 0) = T(1);
        project_out(v, 0, basis, filled);
        project_out(v, 0, basis, filled);
        const double nrm = col_norm(v, 0);
        if (nrm < 1e-6) continue;
        for (Index i = 0; i < n; ++i) basis(i, filled) = v(i, 0) / nrm;
        ++filled;
    }
    if (filled != n) throw PreconditionError("orthonormal_complement: input columns are not orthonormal");
    return basis.block(0, k, n, n - k);
}

template <class T>
std::vector<Index> select_independent_columns(const Matrix<T>& e, double rel_tol) {
    const Index m = e.cols();
    double scale = 0.0;
    for (Index c = 0; c < m; ++c) scale = std::max(scale, col_norm(e, c));
    std::vector<Index> selected;
    if (scale == 0.0) return selected;
    Matrix<T> work = e;
    std::vector<bool> used(static_cast<std::size_t>(m), false);
    while (static_cast<Index>(selected.size()) < std::min(m, e.rows())) {
        Index best = -1;
        double best_norm = 0.0;
        for (Index c = 0; c < m; ++c) {
            if (used[static_cast<std::size_t>(c)]) continue;
            const double nrm = col_norm(work, c);
            if (nrm > best_norm) {
                best_norm = nrm;
                best = c;
            }
        }
        if (best < 0 || best_norm <= rel_tol * scale) break;
        used[static_cast<std::size_t>(best)] = true;
        selected.push_back(best);
        Matrix<T> q = work.col(best);
        for (Index i = 0; i < q.rows(); ++i) q(i, 0) /= best_norm;
        for (Index c = 0; c < m; ++c) {
            if (used[static_cast<std::size_t>(c)]) continue;
            const T h = inner(q, 0, work, c);
            for (Index i = 0; i < work.rows(); ++i) work(i, c) -= q(i, 0) * h;
        }
    }
    std::sort(selected.begin(), selected.end());
    return selected;
}

template <class T>
Matrix<T> extend_column_isometry(const Matrix<T>& e, const Matrix<T>& e_prime, double rel_tol) {
    e.require_same_shape(e_prime, "extend_column_isometry");
    const Index n = e.rows();
    const auto sel = select_independent_columns(e, rel_tol);
    const auto k = static_cast<Index>(sel.size());
    Matrix<T> a(n, k), a_prime(n, k);
    for (Index j = 0; j < k; ++j) {
        a.set_col(j, e.col(sel[static_cast<std::size_t>(j)]));
        a_prime.set_col(j, e_prime.col(sel[static_cast<std::size_t>(j)]));
    }
    Matrix<T> q = orthonormalize_columns(a);
    Matrix<T> q_prime(n, 0);
    if (k > 0) {
        // A = Q R and, since A^dagger A = A'^dagger A', A' R^{-1} is orthonormal too.
        const Matrix<T> r = q.adjoint() * a;
        q_prime = orthonormalize_columns(a_prime * inverse(r));
    }
    const Matrix<T> src = hstack(q, orthonormal_complement(q));
    const Matrix<T> dst = hstack(q_prime, orthonormal_complement(q_prime));
    return dst * src.adjoint();
}

template RealMat orthonormalize_columns(const RealMat&);
template ComplexMat orthonormalize_columns(const ComplexMat&);
template RealMat orthonormal_complement(const RealMat&);
template ComplexMat orthonormal_complement(const ComplexMat&);
template std::vector<Index> select_independent_columns(const RealMat&, double);
template std::vector<Index> select_independent_columns(const ComplexMat&, double);
template RealMat extend_column_isometry(const RealMat&, const RealMat&, double);
template ComplexMat extend_column_isometry(const ComplexMat&, const ComplexMat&, double);

RealMat gaussian_matrix(Index rows, Index cols, CounterRng& rng) {
    RealMat a(rows, cols);
    for (auto& x : a.data()) x = rng.gaussian();
    return a;
}

ComplexMat gaussian_complex_matrix(Index rows, Index cols, CounterRng& rng) {
    ComplexMat a(rows, cols);
    for (auto& x : a.data()) {
        const double re = rng.gaussian();
        const double im = rng.gaussian();
        x = cplx(re, im);
    }
    return a;
}

double skew_defect(const RealMat& a) {
    a.require_square("skew_defect");
    return frobenius_norm(a + a.transpose());
}

double skew_defect(const ComplexMat& a) {
    a.require_square("skew_defect");
    return frobenius_norm(a + a.adjoint());
}

}  // namespace dualpairs
