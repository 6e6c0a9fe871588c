#include "dualpairs/lie.hpp"

#include <cmath>
#include <limits>

namespace dualpairs {

namespace {

template <class T>
double sp_residual(const Matrix<T>& m) {
    if (m.rows() % 2 != 0) throw DimensionError("sp residual: odd matrix size " + m.shape_str());
    const RealMat j = standard_J(m.rows() / 2);
    if constexpr (is_complex_v<T>) {
        const ComplexMat jc = to_complex(j);
        return frobenius_norm(m.transpose() * jc + jc * m);
    } else {
        return frobenius_norm(m.transpose() * j + j * m);
    }
}

template <class T>
double algebra_residual_impl(Algebra a, const Matrix<T>& m) {
    m.require_square("algebra_residual");
    switch (a) {
        case Algebra::u: return frobenius_norm(m + m.adjoint());
        case Algebra::o: {
            double s = frobenius_norm(m + m.transpose());
            if constexpr (is_complex_v<T>) s += frobenius_norm(imag_part(m));
            return s;
        }
        case Algebra::sp: {
            double s = sp_residual(m);
            if constexpr (is_complex_v<T>) s += frobenius_norm(imag_part(m));
            return s;
        }
        case Algebra::gl:
            if constexpr (is_complex_v<T>) return frobenius_norm(imag_part(m));
            return 0.0;
    }
    return 0.0;
}

template <class T>
double group_residual_impl(Group g, const Matrix<T>& m) {
    m.require_square("group_residual");
    const Index n = m.rows();
    switch (g) {
        case Group::U:
        case Group::O: return frobenius_norm(m.adjoint() * m - Matrix<T>::identity(n));
        case Group::Sp: {
            if (n % 2 != 0) throw DimensionError("Sp element must have even size, got " + m.shape_str());
            if constexpr (is_complex_v<T>) {
                const ComplexMat j = to_complex(standard_J(n / 2));
                return frobenius_norm(m.transpose() * j * m - j);
            } else {
                const RealMat j = standard_J(n / 2);
                return frobenius_norm(m.transpose() * j * m - j);
            }
        }
        case Group::GL: {
            if (n == 0) return 0.0;
            try {
                return frobenius_norm(m * inverse(m) - Matrix<T>::identity(n));
            } catch (const PreconditionError&) {
                return std::numeric_limits<double>::infinity();
            }
        }
    }
    return 0.0;
}

void require_scalar_kind(bool complex_algebra, bool complex_value, const std::string& what) {
    if (complex_algebra != complex_value) {
        throw PreconditionError(what + ": " + (complex_algebra ? "complex" : "real") + " matrix required");
    }
}

RealMat elementary(Index n, Index i, Index j) {
    RealMat e(n, n);
    e(i, j) = 1.0;
    return e;
}

std::vector<RealMat> symmetric_basis(Index n) {
    std::vector<RealMat> out;
    for (Index i = 0; i < n; ++i) out.push_back(elementary(n, i, i));
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) out.push_back(elementary(n, i, j) + elementary(n, j, i));
    return out;
}

}  // namespace

std::string side_name(Side s) { return s == Side::left ? "left" : "right"; }

std::string algebra_name(Algebra a) {
    switch (a) {
        case Algebra::u: return "u";
        case Algebra::o: return "o";
        case Algebra::sp: return "sp";
        case Algebra::gl: return "gl";
    }
    return "?";
}

std::string group_name(Group g) {
    switch (g) {
        case Group::U: return "U";
        case Group::O: return "O";
        case Group::Sp: return "Sp";
        case Group::GL: return "GL";
    }
    return "?";
}

Side parse_side(const std::string& s) {
    if (s == "left") return Side::left;
    if (s == "right") return Side::right;
    throw InputError("unknown side '" + s + "' (expected left|right)");
}

Algebra algebra_of(Group g) {
    switch (g) {
        case Group::U: return Algebra::u;
        case Group::O: return Algebra::o;
        case Group::Sp: return Algebra::sp;
        case Group::GL: return Algebra::gl;
    }
    return Algebra::gl;
}

bool is_complex_algebra(Algebra a) { return a == Algebra::u; }

Index matrix_size(Algebra a, Index n) { return a == Algebra::sp ? 2 * n : n; }
Index matrix_size(Group g, Index n) { return matrix_size(algebra_of(g), n); }

Index algebra_dim(Algebra a, Index n) {
    switch (a) {
        case Algebra::u:
        case Algebra::gl: return n * n;
        case Algebra::o: return n * (n - 1) / 2;
        case Algebra::sp: return n * (2 * n + 1);
    }
    return 0;
}

double algebra_residual(Algebra a, const RealMat& m) { return algebra_residual_impl(a, m); }
double algebra_residual(Algebra a, const ComplexMat& m) { return algebra_residual_impl(a, m); }

LieAlgElem LieAlgElem::make(Algebra a, RealMat value, double tol) {
    require_scalar_kind(is_complex_algebra(a), false, algebra_name(a));
    const double r = algebra_residual(a, value);
    if (r > tol * std::max(1.0, frobenius_norm(value))) {
        throw PreconditionError("matrix is not in " + algebra_name(a) + " (residual " + std::to_string(r) + ")");
    }
    return LieAlgElem(a, std::move(value));
}

LieAlgElem LieAlgElem::make(Algebra a, ComplexMat value, double tol) {
    require_scalar_kind(is_complex_algebra(a), true, algebra_name(a));
    const double r = algebra_residual(a, value);
    if (r > tol * std::max(1.0, frobenius_norm(value))) {
        throw PreconditionError("matrix is not in " + algebra_name(a) + " (residual " + std::to_string(r) + ")");
    }
    return LieAlgElem(a, std::move(value));
}

const RealMat& LieAlgElem::real() const {
    if (is_complex()) throw PreconditionError(algebra_name(algebra_) + " element is complex");
    return std::get<RealMat>(value_);
}

const ComplexMat& LieAlgElem::complex() const {
    if (!is_complex()) throw PreconditionError(algebra_name(algebra_) + " element is real");
    return std::get<ComplexMat>(value_);
}

ComplexMat LieAlgElem::as_complex() const { return is_complex() ? complex() : to_complex(real()); }

Index LieAlgElem::size() const { return is_complex() ? complex().rows() : real().rows(); }

double LieAlgElem::residual() const {
    return is_complex() ? algebra_residual(algebra_, complex()) : algebra_residual(algebra_, real());
}

double group_residual(Group g, const RealMat& m) { return group_residual_impl(g, m); }
double group_residual(Group g, const ComplexMat& m) { return group_residual_impl(g, m); }

GroupElem GroupElem::make(Group g, RealMat value, double tol) {
    require_scalar_kind(g == Group::U, false, group_name(g));
    const double r = group_residual(g, value);
    const double scale = std::max(1.0, std::pow(frobenius_norm(value), 2));
    if (!(r <= tol * scale)) {
        throw PreconditionError("matrix is not in " + group_name(g) + " (residual " + std::to_string(r) + ")");
    }
    return GroupElem(g, std::move(value));
}

GroupElem GroupElem::make(Group g, ComplexMat value, double tol) {
    require_scalar_kind(g == Group::U, true, group_name(g));
    const double r = group_residual(g, value);
    const double scale = std::max(1.0, std::pow(frobenius_norm(value), 2));
    if (!(r <= tol * scale)) {
        throw PreconditionError("matrix is not in " + group_name(g) + " (residual " + std::to_string(r) + ")");
    }
    return GroupElem(g, std::move(value));
}

GroupElem GroupElem::identity(Group g, Index n) {
    const Index size = matrix_size(g, n);
    if (g == Group::U) return GroupElem(g, ComplexMat::identity(size));
    return GroupElem(g, RealMat::identity(size));
}

const RealMat& GroupElem::real() const {
    if (is_complex()) throw PreconditionError(group_name(group_) + " element is complex");
    return std::get<RealMat>(value_);
}

const ComplexMat& GroupElem::complex() const {
    if (!is_complex()) throw PreconditionError(group_name(group_) + " element is real");
    return std::get<ComplexMat>(value_);
}

Index GroupElem::size() const { return is_complex() ? complex().rows() : real().rows(); }

double GroupElem::residual() const {
    return is_complex() ? group_residual(group_, complex()) : group_residual(group_, real());
}

GroupElem GroupElem::inverse() const {
    switch (group_) {
        case Group::U: return GroupElem(group_, complex().adjoint());
        case Group::O: return GroupElem(group_, real().transpose());
        case Group::Sp: {
            const RealMat j = standard_J(real().rows() / 2);
            return GroupElem(group_, -(j * real().transpose() * j));
        }
        case Group::GL: return GroupElem(group_, dualpairs::inverse(real()));
    }
    return *this;
}

std::vector<LieAlgElem> algebra_basis(Algebra a, Index n) {
    if (n < 0) throw DimensionError("algebra_basis: negative size");
    std::vector<LieAlgElem> out;
    switch (a) {
        case Algebra::gl:
            for (Index i = 0; i < n; ++i)
                for (Index j = 0; j < n; ++j) out.push_back(LieAlgElem(a, elementary(n, i, j)));
            break;
        case Algebra::o:
            for (Index i = 0; i < n; ++i)
                for (Index j = i + 1; j < n; ++j)
                    out.push_back(LieAlgElem(a, elementary(n, i, j) - elementary(n, j, i)));
            break;
        case Algebra::u: {
            const cplx I(0.0, 1.0);
            for (Index k = 0; k < n; ++k) out.push_back(LieAlgElem(a, to_complex(elementary(n, k, k)) * I));
            for (Index i = 0; i < n; ++i)
                for (Index j = i + 1; j < n; ++j)
                    out.push_back(LieAlgElem(a, to_complex(elementary(n, i, j) - elementary(n, j, i))));
            for (Index i = 0; i < n; ++i)
                for (Index j = i + 1; j < n; ++j)
                    out.push_back(LieAlgElem(a, to_complex(elementary(n, i, j) + elementary(n, j, i)) * I));
            break;
        }
        case Algebra::sp: {
            for (Index i = 0; i < n; ++i)
                for (Index j = 0; j < n; ++j) {
                    const RealMat e = elementary(n, i, j);
                    out.push_back(LieAlgElem(a, block_diag<double>({e, -e.transpose()})));
                }
            for (const auto& b : symmetric_basis(n)) {
                RealMat z(2 * n, 2 * n);
                z.set_block(0, n, b);
                out.push_back(LieAlgElem(a, std::move(z)));
            }
            for (const auto& c : symmetric_basis(n)) {
                RealMat z(2 * n, 2 * n);
                z.set_block(n, 0, c);
                out.push_back(LieAlgElem(a, std::move(z)));
            }
            break;
        }
    }
    return out;
}

LieAlgElem random_algebra_element(Algebra a, Index n, CounterRng& rng) {
    const Index size = matrix_size(a, n);
    if (a == Algebra::u) {
        const ComplexMat g = gaussian_complex_matrix(size, size, rng);
        ComplexMat z = g - g.adjoint();
        const double nrm = frobenius_norm(z);
        if (nrm > 0.0) z *= cplx(1.0 / nrm);
        return LieAlgElem(a, std::move(z));
    }
    RealMat z;
    switch (a) {
        case Algebra::gl: z = gaussian_matrix(size, size, rng); break;
        case Algebra::o: {
            const RealMat g = gaussian_matrix(size, size, rng);
            z = g - g.transpose();
            break;
        }
        case Algebra::sp: {
            const RealMat g = gaussian_matrix(size, size, rng);
            z = standard_J(n) * (g + g.transpose());
            break;
        }
        case Algebra::u: break;
    }
    const double nrm = frobenius_norm(z);
    if (nrm > 0.0) z *= 1.0 / nrm;
    return LieAlgElem(a, std::move(z));
}

GroupElem random_group_element(Group g, Index n, CounterRng& rng) {
    if (n < 1) throw DimensionError("random_group_element: n must be >= 1");
    switch (g) {
        case Group::U: return GroupElem(g, orthonormalize_columns(gaussian_complex_matrix(n, n, rng)));
        case Group::O: return GroupElem(g, orthonormalize_columns(gaussian_matrix(n, n, rng)));
        case Group::Sp:
        case Group::GL: return GroupElem(g, matrix_exp(random_algebra_element(algebra_of(g), n, rng).real()));
    }
    return GroupElem::identity(g, n);
}

GroupElem random_group_element(Group g, Index n, std::uint64_t seed) {
    CounterRng rng(seed);
    return random_group_element(g, n, rng);
}

}  // namespace dualpairs
