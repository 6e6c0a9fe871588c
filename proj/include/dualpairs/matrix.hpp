#pragma once

// Dense row-major matrices with explicit shape.
//
// Matrix<double> and Matrix<std::complex<double>> carry the manifold points
// and Lie-algebra elements; Matrix<Rational> is the exact path used by the
// Jordan constructions of the general-linear pair.

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "dualpairs/errors.hpp"
#include "dualpairs/rational.hpp"

namespace dualpairs {

using Index = std::ptrdiff_t;
using cplx = std::complex<double>;

template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};
template <class T>
inline constexpr bool is_complex_v = is_complex<T>::value;

template <class T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(Index rows, Index cols) : rows_(rows), cols_(cols), data_(checked_size(rows, cols), T(0)) {}
    Matrix(Index rows, Index cols, std::vector<T> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (static_cast<Index>(data_.size()) != checked_size(rows, cols)) {
            throw DimensionError("matrix data length " + std::to_string(data_.size()) + " != " +
                                 std::to_string(rows) + "x" + std::to_string(cols));
        }
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = static_cast<Index>(rows.size());
        cols_ = rows_ == 0 ? 0 : static_cast<Index>(rows.begin()->size());
        data_.reserve(static_cast<std::size_t>(rows_ * cols_));
        for (const auto& r : rows) {
            if (static_cast<Index>(r.size()) != cols_) throw DimensionError("ragged matrix initializer");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix zeros(Index rows, Index cols) { return Matrix(rows, cols); }
    static Matrix identity(Index n) {
        Matrix m(n, n);
        for (Index i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    // Column vector from entries.
    static Matrix column(std::span<const T> v) {
        return Matrix(static_cast<Index>(v.size()), 1, std::vector<T>(v.begin(), v.end()));
    }

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }
    Index size() const { return rows_ * cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return data_.empty(); }

    T& operator()(Index i, Index j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
    const T& operator()(Index i, Index j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

    std::span<T> data() { return data_; }
    std::span<const T> data() const { return data_; }
    std::span<T> row_span(Index i) { return {data_.data() + i * cols_, static_cast<std::size_t>(cols_)}; }
    std::span<const T> row_span(Index i) const {
        return {data_.data() + i * cols_, static_cast<std::size_t>(cols_)};
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (Index i = 0; i < rows_; ++i)
            for (Index j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    // Conjugate transpose; plain transpose for real scalars.
    Matrix adjoint() const {
        if constexpr (is_complex_v<T>) {
            Matrix t(cols_, rows_);
            for (Index i = 0; i < rows_; ++i)
                for (Index j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
            return t;
        } else {
            return transpose();
        }
    }

    Matrix block(Index r0, Index c0, Index nr, Index nc) const {
        check_block(r0, c0, nr, nc);
        Matrix b(nr, nc);
        for (Index i = 0; i < nr; ++i)
            for (Index j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }
    void set_block(Index r0, Index c0, const Matrix& b) {
        check_block(r0, c0, b.rows(), b.cols());
        for (Index i = 0; i < b.rows(); ++i)
            for (Index j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }
    Matrix col(Index j) const { return block(0, j, rows_, 1); }
    void set_col(Index j, const Matrix& v) { set_block(0, j, v); }
    Matrix row(Index i) const { return block(i, 0, 1, cols_); }

    T trace() const {
        require_square("trace");
        T s(0);
        for (Index i = 0; i < rows_; ++i) s += (*this)(i, i);
        return s;
    }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o, "+=");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o, "-=");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Matrix& operator*=(const T& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }
    Matrix operator-() const {
        Matrix r(*this);
        for (auto& x : r.data_) x = -x;
        return r;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    std::string shape_str() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    void require_same_shape(const Matrix& o, const char* what) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) {
            throw DimensionError(std::string(what) + ": shape mismatch " + shape_str() + " vs " + o.shape_str());
        }
    }
    void require_square(const char* what) const {
        if (rows_ != cols_) throw DimensionError(std::string(what) + ": matrix not square (" + shape_str() + ")");
    }

private:
    static Index checked_size(Index r, Index c) {
        if (r < 0 || c < 0) throw DimensionError("negative matrix dimension");
        return r * c;
    }
    void check_block(Index r0, Index c0, Index nr, Index nc) const {
        if (r0 < 0 || c0 < 0 || nr < 0 || nc < 0 || r0 + nr > rows_ || c0 + nc > cols_) {
            throw DimensionError("block out of range for " + shape_str());
        }
    }

    Index rows_ = 0;
    Index cols_ = 0;
    std::vector<T> data_;
};

using RealMat = Matrix<double>;
using ComplexMat = Matrix<cplx>;
using RationalMat = Matrix<Rational>;

// Products. Real products go through the dispatched dense kernels; complex
// products are assembled from four real products.
RealMat operator*(const RealMat& a, const RealMat& b);
ComplexMat operator*(const ComplexMat& a, const ComplexMat& b);
RationalMat operator*(const RationalMat& a, const RationalMat& b);

template <class T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows()) throw DimensionError("hstack: row counts differ (" + a.shape_str() + ", " + b.shape_str() + ")");
    Matrix<T> r(a.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(0, a.cols(), b);
    return r;
}

template <class T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.cols()) throw DimensionError("vstack: column counts differ (" + a.shape_str() + ", " + b.shape_str() + ")");
    Matrix<T> r(a.rows() + b.rows(), a.cols());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), 0, b);
    return r;
}

template <class T>
Matrix<T> block_diag(const std::vector<Matrix<T>>& blocks) {
    Index n = 0, m = 0;
    for (const auto& b : blocks) {
        n += b.rows();
        m += b.cols();
    }
    Matrix<T> r(n, m);
    Index i = 0, j = 0;
    for (const auto& b : blocks) {
        r.set_block(i, j, b);
        i += b.rows();
        j += b.cols();
    }
    return r;
}

template <class T>
double frobenius_norm(const Matrix<T>& a) {
    double s = 0.0;
    for (const auto& x : a.data()) s += std::norm(x);
    return std::sqrt(s);
}

template <class T>
double max_abs(const Matrix<T>& a) {
    double s = 0.0;
    for (const auto& x : a.data()) s = std::max(s, static_cast<double>(std::abs(x)));
    return s;
}

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
    return a * b - b * a;
}

// ‖a - b‖_F / max(1, ‖b‖_F)
template <class T>
double relative_residual(const Matrix<T>& a, const Matrix<T>& b) {
    a.require_same_shape(b, "relative_residual");
    return frobenius_norm(a - b) / std::max(1.0, frobenius_norm(b));
}

ComplexMat to_complex(const RealMat& a);
RealMat real_part(const ComplexMat& a);
RealMat imag_part(const ComplexMat& a);
ComplexMat make_complex(const RealMat& re, const RealMat& im);

RationalMat to_rational(const RealMat& a);  // throws if an entry is not representable
RealMat to_real(const RationalMat& a);

}  // namespace dualpairs
