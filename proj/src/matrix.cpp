#include "dualpairs/matrix.hpp"

#include "dualpairs/kernels/kernels.hpp"

namespace dualpairs {

namespace {

void require_inner(Index acols, Index brows, const std::string& a, const std::string& b) {
    if (acols != brows) throw DimensionError("matrix product: inner dimensions differ (" + a + " * " + b + ")");
}

}  // namespace

RealMat operator*(const RealMat& a, const RealMat& b) {
    require_inner(a.cols(), b.rows(), a.shape_str(), b.shape_str());
    RealMat c(a.rows(), b.cols());
    if (c.size() == 0) return c;
    kernels::gemm(static_cast<std::size_t>(a.rows()), static_cast<std::size_t>(b.cols()),
                  static_cast<std::size_t>(a.cols()), a.data().data(), b.data().data(), c.data().data());
    return c;
}

ComplexMat operator*(const ComplexMat& a, const ComplexMat& b) {
    require_inner(a.cols(), b.rows(), a.shape_str(), b.shape_str());
    const RealMat ar = real_part(a), ai = imag_part(a);
    const RealMat br = real_part(b), bi = imag_part(b);
    return make_complex(ar * br - ai * bi, ar * bi + ai * br);
}

RationalMat operator*(const RationalMat& a, const RationalMat& b) {
    require_inner(a.cols(), b.rows(), a.shape_str(), b.shape_str());
    RationalMat c(a.rows(), b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index p = 0; p < a.cols(); ++p) {
            const Rational& aip = a(i, p);
            if (aip == Rational{}) continue;
            for (Index j = 0; j < b.cols(); ++j) c(i, j) += aip * b(p, j);
        }
    return c;
}

ComplexMat to_complex(const RealMat& a) {
    ComplexMat c(a.rows(), a.cols());
    for (Index i = 0; i < a.size(); ++i) c.data()[i] = a.data()[i];
    return c;
}

RealMat real_part(const ComplexMat& a) {
    RealMat r(a.rows(), a.cols());
    for (Index i = 0; i < a.size(); ++i) r.data()[i] = a.data()[i].real();
    return r;
}

RealMat imag_part(const ComplexMat& a) {
    RealMat r(a.rows(), a.cols());
    for (Index i = 0; i < a.size(); ++i) r.data()[i] = a.data()[i].imag();
    return r;
}

ComplexMat make_complex(const RealMat& re, const RealMat& im) {
    re.require_same_shape(im, "make_complex");
    ComplexMat c(re.rows(), re.cols());
    for (Index i = 0; i < re.size(); ++i) c.data()[i] = cplx(re.data()[i], im.data()[i]);
    return c;
}

RationalMat to_rational(const RealMat& a) {
    RationalMat r(a.rows(), a.cols());
    for (Index i = 0; i < a.size(); ++i) {
        auto q = Rational::from_double(a.data()[i]);
        if (!q) throw InputError("matrix entry has no exact 64-bit rational form");
        r.data()[i] = *q;
    }
    return r;
}

RealMat to_real(const RationalMat& a) {
    RealMat r(a.rows(), a.cols());
    for (Index i = 0; i < a.size(); ++i) r.data()[i] = a.data()[i].to_double();
    return r;
}

}  // namespace dualpairs
