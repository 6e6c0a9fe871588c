#include <algorithm>
#include <cmath>
#include <limits>

#include "dualpairs/symplectic_pair.hpp"

namespace dualpairs::symplectic {

namespace {

double omega_vec(const RealMat& x, const RealMat& y) { return omega_real(x, y); }

// Basis under construction on one side: pairs (E_l, F_l) with omega(E_l, F_l) = 1.
struct Darboux {
    std::vector<RealMat> e;
    std::vector<RealMat> f;

    RealMat project(const RealMat& x) const {
        RealMat out = x;
        for (std::size_t l = 0; l < e.size(); ++l) {
            const double wf = omega_vec(x, f[l]);
            const double we = omega_vec(x, e[l]);
            out -= e[l] * wf;
            out += f[l] * we;
        }
        return out;
    }
};

RealMat unit(Index dim, Index i) {
    RealMat v(dim, 1);
    v(i, 0) = 1.0;
    return v;
}

double col_norm(const RealMat& v) { return frobenius_norm(v); }

// Min-norm s with omega(c, s) = 0 for the `fixed` vectors and omega(r_i, s) = delta_ij.
std::vector<RealMat> radical_partners(const std::vector<RealMat>& fixed, const std::vector<RealMat>& radical) {
    std::vector<RealMat> partners;
    if (radical.empty()) return partners;
    const Index dim = radical.front().rows();
    const Index n = dim / 2;
    const RealMat j = standard_J(n);
    const auto rows = static_cast<Index>(fixed.size() + radical.size());
    RealMat c(dim, rows);
    Index k = 0;
    for (const auto& v : fixed) c.set_col(k++, v);
    for (const auto& v : radical) c.set_col(k++, v);
    const RealMat mat = c.transpose() * j;  // omega(c_k, s) = (c^T J s)_k
    const RealMat gram_inv = inverse(mat * mat.transpose());
    for (std::size_t i = 0; i < radical.size(); ++i) {
        RealMat rhs(rows, 1);
        rhs(static_cast<Index>(fixed.size() + i), 0) = 1.0;
        partners.push_back(mat.transpose() * (gram_inv * rhs));
    }
    // Make the partners mutually omega-orthogonal using the isotropic radical.
    for (std::size_t jdx = 0; jdx < partners.size(); ++jdx) {
        for (std::size_t i = 0; i < jdx; ++i) {
            const double c_ij = omega_vec(partners[i], partners[jdx]);
            partners[jdx] += radical[i] * c_ij;
        }
    }
    return partners;
}

void complete(Darboux& basis, Index n) {
    const Index dim = 2 * n;
    while (static_cast<Index>(basis.e.size()) < n) {
        RealMat best_e;
        double best_norm = -1.0;
        for (Index i = 0; i < dim; ++i) {
            RealMat cand = basis.project(unit(dim, i));
            const double nrm = col_norm(cand);
            if (nrm > best_norm * (1.0 + 1e-12)) {
                best_norm = nrm;
                best_e = std::move(cand);
            }
        }
        if (!(best_norm > 1e-8)) throw PreconditionError("witt_extend: Darboux completion failed");
        best_e *= 1.0 / best_norm;

        RealMat best_f;
        double best_w = 0.0;
        for (Index i = 0; i < dim; ++i) {
            RealMat cand = basis.project(unit(dim, i));
            const double w = omega_vec(best_e, cand);
            if (std::abs(w) > std::abs(best_w) * (1.0 + 1e-12)) {
                best_w = w;
                best_f = std::move(cand);
            }
        }
        if (!(std::abs(best_w) > 1e-8)) throw PreconditionError("witt_extend: Darboux completion failed");
        best_f *= 1.0 / best_w;
        basis.e.push_back(std::move(best_e));
        basis.f.push_back(std::move(best_f));
    }
}

RealMat basis_matrix(const Darboux& b) {
    const auto n = static_cast<Index>(b.e.size());
    RealMat out(2 * n, 2 * n);
    for (Index l = 0; l < n; ++l) {
        out.set_col(l, b.e[static_cast<std::size_t>(l)]);
        out.set_col(n + l, b.f[static_cast<std::size_t>(l)]);
    }
    return out;
}

}  // namespace

GroupElem witt_extend(const RealMat& src, const RealMat& dst, double tol) {
    src.require_same_shape(dst, "witt_extend");
    if (src.rows() % 2 != 0 || src.rows() == 0) throw DimensionError("witt_extend: vectors must have even length");
    const Index dim = src.rows();
    const Index n = dim / 2;
    const Index k = src.cols();
    if (k > dim) throw DimensionError("witt_extend: more than 2n vectors");
    if (rank_tol(src) != k || rank_tol(dst) != k) throw PreconditionError("witt_extend: input vectors are dependent");

    const RealMat j = standard_J(n);
    const RealMat gram = src.transpose() * j * src;
    const RealMat gram_dst = dst.transpose() * j * dst;
    const double scale = std::max({1.0, std::pow(frobenius_norm(src), 2), std::pow(frobenius_norm(dst), 2)});
    if (frobenius_norm(gram - gram_dst) > tol * scale) {
        throw PreconditionError("witt_extend: omega products of source and destination differ");
    }

    // Symplectic Gram-Schmidt in coefficient space, driven by the source Gram matrix.
    double max_sq = 0.0;
    for (Index c = 0; c < k; ++c) max_sq = std::max(max_sq, std::pow(frobenius_norm(src.col(c)), 2));
    const double thresh = 1e-10 * std::max(max_sq, std::numeric_limits<double>::min());

    std::vector<RealMat> remaining;
    for (Index c = 0; c < k; ++c) remaining.push_back(unit(k, c));
    auto w = [&](const RealMat& a, const RealMat& b) { return (a.transpose() * gram * b)(0, 0); };

    std::vector<RealMat> sym_e, sym_f;
    while (remaining.size() >= 2) {
        std::size_t ia = 0, ib = 0;
        double best = 0.0;
        for (std::size_t a = 0; a < remaining.size(); ++a)
            for (std::size_t b = a + 1; b < remaining.size(); ++b) {
                const double v = std::abs(w(remaining[a], remaining[b]));
                if (v > best) {
                    best = v;
                    ia = a;
                    ib = b;
                }
            }
        if (best <= thresh) break;
        const RealMat e = remaining[ia];
        const RealMat f = remaining[ib] * (1.0 / w(remaining[ia], remaining[ib]));
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(ib));
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(ia));
        for (auto& x : remaining) {
            const double xf = w(x, f);
            const double xe = w(x, e);
            x -= e * xf;
            x += f * xe;
        }
        sym_e.push_back(e);
        sym_f.push_back(f);
    }

    Darboux side[2];
    const RealMat* vecs[2] = {&src, &dst};
    for (int s = 0; s < 2; ++s) {
        std::vector<RealMat> fixed;
        for (std::size_t l = 0; l < sym_e.size(); ++l) {
            side[s].e.push_back(*vecs[s] * sym_e[l]);
            side[s].f.push_back(*vecs[s] * sym_f[l]);
            fixed.push_back(side[s].e.back());
            fixed.push_back(side[s].f.back());
        }
        std::vector<RealMat> radical;
        for (const auto& c : remaining) radical.push_back(*vecs[s] * c);
        const auto partners = radical_partners(fixed, radical);
        for (std::size_t i = 0; i < radical.size(); ++i) {
            side[s].e.push_back(radical[i]);
            side[s].f.push_back(partners[i]);
        }
        complete(side[s], n);
    }

    const RealMat b_src = basis_matrix(side[0]);
    const RealMat b_dst = basis_matrix(side[1]);
    // B^T J B = J gives B^{-1} = -J B^T J.
    RealMat s = b_dst * (-(j * b_src.transpose() * j));
    return GroupElem::make(Group::Sp, std::move(s), 1e-6);
}

}  // namespace dualpairs::symplectic
