#include "dualpairs/pairs_common.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dualpairs {

namespace {

RealMat vectorize(const RealMat& a) { return RealMat(a.size(), 1, std::vector<double>(a.data().begin(), a.data().end())); }

void require_group(const GroupElem& g, PairId pair, Side side, Index dim) {
    const Group want = pair_group(pair, side);
    if (g.group() != want || g.size() != matrix_size(want, dim)) {
        throw DimensionError("expected an element of " + group_name(want) + "(" + std::to_string(dim) + ") for the " +
                             side_name(side) + " action of the " + pair_name(pair) + " pair");
    }
}

double close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

bool vectors_close(const std::vector<double>& a, const std::vector<double>& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!close(a[i], b[i], tol)) return false;
    return true;
}

std::vector<double> sigmas_from_u_momentum(const ComplexMat& j, Index size, const Tolerances& tol) {
    // Singular values of (i/2) E E^dagger are sigma^2 / 2; those below the
    // rank threshold are zero sigmas.
    std::vector<double> s = singular_values(j);
    const double cut = s.empty() ? 0.0
                                 : tol.rank_tol_factor * static_cast<double>(j.rows()) *
                                       std::numeric_limits<double>::epsilon() * s.front();
    for (auto& x : s) x = x <= cut ? 0.0 : std::sqrt(2.0 * x);
    s.resize(static_cast<std::size_t>(size), 0.0);
    return s;
}

}  // namespace

std::string pair_name(PairId p) {
    switch (p) {
        case PairId::unitary: return "unitary";
        case PairId::symplectic: return "symplectic";
        case PairId::general_linear: return "general_linear";
    }
    return "?";
}

PairId parse_pair(const std::string& s) {
    if (s == "unitary" || s == "u") return PairId::unitary;
    if (s == "symplectic" || s == "sp") return PairId::symplectic;
    if (s == "general_linear" || s == "gl") return PairId::general_linear;
    throw InputError("unknown pair '" + s + "' (expected unitary|symplectic|gl)");
}

Group pair_group(PairId p, Side s) {
    switch (p) {
        case PairId::unitary: return Group::U;
        case PairId::symplectic: return s == Side::left ? Group::Sp : Group::O;
        case PairId::general_linear: return Group::GL;
    }
    return Group::GL;
}

Algebra pair_algebra(PairId p, Side s) { return algebra_of(pair_group(p, s)); }

DualPairInstance DualPairInstance::unitary(ComplexMat e) {
    DualPairInstance inst{PairId::unitary, e.rows(), e.cols(), std::move(e)};
    inst.validate();
    return inst;
}

DualPairInstance DualPairInstance::symplectic(RealMat e) {
    if (e.rows() % 2 != 0) throw DimensionError("symplectic point needs an even row count, got " + e.shape_str());
    DualPairInstance inst{PairId::symplectic, e.rows() / 2, e.cols(), std::move(e)};
    inst.validate();
    return inst;
}

DualPairInstance DualPairInstance::general_linear(gl::CotangentPoint x) {
    x.validate_shape();
    DualPairInstance inst{PairId::general_linear, x.n(), x.m(), std::move(x)};
    inst.validate();
    return inst;
}

void DualPairInstance::validate(const Tolerances& tol, bool full_rank) const {
    if (n < 1 || m < 1) throw DimensionError("instance dims must be positive");
    switch (pair) {
        case PairId::unitary: {
            const auto& e = complex_point();
            if (e.rows() != n || e.cols() != m) throw DimensionError("unitary point must be n x m");
            if (full_rank && (m > n || rank_tol(e, tol) != m)) throw PreconditionError("unitary point must have rank m");
            break;
        }
        case PairId::symplectic: {
            const auto& e = real_point();
            if (e.rows() != 2 * n || e.cols() != m) throw DimensionError("symplectic point must be 2n x m");
            if (full_rank) symplectic::require_full_rank(e, tol, "symplectic instance");
            break;
        }
        case PairId::general_linear: {
            const auto& x = cotangent_point();
            x.validate_shape();
            if (x.n() != n || x.m() != m) throw DimensionError("cotangent point must be n x m");
            if (full_rank) gl::require_full_rank(x, tol, "general_linear instance");
            break;
        }
    }
}

RealMat DualPairInstance::realified() const {
    switch (pair) {
        case PairId::unitary: return vstack(real_part(complex_point()), imag_part(complex_point()));
        case PairId::symplectic: return real_point();
        case PairId::general_linear: return cotangent_point().stacked();
    }
    return {};
}

MomentumValue momentum(const DualPairInstance& inst, Side side) {
    const bool left = side == Side::left;
    switch (inst.pair) {
        case PairId::unitary:
            return {side, left ? unitary::j_left(inst.complex_point()) : unitary::j_right(inst.complex_point())};
        case PairId::symplectic:
            return {side, left ? symplectic::j_left(inst.real_point()) : symplectic::j_right(inst.real_point())};
        case PairId::general_linear:
            return {side, left ? gl::j_left(inst.cotangent_point()) : gl::j_right(inst.cotangent_point())};
    }
    throw std::logic_error("unreachable");
}

DualPairInstance act(const DualPairInstance& inst, Side side, const GroupElem& g) {
    require_group(g, inst.pair, side, inst.group_dim(side));
    DualPairInstance out = inst;
    const bool left = side == Side::left;
    switch (inst.pair) {
        case PairId::unitary:
            out.point = left ? unitary::act_left(g, inst.complex_point()) : unitary::act_right(inst.complex_point(), g);
            break;
        case PairId::symplectic:
            out.point = left ? symplectic::act_left(g, inst.real_point()) : symplectic::act_right(inst.real_point(), g);
            break;
        case PairId::general_linear:
            out.point = left ? gl::act_left(g, inst.cotangent_point()) : gl::act_right(inst.cotangent_point(), g);
            break;
    }
    return out;
}

WitnessReport witness(const DualPairInstance& x, const DualPairInstance& x_prime, Side side, const Tolerances& tol) {
    if (x.pair != x_prime.pair || x.n != x_prime.n || x.m != x_prime.m) {
        throw DimensionError("witness: the two points belong to different pairs or have different shapes");
    }
    const bool left = side == Side::left;
    switch (x.pair) {
        case PairId::unitary:
            return left ? unitary::witness_left(x.complex_point(), x_prime.complex_point(), tol)
                        : unitary::witness_right(x.complex_point(), x_prime.complex_point(), tol);
        case PairId::symplectic:
            return left ? symplectic::witness_left(x.real_point(), x_prime.real_point(), tol)
                        : symplectic::witness_right(x.real_point(), x_prime.real_point(), tol);
        case PairId::general_linear:
            return left ? gl::witness_left(x.cotangent_point(), x_prime.cotangent_point(), tol)
                        : gl::witness_right(x.cotangent_point(), x_prime.cotangent_point(), tol);
    }
    throw std::logic_error("unreachable");
}

RealMat infinitesimal(const DualPairInstance& inst, Side side, const LieAlgElem& xi) {
    const Algebra want = pair_algebra(inst.pair, side);
    if (xi.algebra() != want || xi.size() != matrix_size(want, inst.group_dim(side))) {
        throw DimensionError("infinitesimal: expected an element of " + algebra_name(want));
    }
    const bool left = side == Side::left;
    switch (inst.pair) {
        case PairId::unitary: {
            const ComplexMat& e = inst.complex_point();
            const ComplexMat v = left ? xi.complex() * e : e * xi.complex();
            return vstack(real_part(v), imag_part(v));
        }
        case PairId::symplectic: return left ? xi.real() * inst.real_point() : inst.real_point() * xi.real();
        case PairId::general_linear: {
            const auto& x = inst.cotangent_point();
            const RealMat& z = xi.real();
            if (left) return vstack(z * x.q, -(z.transpose() * x.p));
            return vstack(x.q * z, -(x.p * z.transpose()));
        }
    }
    throw std::logic_error("unreachable");
}

double check_equivariance(const DualPairInstance& inst, Side side, const GroupElem& g) {
    const auto moved = act(inst, side, g);
    const GroupElem gi = g.inverse();
    const LieAlgElem j = momentum(inst, side).value;
    const LieAlgElem jg = momentum(moved, side).value;
    if (j.is_complex()) {
        const ComplexMat expected = side == Side::left ? g.complex() * j.complex() * gi.complex()
                                                       : gi.complex() * j.complex() * g.complex();
        return frobenius_norm(jg.complex() - expected) / std::max(1.0, frobenius_norm(expected));
    }
    const RealMat expected = side == Side::left ? g.real() * j.real() * gi.real() : gi.real() * j.real() * g.real();
    return frobenius_norm(jg.real() - expected) / std::max(1.0, frobenius_norm(expected));
}

double check_level_invariance(const DualPairInstance& inst, Side side, const GroupElem& g_opposite) {
    const Side other = side == Side::left ? Side::right : Side::left;
    const auto moved = act(inst, other, g_opposite);
    const LieAlgElem j = momentum(inst, side).value;
    const LieAlgElem jg = momentum(moved, side).value;
    if (j.is_complex()) return frobenius_norm(jg.complex() - j.complex()) / std::max(1.0, frobenius_norm(j.complex()));
    return frobenius_norm(jg.real() - j.real()) / std::max(1.0, frobenius_norm(j.real()));
}

double check_pairing_identity(const DualPairInstance& inst, const LieAlgElem& xi, const LieAlgElem& zeta, Side side) {
    if (xi.algebra() != zeta.algebra()) throw PreconditionError("pairing identity: xi and zeta lie in different algebras");
    const double lhs = omega_real(infinitesimal(inst, side, xi), infinitesimal(inst, side, zeta));
    const LieAlgElem j = momentum(inst, side).value;
    double pairing;
    if (j.is_complex()) {
        pairing = trace_pairing(j.complex(), commutator(xi.complex(), zeta.complex()));
    } else {
        pairing = trace_pairing(j.real(), commutator(xi.real(), zeta.real()));
    }
    const double eps = side == Side::left ? 1.0 : -1.0;
    return std::abs(lhs - eps * pairing);
}

LieWeinsteinReport check_lie_weinstein(const DualPairInstance& inst, const Tolerances& tol) {
    inst.validate(tol, true);
    std::vector<RealMat> gens[2];
    const Side sides[2] = {Side::left, Side::right};
    for (int s = 0; s < 2; ++s) {
        for (const auto& b : algebra_basis(pair_algebra(inst.pair, sides[s]), inst.group_dim(sides[s]))) {
            gens[s].push_back(infinitesimal(inst, sides[s], b));
        }
    }
    auto orbit_dim = [&](const std::vector<RealMat>& g) -> Index {
        if (g.empty()) return 0;
        RealMat span(g.front().size(), static_cast<Index>(g.size()));
        for (std::size_t c = 0; c < g.size(); ++c) span.set_col(static_cast<Index>(c), vectorize(g[c]));
        return rank_tol(span, tol);
    };
    LieWeinsteinReport rep;
    rep.dim_left_orbit = orbit_dim(gens[0]);
    rep.dim_right_orbit = orbit_dim(gens[1]);
    rep.ambient_dim = 2 * inst.n * inst.m;
    double cross = 0.0;
    for (const auto& a : gens[0])
        for (const auto& b : gens[1]) cross = std::max(cross, std::abs(omega_real(a, b)));
    rep.cross_omega_residual = cross / std::max(1.0, std::pow(frobenius_norm(inst.realified()), 2));
    return rep;
}

std::pair<OrbitLabel, OrbitLabel> orbit_correspondence(const DualPairInstance& inst, const Tolerances& tol) {
    switch (inst.pair) {
        case PairId::unitary: {
            inst.validate(tol, false);
            const auto& e = inst.complex_point();
            return {sigmas_from_u_momentum(unitary::j_left(e).complex(), inst.n, tol),
                    sigmas_from_u_momentum(unitary::j_right(e).complex(), inst.m, tol)};
        }
        case PairId::symplectic: {
            const auto& e = inst.real_point();
            return {symplectic::left_invariants(e, tol), symplectic::right_invariants(e, tol)};
        }
        case PairId::general_linear: {
            inst.validate(tol, true);
            const auto& x = inst.cotangent_point();
            return {gl::jordan_structure(gl::j_left(x).real(), Side::left, inst.n, inst.m),
                    gl::jordan_structure(gl::j_right(x).real(), Side::right, inst.n, inst.m)};
        }
    }
    throw std::logic_error("unreachable");
}

bool labels_equal(const OrbitLabel& a, const OrbitLabel& b, double tol) {
    if (a.index() != b.index()) return false;
    if (const auto* va = std::get_if<std::vector<double>>(&a)) return vectors_close(*va, std::get<std::vector<double>>(b), tol);
    if (const auto* ia = std::get_if<symplectic::OrbitInvariants>(&a)) {
        const auto& ib = std::get<symplectic::OrbitInvariants>(b);
        return ia->n == ib.n && ia->m == ib.m && ia->p == ib.p && ia->q == ib.q && ia->r == ib.r &&
               vectors_close(ia->sigmas, ib.sigmas, tol);
    }
    const auto& ja = std::get<gl::JordanData>(a);
    const auto& jb = std::get<gl::JordanData>(b);
    if (ja.n != jb.n || ja.m != jb.m || ja.nilpotent != jb.nilpotent || ja.blocks.size() != jb.blocks.size()) return false;
    for (std::size_t i = 0; i < ja.blocks.size(); ++i) {
        if (ja.blocks[i].size != jb.blocks[i].size) return false;
        if (std::abs(ja.blocks[i].lambda - jb.blocks[i].lambda) > tol * std::max(1.0, std::abs(jb.blocks[i].lambda))) return false;
    }
    return true;
}

bool labels_correspond(PairId pair, const OrbitLabel& left, const OrbitLabel& right, double tol) {
    switch (pair) {
        case PairId::unitary: {
            const auto& l = std::get<std::vector<double>>(left);
            std::vector<double> r = std::get<std::vector<double>>(right);
            r.resize(l.size(), 0.0);
            return l.size() >= std::get<std::vector<double>>(right).size() && vectors_close(l, r, tol);
        }
        case PairId::symplectic:
        case PairId::general_linear: return labels_equal(left, right, tol);
    }
    return false;
}

}  // namespace dualpairs
