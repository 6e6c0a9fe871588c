#include "dualpairs/harness/generators.hpp"

#include <algorithm>

namespace dualpairs::harness {

namespace {

constexpr Index kMaxDim = 16;

double uniform_in(CounterRng& rng, double lo, double hi) { return lo + (hi - lo) * rng.uniform(); }

// Unimodular integer matrix with its exact inverse, as a product of
// elementary row operations and sign flips.
std::pair<RealMat, RealMat> unimodular(Index n, CounterRng& rng) {
    RealMat a = RealMat::identity(n);
    RealMat ainv = RealMat::identity(n);
    for (Index i = 0; i < n; ++i) {
        if (rng.uniform() < 0.5) {
            for (Index k = 0; k < n; ++k) {
                a(i, k) = -a(i, k);
                ainv(k, i) = -ainv(k, i);
            }
        }
    }
    if (n < 2) return {a, ainv};
    for (Index step = 0; step < 2 * n; ++step) {
        const Index i = rng.uniform_int(0, n - 1);
        Index j = rng.uniform_int(0, n - 2);
        if (j >= i) ++j;
        const double c = rng.uniform() < 0.5 ? -1.0 : 1.0;
        // a <- (I + c e_i e_j^T) a, ainv <- ainv (I - c e_i e_j^T)
        for (Index k = 0; k < n; ++k) a(i, k) += c * a(j, k);
        for (Index k = 0; k < n; ++k) ainv(k, j) -= c * ainv(k, i);
    }
    return {a, ainv};
}

ComplexMat sigma_block(const std::vector<double>& sigmas, Index n, Index m) {
    ComplexMat s(n, m);
    for (std::size_t i = 0; i < sigmas.size(); ++i) s(static_cast<Index>(i), static_cast<Index>(i)) = sigmas[i];
    return s;
}

}  // namespace

PartnerMode parse_partner(const std::string& s) {
    if (s == "none") return PartnerMode::none;
    if (s == "fiber-left") return PartnerMode::fiber_left;
    if (s == "fiber-right") return PartnerMode::fiber_right;
    if (s == "normal-form" || s == "normal-form-left") return PartnerMode::normal_form_left;
    if (s == "normal-form-right") return PartnerMode::normal_form_right;
    throw InputError("unknown partner mode '" + s + "'");
}

std::string partner_name(PartnerMode p) {
    switch (p) {
        case PartnerMode::none: return "none";
        case PartnerMode::fiber_left: return "fiber-left";
        case PartnerMode::fiber_right: return "fiber-right";
        case PartnerMode::normal_form_left: return "normal-form-left";
        case PartnerMode::normal_form_right: return "normal-form-right";
    }
    return "?";
}

Side witness_side(PartnerMode p) {
    return p == PartnerMode::fiber_right || p == PartnerMode::normal_form_right ? Side::right : Side::left;
}

Index max_m(PairId pair, Index n) { return pair == PairId::symplectic ? 2 * n : n; }

void require_valid_dims(PairId pair, Index n, Index m) {
    if (n < 1 || n > kMaxDim) throw InputError("n must lie in [1, 16], got " + std::to_string(n));
    if (m < 1 || m > max_m(pair, n)) {
        throw InputError("m must lie in [1, " + std::to_string(max_m(pair, n)) + "] for the " + pair_name(pair) +
                         " pair, got " + std::to_string(m));
    }
}

std::pair<Index, Index> random_dims(PairId pair, Index max_n, CounterRng& rng) {
    const Index n = rng.uniform_int(1, max_n);
    const Index m = rng.uniform_int(1, std::min(max_m(pair, n), max_n));
    return {n, m};
}

DualPairInstance random_instance(PairId pair, Index n, Index m, CounterRng& rng) {
    require_valid_dims(pair, n, m);
    for (;;) {
        DualPairInstance inst;
        switch (pair) {
            case PairId::unitary: inst = DualPairInstance::unitary(gaussian_complex_matrix(n, m, rng)); break;
            case PairId::symplectic: inst = DualPairInstance::symplectic(gaussian_matrix(2 * n, m, rng)); break;
            case PairId::general_linear:
                inst = DualPairInstance::general_linear({gaussian_matrix(n, m, rng), gaussian_matrix(n, m, rng)});
                break;
        }
        try {
            inst.validate({}, true);
            return inst;
        } catch (const PreconditionError&) {
        }
    }
}

gl::JordanData random_jordan_data(Index n, Index m, CounterRng& rng) {
    if (m < 1 || m > n) throw InputError("Jordan data needs 1 <= m <= n");
    gl::JordanData jd;
    jd.n = n;
    jd.m = m;
    const Index q = rng.uniform_int(0, std::min(n - m, m));
    jd.nilpotent.assign(static_cast<std::size_t>(q), 2);
    Index c_total = 0;
    for (Index unit = 0; unit < m - q; ++unit) {
        if (q > 0 && rng.uniform() < 0.5) {
            ++jd.nilpotent[static_cast<std::size_t>(rng.uniform_int(0, q - 1))];
        } else {
            ++c_total;
        }
    }
    static const double kReal[] = {-3.0, -2.0, -1.0, 1.0, 2.0, 3.0};
    while (c_total > 0) {
        if (c_total >= 2 && rng.uniform() < 0.3) {
            const Index s = rng.uniform_int(1, c_total / 2);
            const cplx lambda(static_cast<double>(rng.uniform_int(-2, 2)), static_cast<double>(rng.uniform_int(1, 2)));
            jd.blocks.push_back({lambda, 2 * s});
            c_total -= 2 * s;
        } else {
            const Index s = rng.uniform_int(1, c_total);
            jd.blocks.push_back({cplx(kReal[rng.uniform_int(0, 5)], 0.0), s});
            c_total -= s;
        }
    }
    jd = jd.canonical();
    jd.validate();
    return jd;
}

symplectic::OrbitInvariants random_orbit_invariants(Index n, Index m, CounterRng& rng) {
    const Index p = rng.uniform_int(std::max<Index>(0, m - n), m / 2);
    std::vector<double> sigmas;
    for (Index i = 0; i < p; ++i) sigmas.push_back(uniform_in(rng, 0.5, 2.5));
    std::sort(sigmas.rbegin(), sigmas.rend());
    return symplectic::OrbitInvariants::from_sigmas(n, m, std::move(sigmas));
}

std::pair<DualPairInstance, DualPairInstance> fiber_pair(PairId pair, Index n, Index m, PartnerMode mode, CounterRng& rng) {
    require_valid_dims(pair, n, m);
    const Side side = witness_side(mode);
    if (mode == PartnerMode::none) throw InputError("fiber_pair needs a partner mode");

    if (mode == PartnerMode::fiber_left || mode == PartnerMode::fiber_right) {
        DualPairInstance x = random_instance(pair, n, m, rng);
        const GroupElem g = random_group_element(pair_group(pair, side), x.group_dim(side), rng);
        DualPairInstance y = act(x, side, g);
        return {std::move(x), std::move(y)};
    }

    const bool left = side == Side::left;
    switch (pair) {
        case PairId::unitary: {
            std::vector<double> sigmas;
            for (Index i = 0; i < m; ++i) sigmas.push_back(uniform_in(rng, 0.5, 2.5));
            const ComplexMat s = sigma_block(sigmas, n, m);
            const ComplexMat w = random_group_element(Group::U, n, rng).complex();
            const ComplexMat v = random_group_element(Group::U, m, rng).complex();
            const ComplexMat other = left ? random_group_element(Group::U, n, rng).complex()
                                          : random_group_element(Group::U, m, rng).complex();
            ComplexMat e = w * s * v;
            ComplexMat e2 = left ? other * s * v : w * s * other;
            return {DualPairInstance::unitary(std::move(e)), DualPairInstance::unitary(std::move(e2))};
        }
        case PairId::symplectic: {
            const RealMat d = symplectic::build_d(random_orbit_invariants(n, m, rng));
            const RealMat s = random_group_element(Group::Sp, n, rng).real();
            const RealMat o = random_group_element(Group::O, m, rng).real();
            const RealMat other = left ? random_group_element(Group::Sp, n, rng).real()
                                       : random_group_element(Group::O, m, rng).real();
            RealMat e = s * d * o;
            RealMat e2 = left ? other * d * o : s * d * other;
            return {DualPairInstance::symplectic(std::move(e)), DualPairInstance::symplectic(std::move(e2))};
        }
        case PairId::general_linear: {
            gl::CotangentPoint x = gl::build_qp_from_jordan(random_jordan_data(n, m, rng));
            gl::CotangentPoint y;
            if (left) {
                const auto [a, ainv] = unimodular(n, rng);
                y = {a * x.q, ainv.transpose() * x.p};
            } else {
                const auto [b, binv] = unimodular(m, rng);
                y = {x.q * b, x.p * binv.transpose()};
            }
            return {DualPairInstance::general_linear(std::move(x)), DualPairInstance::general_linear(std::move(y))};
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace dualpairs::harness
