#include "dualpairs/harness/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <set>
#include <tuple>

#include "dualpairs/harness/generators.hpp"
#include "dualpairs/seesaw.hpp"

namespace dualpairs::harness {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class Emitter {
public:
    Emitter(const SuiteConfig& cfg, std::uint32_t suite_id, std::vector<VerificationRecord>& out)
        : cfg_(cfg), suite_id_(suite_id), out_(out) {}

    // Stream for trial `trial` of sub-stream `variant` (pair, side, mode...).
    CounterRng rng(std::uint32_t variant, std::uint32_t trial) {
        stream_ = (static_cast<std::uint64_t>(stream_suite(variant)) << 32) | trial;
        return CounterRng::for_trial(cfg_.seed, stream_suite(variant), trial);
    }
    void set_stream(std::uint32_t variant, std::uint32_t trial) {
        stream_ = (static_cast<std::uint64_t>(stream_suite(variant)) << 32) | trial;
    }

    void emit(const std::string& check, const std::string& pair, Index n, Index m, double residual, double threshold) {
        if (std::isnan(residual)) residual = kInf;
        const double thr = cfg_.tol.value_or(threshold);
        out_.push_back({check, pair, n, m, stream_, residual, residual <= thr});
    }
    // A trial that threw: recorded as a failure of `check`.
    void fail(const std::string& check, const std::string& pair, Index n, Index m) { emit(check, pair, n, m, kInf, 0.0); }

    const SuiteConfig& cfg() const { return cfg_; }

private:
    std::uint32_t stream_suite(std::uint32_t variant) const { return suite_id_ * 256u + variant; }

    const SuiteConfig& cfg_;
    std::uint32_t suite_id_;
    std::vector<VerificationRecord>& out_;
    std::uint64_t stream_ = 0;
};

Index trials_for(const SuiteConfig& cfg, Index default_trials) { return cfg.trials > 0 ? cfg.trials : default_trials; }

std::uint32_t pair_index(PairId p) { return static_cast<std::uint32_t>(p); }

constexpr Side kSides[2] = {Side::left, Side::right};

double rel(double err, double scale) { return err / std::max(1.0, scale); }

double max_rel_diff(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return kInf;
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, rel(std::abs(a[i] - b[i]), std::abs(b[i])));
    return worst;
}

double momentum_pairing(const LieAlgElem& j, const LieAlgElem& xi) {
    return j.is_complex() ? trace_pairing(j.complex(), xi.complex()) : trace_pairing(j.real(), xi.real());
}

// ---- suites ----------------------------------------------------------------

void suite_momentum_oracle(Emitter& e, Index trials) {
    for (const PairId pair : e.cfg().pairs) {
        for (Index t = 0; t < trials; ++t) {
            CounterRng rng = e.rng(pair_index(pair), static_cast<std::uint32_t>(t));
            const auto [n, m] = random_dims(pair, e.cfg().max_dim, rng);
            const auto x = random_instance(pair, n, m, rng);
            const RealMat xr = x.realified();
            for (const Side side : kSides) {
                const std::string check = "momentum_oracle_" + side_name(side);
                try {
                    const LieAlgElem j = momentum(x, side).value;
                    double worst = 0.0;
                    for (const auto& xi : algebra_basis(pair_algebra(pair, side), x.group_dim(side))) {
                        const double oracle = 0.5 * omega_real(infinitesimal(x, side, xi), xr);
                        worst = std::max(worst, std::abs(momentum_pairing(j, xi) - oracle));
                    }
                    e.emit(check, pair_name(pair), n, m, worst, 1e-10);
                } catch (const std::exception&) {
                    e.fail(check, pair_name(pair), n, m);
                }
            }
        }
    }
}

template <class Fn>
void per_pair_side(Emitter& e, Index trials, const std::string& prefix, Fn fn) {
    for (const PairId pair : e.cfg().pairs) {
        for (const Side side : kSides) {
            const std::uint32_t variant = pair_index(pair) * 2 + (side == Side::left ? 0u : 1u);
            for (Index t = 0; t < trials; ++t) {
                CounterRng rng = e.rng(variant, static_cast<std::uint32_t>(t));
                const auto [n, m] = random_dims(pair, e.cfg().max_dim, rng);
                const std::string check = prefix + "_" + side_name(side);
                try {
                    fn(pair, side, n, m, rng, check);
                } catch (const std::exception&) {
                    e.fail(check, pair_name(pair), n, m);
                }
            }
        }
    }
}

void suite_equivariance(Emitter& e, Index trials) {
    per_pair_side(e, trials, "equivariance", [&](PairId pair, Side side, Index n, Index m, CounterRng& rng, const std::string& check) {
        const auto x = random_instance(pair, n, m, rng);
        const GroupElem g = random_group_element(pair_group(pair, side), x.group_dim(side), rng);
        e.emit(check, pair_name(pair), n, m, check_equivariance(x, side, g), 1e-9);
    });
}

void suite_level_invariance(Emitter& e, Index trials) {
    per_pair_side(e, trials, "level_invariance", [&](PairId pair, Side side, Index n, Index m, CounterRng& rng, const std::string& check) {
        const auto x = random_instance(pair, n, m, rng);
        const Side other = side == Side::left ? Side::right : Side::left;
        const GroupElem g = random_group_element(pair_group(pair, other), x.group_dim(other), rng);
        e.emit(check, pair_name(pair), n, m, check_level_invariance(x, side, g), 1e-9);
    });
}

void suite_pairing_identity(Emitter& e, Index trials) {
    per_pair_side(e, trials, "pairing_identity", [&](PairId pair, Side side, Index n, Index m, CounterRng& rng, const std::string& check) {
        const auto x = random_instance(pair, n, m, rng);
        auto basis = algebra_basis(pair_algebra(pair, side), x.group_dim(side));
        if (basis.empty()) basis.push_back(LieAlgElem::make(Algebra::o, RealMat(x.group_dim(side), x.group_dim(side))));
        const auto last = static_cast<std::int64_t>(basis.size()) - 1;
        const auto& xi = basis[static_cast<std::size_t>(rng.uniform_int(0, last))];
        const auto& zeta = basis[static_cast<std::size_t>(rng.uniform_int(0, last))];
        e.emit(check, pair_name(pair), n, m, check_pairing_identity(x, xi, zeta, side), 1e-9);
    });
}

void suite_lie_weinstein(Emitter& e, Index trials) {
    for (const PairId pair : e.cfg().pairs) {
        for (Index t = 0; t < trials; ++t) {
            CounterRng rng = e.rng(pair_index(pair), static_cast<std::uint32_t>(t));
            const auto [n, m] = random_dims(pair, e.cfg().max_dim, rng);
            try {
                const auto rep = check_lie_weinstein(random_instance(pair, n, m, rng));
                const Index gap = rep.dim_left_orbit + rep.dim_right_orbit - rep.ambient_dim;
                e.emit("orbit_dimension", pair_name(pair), n, m, static_cast<double>(std::abs(gap)), 0.0);
                e.emit("cross_omega", pair_name(pair), n, m, rep.cross_omega_residual, 1e-10);
            } catch (const std::exception&) {
                e.fail("orbit_dimension", pair_name(pair), n, m);
            }
        }
    }
}

void suite_orbit_labels(Emitter& e, Index trials) {
    for (const PairId pair : e.cfg().pairs) {
        for (Index t = 0; t < trials; ++t) {
            CounterRng rng = e.rng(pair_index(pair), static_cast<std::uint32_t>(t));
            const auto [n, m] = random_dims(pair, e.cfg().max_dim, rng);
            try {
                const auto x = random_instance(pair, n, m, rng);
                const GroupElem gl = random_group_element(pair_group(pair, Side::left), n, rng);
                const GroupElem gr = random_group_element(pair_group(pair, Side::right), m, rng);
                const auto y = act(act(x, Side::left, gl), Side::right, gr);
                const auto [lx, rx] = orbit_correspondence(x);
                const auto [ly, ry] = orbit_correspondence(y);
                const int mismatches = !labels_equal(lx, ly) + !labels_equal(rx, ry) + !labels_correspond(pair, lx, rx) +
                                       !labels_correspond(pair, ly, ry);
                e.emit("orbit_labels", pair_name(pair), n, m, mismatches, 0.0);
            } catch (const std::exception&) {
                e.fail("orbit_labels", pair_name(pair), n, m);
            }
        }
    }
}

void suite_witness(Emitter& e, Index trials) {
    constexpr PartnerMode kModes[] = {PartnerMode::fiber_left, PartnerMode::fiber_right, PartnerMode::normal_form_left,
                                      PartnerMode::normal_form_right};
    for (const PairId pair : e.cfg().pairs) {
        for (std::uint32_t mi = 0; mi < 4; ++mi) {
            const PartnerMode mode = kModes[mi];
            const Side side = witness_side(mode);
            std::string tag = partner_name(mode);
            std::replace(tag.begin(), tag.end(), '-', '_');
            for (Index t = 0; t < trials; ++t) {
                CounterRng rng = e.rng(pair_index(pair) * 4 + mi, static_cast<std::uint32_t>(t));
                const auto [n, m] = random_dims(pair, e.cfg().max_dim, rng);
                try {
                    const auto [x, y] = fiber_pair(pair, n, m, mode, rng);
                    const WitnessReport rep = witness(x, y, side);
                    const GroupElem& g = rep.witness;
                    const double scale = std::pow(g.is_complex() ? frobenius_norm(g.complex()) : frobenius_norm(g.real()), 2);
                    const double group_res = g.is_complex() ? group_residual(g.group(), g.complex()) : group_residual(g.group(), g.real());
                    e.emit("witness_map_" + tag, pair_name(pair), n, m, rep.residual, 1e-7);
                    e.emit("witness_group_" + tag, pair_name(pair), n, m, rel(group_res, scale), 1e-9);
                    if (pair == PairId::general_linear && side == Side::left) {
                        const double cond = rep.condition.value_or(kInf);
                        e.emit("gl_complete_pair_nonsingular", pair_name(pair), n, m, std::isfinite(cond) && cond < 1e12 ? 0.0 : 1.0, 0.0);
                    }
                } catch (const std::exception&) {
                    e.fail("witness_map_" + tag, pair_name(pair), n, m);
                }
            }
        }
    }
}

bool has_pair(const SuiteConfig& cfg, PairId p) { return std::find(cfg.pairs.begin(), cfg.pairs.end(), p) != cfg.pairs.end(); }

void suite_xu(Emitter& e, Index trials) {
    if (!has_pair(e.cfg(), PairId::symplectic)) return;
    const std::string pair = pair_name(PairId::symplectic);
    const Index max_n = std::min<Index>(4, e.cfg().max_dim);
    for (std::uint32_t variant = 0; variant < 2; ++variant) {
        for (Index t = 0; t < trials; ++t) {
            CounterRng rng = e.rng(variant, static_cast<std::uint32_t>(t));
            const Index n = rng.uniform_int(1, max_n);
            const Index m = rng.uniform_int(1, 2 * n);
            try {
                std::optional<symplectic::OrbitInvariants> inv0;
                RealMat em;
                if (variant == 0) {
                    inv0 = random_orbit_invariants(n, m, rng);
                    em = random_group_element(Group::Sp, n, rng).real() * symplectic::build_d(*inv0) *
                         random_group_element(Group::O, m, rng).real();
                } else {
                    em = random_instance(PairId::symplectic, n, m, rng).real_point();
                }
                const auto xd = symplectic::xu_decompose(em);
                const RealMat recon = xd.s.real() * xd.d * xd.o.real();
                e.emit("xu_reconstruction", pair, n, m, rel(frobenius_norm(recon - em), frobenius_norm(em)), 1e-8);
                e.emit("xu_template", pair, n, m, max_abs(xd.d - symplectic::build_d(xd.inv)), 0.0);
                e.emit("xu_symplectic", pair, n, m, group_residual(Group::Sp, xd.s.real()), 1e-9);
                e.emit("xu_orthogonal", pair, n, m, group_residual(Group::O, xd.o.real()), 1e-11);
                if (inv0) {
                    const double r = xd.inv.p == inv0->p ? max_rel_diff(xd.inv.sigmas, inv0->sigmas) : kInf;
                    e.emit("xu_invariants", pair, n, m, r, 1e-8);
                }
            } catch (const std::exception&) {
                e.fail("xu_reconstruction", pair, n, m);
            }
        }
    }
}

void suite_symplectic_orbits(Emitter& e, Index trials) {
    if (!has_pair(e.cfg(), PairId::symplectic)) return;
    const std::string pair = pair_name(PairId::symplectic);
    for (Index t = 0; t < trials; ++t) {
        CounterRng rng = e.rng(0, static_cast<std::uint32_t>(t));
        const auto [n, m] = random_dims(PairId::symplectic, e.cfg().max_dim, rng);
        try {
            const RealMat em = random_instance(PairId::symplectic, n, m, rng).real_point();
            const auto a = char_poly(symplectic::j_left(em).real());
            const auto b = char_poly(symplectic::normal_form_left(symplectic::left_invariants(em)).real());
            double worst = a.size() == b.size() ? 0.0 : kInf;
            for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) worst = std::max(worst, rel(std::abs(a[i] - b[i]), std::abs(b[i])));
            e.emit("sp_charpoly", pair, n, m, worst, 1e-6);
        } catch (const std::exception&) {
            e.fail("sp_charpoly", pair, n, m);
        }
    }
    for (Index t = 0; t < trials; ++t) {
        CounterRng rng = e.rng(1, static_cast<std::uint32_t>(t));
        const Index n = rng.uniform_int(1, std::max<Index>(1, std::min<Index>(3, e.cfg().max_dim)));
        try {
            const auto [x, y] = fiber_pair(PairId::symplectic, n, 2 * n, PartnerMode::fiber_left, rng);
            e.emit("sp_witness_square", pair, n, 2 * n, witness(x, y, Side::left).residual, 1e-10);
        } catch (const std::exception&) {
            e.fail("sp_witness_square", pair, n, 2 * n);
        }
    }
    for (Index t = 0; t < trials; ++t) {
        CounterRng rng = e.rng(2, static_cast<std::uint32_t>(t));
        const Index n = rng.uniform_int(1, std::min<Index>(4, e.cfg().max_dim));
        const Index k = rng.uniform_int(1, 2 * n);
        try {
            const RealMat src = random_instance(PairId::symplectic, n, k, rng).real_point();
            const RealMat dst = random_group_element(Group::Sp, n, rng).real() * src;
            const RealMat s = symplectic::witt_extend(src, dst).real();
            e.emit("witt_map", pair, n, k, rel(frobenius_norm(s * src - dst), frobenius_norm(dst)), 1e-8);
            e.emit("witt_symplectic", pair, n, k, rel(group_residual(Group::Sp, s), std::pow(frobenius_norm(s), 2)), 1e-8);
        } catch (const std::exception&) {
            e.fail("witt_map", pair, n, k);
        }
    }
}

// Partitions of `total` into parts of at most `max_part`, parts non-increasing.
void partitions(Index total, Index max_part, std::vector<Index>& cur, std::vector<std::vector<Index>>& out) {
    if (total == 0) {
        out.push_back(cur);
        return;
    }
    for (Index p = std::min(total, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(total - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<Index>> partitions(Index total) {
    std::vector<std::vector<Index>> out;
    std::vector<Index> cur;
    partitions(total, total, cur, out);
    return out;
}

std::vector<gl::JordanData> all_jordan_data(Index n, Index m) {
    std::vector<gl::JordanData> out;
    for (Index q = 0; q <= std::min(n - m, m); ++q) {
        for (Index c_total = 0; c_total + q <= m; ++c_total) {
            // Nilpotent sizes: d_j - 1 >= 1 summing to m - c_total over exactly q parts.
            std::vector<std::vector<Index>> nil_options;
            for (const auto& part : partitions(m - c_total)) {
                if (static_cast<Index>(part.size()) != q) continue;
                std::vector<Index> d;
                for (const Index x : part) d.push_back(x + 1);
                nil_options.push_back(d);
            }
            if (q == 0 && m - c_total != 0) continue;
            if (q == 0) nil_options = {{}};
            for (const auto& nil : nil_options) {
                for (const auto& blocks : partitions(c_total)) {
                    bool has_even = false;
                    for (const Index s : blocks) has_even = has_even || s % 2 == 0;
                    for (int labelling = 0; labelling < 3; ++labelling) {
                        if (labelling == 2 && !has_even) continue;
                        gl::JordanData jd;
                        jd.n = n;
                        jd.m = m;
                        jd.nilpotent = nil;
                        for (std::size_t i = 0; i < blocks.size(); ++i) {
                            cplx lambda;
                            if (labelling == 0) {
                                lambda = 2.0;
                            } else if (labelling == 1) {
                                const double mag = static_cast<double>(i / 2 + 1);
                                lambda = i % 2 == 0 ? mag : -mag;
                            } else {
                                lambda = blocks[i] % 2 == 0 ? cplx(1.0, 2.0) : cplx(3.0, 0.0);
                            }
                            jd.blocks.push_back({lambda, blocks[i]});
                        }
                        jd = jd.canonical();
                        if (std::find(out.begin(), out.end(), jd) == out.end()) out.push_back(jd);
                    }
                }
            }
        }
    }
    return out;
}

void suite_gl_jordan_exact(Emitter& e, Index) {
    if (!has_pair(e.cfg(), PairId::general_linear)) return;
    const std::string pair = pair_name(PairId::general_linear);
    std::uint32_t index = 0;
    for (Index n = 1; n <= 5; ++n) {
        for (Index m = 1; m <= n; ++m) {
            for (const auto& jd : all_jordan_data(n, m)) {
                e.set_stream(0, index++);
                try {
                    const auto [q, p] = gl::build_qp_from_jordan_exact(jd);
                    const auto [zeta, xi] = gl::jordan_correspond_exact(jd);
                    const bool exact = q * p.transpose() == zeta && p.transpose() * q == xi;
                    e.emit("gl_jordan_exact", pair, n, m, exact ? 0.0 : 1.0, 0.0);
                    const bool ranks = exact_rank(q) == m && exact_rank(p) == m;
                    e.emit("gl_jordan_full_rank", pair, n, m, ranks ? 0.0 : 1.0, 0.0);
                    const auto [zf, xf] = gl::jordan_correspond(jd);
                    const bool round = gl::jordan_structure(zf, Side::left, n, m) == jd && gl::jordan_structure(xf, Side::right, n, m) == jd;
                    e.emit("gl_jordan_roundtrip", pair, n, m, round ? 0.0 : 1.0, 0.0);
                    const bool accepted = gl::in_image_left(zf, m) && gl::in_image_right(xf, n);
                    e.emit("gl_in_image_canonical", pair, n, m, accepted ? 0.0 : 1.0, 0.0);
                } catch (const std::exception&) {
                    e.fail("gl_jordan_exact", pair, n, m);
                }
            }
        }
    }
}

void suite_gl_image(Emitter& e, Index trials) {
    if (!has_pair(e.cfg(), PairId::general_linear)) return;
    const std::string pair = pair_name(PairId::general_linear);
    for (Index t = 0; t < trials; ++t) {
        CounterRng rng = e.rng(0, static_cast<std::uint32_t>(t));
        const auto [n, m] = random_dims(PairId::general_linear, e.cfg().max_dim, rng);
        try {
            const auto x = random_instance(PairId::general_linear, n, m, rng).cotangent_point();
            const Index rl = rank_tol(gl::j_left(x).real());
            const Index rr = rank_tol(gl::j_right(x).real());
            e.emit("gl_image_rank", pair, n, m, rl == m && rr >= 2 * m - n ? 0.0 : 1.0, 0.0);
            // Rank-violating counterexamples: zero matrices, and a left candidate of rank m - 1.
            bool rejected = !gl::in_image_left(RealMat(n, n), m);
            if (2 * m > n) rejected = rejected && !gl::in_image_right(RealMat(m, m), n);
            if (m >= 2) {
                const RealMat low = gaussian_matrix(n, m - 1, rng) * gaussian_matrix(m - 1, n, rng);
                rejected = rejected && !gl::in_image_left(low, m);
            }
            e.emit("gl_in_image_reject", pair, n, m, rejected ? 0.0 : 1.0, 0.0);
        } catch (const std::exception&) {
            e.fail("gl_image_rank", pair, n, m);
        }
    }
}

void suite_unitary_jacobian(Emitter& e, Index) {
    if (!has_pair(e.cfg(), PairId::unitary)) return;
    const std::string pair = pair_name(PairId::unitary);
    std::uint32_t index = 0;
    for (Index n = 1; n <= std::min<Index>(6, e.cfg().max_dim); ++n) {
        for (Index m = 1; m <= n; ++m) {
            for (Index k = 0; k <= m; ++k) {
                CounterRng rng = e.rng(0, index++);
                try {
                    ComplexMat s(n, m);
                    for (Index i = 0; i < m - k; ++i) s(i, i) = 0.5 + 2.0 * rng.uniform();
                    const ComplexMat em = random_group_element(Group::U, n, rng).complex() * s *
                                          random_group_element(Group::U, m, rng).complex();
                    const Index rank = unitary::jacobian_rank_right(em);
                    e.emit("jacobian_rank_formula", pair, n, m, static_cast<double>(std::abs(rank - m * (m - k))), 0.0);
                } catch (const std::exception&) {
                    e.fail("jacobian_rank_formula", pair, n, m);
                }
            }
        }
    }
}

void suite_seesaw(Emitter& e, Index trials) {
    const Index max_n = std::min<Index>(4, e.cfg().max_dim);
    for (Index t = 0; t < trials; ++t) {
        if (has_pair(e.cfg(), PairId::unitary)) {
            CounterRng rng = e.rng(0, static_cast<std::uint32_t>(t));
            const Index n = rng.uniform_int(1, max_n);
            const Index m = rng.uniform_int(1, max_n);
            try {
                const ComplexMat em = gaussian_complex_matrix(n, m, rng);
                const auto r = seesaw::check_diagram_sp_u(em);
                e.emit("seesaw_sp_u_left", "unitary", n, m, r.left, 1e-10);
                e.emit("seesaw_sp_u_right", "unitary", n, m, r.right, 1e-10);
                const ComplexMat f = gaussian_complex_matrix(n, m, rng);
                e.emit("complex_to_real_omega", "unitary", n, m,
                       std::abs(omega_complex(em, f) - omega_real(seesaw::complex_to_real(em), seesaw::complex_to_real(f))), 1e-12);
                const auto a = random_algebra_element(Algebra::u, n, rng);
                const auto b = random_algebra_element(Algebra::u, n, rng);
                const RealMat la = seesaw::embed_u_to_sp(a).real();
                const RealMat lb = seesaw::embed_u_to_sp(b).real();
                const auto lab = seesaw::embed_u_to_sp(LieAlgElem::make(Algebra::u, commutator(a.complex(), b.complex())));
                e.emit("embed_u_morphism", "unitary", n, m, frobenius_norm(lab.real() - commutator(la, lb)), 1e-12);
                e.emit("embed_u_sp_identity", "unitary", n, m, algebra_residual(Algebra::sp, la), 1e-12);
                e.emit("restriction_adjoint_u", "unitary", n, m,
                       seesaw::restriction_adjoint_residual(random_algebra_element(Algebra::u, m, rng)), 1e-13);
            } catch (const std::exception&) {
                e.fail("seesaw_sp_u_left", "unitary", n, m);
            }
        }
        if (has_pair(e.cfg(), PairId::general_linear)) {
            CounterRng rng = e.rng(1, static_cast<std::uint32_t>(t));
            const Index n = rng.uniform_int(1, max_n);
            const Index m = rng.uniform_int(1, n);
            const std::string pair = pair_name(PairId::general_linear);
            try {
                const gl::CotangentPoint x{gaussian_matrix(n, m, rng), gaussian_matrix(n, m, rng)};
                const auto r = seesaw::check_diagram_sp_gl(x);
                e.emit("seesaw_sp_gl_left", pair, n, m, r.left, 1e-10);
                e.emit("seesaw_sp_gl_right", pair, n, m, r.right, 1e-10);
                const auto a = random_algebra_element(Algebra::gl, n, rng);
                const auto b = random_algebra_element(Algebra::gl, n, rng);
                const RealMat la = seesaw::embed_gl_to_sp(a).real();
                const RealMat lb = seesaw::embed_gl_to_sp(b).real();
                const auto lab = seesaw::embed_gl_to_sp(LieAlgElem::make(Algebra::gl, commutator(a.real(), b.real())));
                e.emit("embed_gl_morphism", pair, n, m, frobenius_norm(lab.real() - commutator(la, lb)), 1e-12);
                e.emit("embed_gl_sp_identity", pair, n, m, algebra_residual(Algebra::sp, la), 1e-12);
                e.emit("restriction_adjoint_gl", pair, n, m,
                       seesaw::restriction_adjoint_residual(random_algebra_element(Algebra::gl, m, rng)), 1e-13);
            } catch (const std::exception&) {
                e.fail("seesaw_sp_gl_left", pair, n, m);
            }
        }
    }
}

void suite_linalg(Emitter& e, Index trials) {
    for (Index t = 0; t < trials; ++t) {
        CounterRng rng = e.rng(0, static_cast<std::uint32_t>(t));
        const Index n = rng.uniform_int(1, 5);
        const Index m = rng.uniform_int(1, 5);
        try {
            const RealMat x = gaussian_matrix(2 * n, m, rng);
            const RealMat y = gaussian_matrix(2 * n, m, rng);
            const RealMat z = gaussian_matrix(2 * n, m, rng);
            const double a = rng.gaussian();
            const double anti = std::abs(omega_real(x, y) + omega_real(y, x));
            const double lin = std::abs(omega_real(x * a + z, y) - a * omega_real(x, y) - omega_real(z, y));
            const double scale = frobenius_norm(x) * frobenius_norm(y) + frobenius_norm(z) * frobenius_norm(y);
            e.emit("omega_bilinear_antisymmetric", "-", 2 * n, m, rel(std::max(anti, lin), scale), 1e-13);

            const Index k = rng.uniform_int(1, 10);
            const RealMat g = gaussian_matrix(k, k, rng);
            const RealMat xi = g - g.transpose();
            const auto form = skew_canonical(xi);
            const RealMat back = form.orthogonal.transpose() * skew_block_form(form.pairs, k) * form.orthogonal;
            e.emit("skew_canonical_roundtrip", "-", k, k, frobenius_norm(back - xi) / std::max(frobenius_norm(xi), 1e-300), 1e-9);

            const ComplexMat c = gaussian_complex_matrix(n, n, rng);
            e.emit("trace_pairing_positive", "-", n, n, trace_pairing(c, c.adjoint()) > 0.0 ? 0.0 : 1.0, 0.0);

            const Index d = rng.uniform_int(1, 8);
            double worst = 0.0;
            for (const Group grp : {Group::U, Group::O, Group::Sp, Group::GL}) {
                const GroupElem ge = random_group_element(grp, d, rng);
                worst = std::max(worst, ge.is_complex() ? group_residual(grp, ge.complex()) : group_residual(grp, ge.real()));
            }
            e.emit("random_group_identity", "-", d, d, worst, 1e-10);
        } catch (const std::exception&) {
            e.fail("omega_bilinear_antisymmetric", "-", n, m);
        }
    }
}

using SuiteFn = void (*)(Emitter&, Index);

struct Registered {
    SuiteInfo info;
    SuiteFn fn;
};

const std::vector<Registered>& registry() {
    static const std::vector<Registered> suites{
        {{1, "momentum_oracle", 50, "closed-form momentum maps against the quadratic-form oracle"}, suite_momentum_oracle},
        {{2, "equivariance", 200, "momentum maps intertwine the actions with conjugation"}, suite_equivariance},
        {{3, "level_invariance", 200, "each momentum map is invariant under the opposite action"}, suite_level_invariance},
        {{4, "pairing_identity", 50, "symplectic pairing of generators against the momentum pairing"}, suite_pairing_identity},
        {{5, "lie_weinstein", 50, "orbit dimensions and cross symplectic orthogonality"}, suite_lie_weinstein},
        {{6, "orbit_labels", 50, "orbit labels are invariant and correspond across sides"}, suite_orbit_labels},
        {{7, "witness", 100, "witness constructions on same-fiber inputs"}, suite_witness},
        {{8, "xu_decomposition", 100, "E = S D O reconstruction, template and invariants"}, suite_xu},
        {{9, "symplectic_orbits", 50, "characteristic polynomials, square witnesses, Witt extension"}, suite_symplectic_orbits},
        {{10, "gl_jordan_exact", 0, "exhaustive exact Jordan correspondence for n <= 5"}, suite_gl_jordan_exact},
        {{11, "gl_image", 200, "image rank conditions and membership tests"}, suite_gl_image},
        {{12, "unitary_jacobian", 0, "rank of the tangent map of j_right at prescribed corank"}, suite_unitary_jacobian},
        {{13, "seesaw", 100, "embeddings, restrictions and both commuting diagrams"}, suite_seesaw},
        {{14, "linalg", 50, "symplectic form, skew canonical form, trace pairing, random group elements"}, suite_linalg},
    };
    return suites;
}

std::tuple<const std::string&, const std::string&, Index, Index, std::uint64_t> key(const VerificationRecord& r) {
    return {r.check, r.pair, r.n, r.m, r.seed};
}

}  // namespace

void SuiteConfig::validate() const {
    if (pairs.empty()) throw InputError("suite config: no pairs selected");
    if (max_dim < 1 || max_dim > 16) throw InputError("suite config: max_dim must lie in [1, 16]");
    if (trials < 0) throw InputError("suite config: trials must be >= 1 (or 0 for the suite defaults)");
    if (tol && !(*tol >= 0.0)) throw InputError("suite config: tol must be >= 0");
    for (const auto& s : suites) {
        const auto& reg = registry();
        if (std::none_of(reg.begin(), reg.end(), [&](const Registered& r) { return r.info.name == s; })) {
            throw InputError("suite config: unknown suite '" + s + "'");
        }
    }
}

SuiteConfig suite_config_from_json(const json_io::Json& j) {
    if (!j.is_object()) throw InputError("suite config must be a JSON object");
    SuiteConfig c;
    try {
        if (j.contains("pairs")) {
            c.pairs.clear();
            for (const auto& p : j.at("pairs")) c.pairs.push_back(parse_pair(p.get<std::string>()));
        }
        if (j.contains("suites")) c.suites = j.at("suites").get<std::vector<std::string>>();
        if (j.contains("max_dim")) c.max_dim = j.at("max_dim").get<Index>();
        if (j.contains("trials")) c.trials = j.at("trials").get<Index>();
        if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("tol") && !j.at("tol").is_null()) c.tol = j.at("tol").get<double>();
        if (j.contains("out")) c.out = j.at("out").get<std::string>();
    } catch (const json_io::Json::exception& e) {
        throw InputError(std::string("suite config: ") + e.what());
    }
    c.validate();
    return c;
}

json_io::Json to_json(const SuiteConfig& c) {
    json_io::Json pairs = json_io::Json::array();
    for (const auto p : c.pairs) pairs.push_back(pair_name(p));
    return {{"pairs", std::move(pairs)},
            {"suites", c.suites},
            {"max_dim", c.max_dim},
            {"trials", c.trials},
            {"seed", c.seed},
            {"tol", c.tol ? json_io::Json(*c.tol) : json_io::Json(nullptr)},
            {"out", c.out}};
}

void RunReport::finalize() {
    std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) { return key(a) < key(b); });
    passed = static_cast<Index>(std::count_if(records.begin(), records.end(), [](const auto& r) { return r.pass; }));
    failed = static_cast<Index>(records.size()) - passed;
}

const std::vector<SuiteInfo>& registered_suites() {
    static const std::vector<SuiteInfo> infos = [] {
        std::vector<SuiteInfo> v;
        for (const auto& r : registry()) v.push_back(r.info);
        return v;
    }();
    return infos;
}

RunReport run_suites(const SuiteConfig& config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    report.master_seed = config.seed;
    for (const auto& r : registry()) {
        if (!config.suites.empty() && std::find(config.suites.begin(), config.suites.end(), r.info.name) == config.suites.end()) {
            continue;
        }
        Emitter e(config, r.info.id, report.records);
        r.fn(e, trials_for(config, r.info.default_trials));
    }
    report.finalize();
    report.wall_clock_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

json_io::Json to_json(const VerificationRecord& r) {
    json_io::Json residual = std::isfinite(r.residual) ? json_io::Json(r.residual) : json_io::Json(nullptr);
    return {{"check", r.check}, {"pair", r.pair}, {"dims", {r.n, r.m}}, {"seed", r.seed}, {"residual", residual}, {"pass", r.pass}};
}

VerificationRecord record_from_json(const json_io::Json& j) {
    try {
        VerificationRecord r;
        r.check = j.at("check").get<std::string>();
        r.pair = j.at("pair").get<std::string>();
        const auto& dims = j.at("dims");
        if (!dims.is_array() || dims.size() != 2) throw InputError("record: 'dims' must be [n, m]");
        r.n = dims[0].get<Index>();
        r.m = dims[1].get<Index>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.residual = j.at("residual").is_null() ? kInf : j.at("residual").get<double>();
        r.pass = j.at("pass").get<bool>();
        return r;
    } catch (const json_io::Json::exception& e) {
        throw InputError(std::string("record: ") + e.what());
    }
}

json_io::Json to_json(const RunReport& r) {
    json_io::Json records = json_io::Json::array();
    for (const auto& rec : r.records) records.push_back(to_json(rec));
    return {{"master_seed", r.master_seed},
            {"records", std::move(records)},
            {"summary", {{"total", r.records.size()}, {"passed", r.passed}, {"failed", r.failed}}},
            {"wall_clock_s", r.wall_clock_s}};
}

RunReport report_from_json(const json_io::Json& j) {
    RunReport r;
    try {
        r.master_seed = j.at("master_seed").get<std::uint64_t>();
        for (const auto& rec : j.at("records")) r.records.push_back(record_from_json(rec));
        r.passed = j.at("summary").at("passed").get<Index>();
        r.failed = j.at("summary").at("failed").get<Index>();
        r.wall_clock_s = j.at("wall_clock_s").get<double>();
        const Index total = j.at("summary").at("total").get<Index>();
        const auto passed = std::count_if(r.records.begin(), r.records.end(), [](const auto& x) { return x.pass; });
        if (total != static_cast<Index>(r.records.size()) || r.passed != passed || r.failed != total - passed) {
            throw InputError("report: summary counts disagree with the records");
        }
    } catch (const json_io::Json::exception& e) {
        throw InputError(std::string("report: ") + e.what());
    }
    return r;
}

bool same_records(const RunReport& a, const RunReport& b) { return a.master_seed == b.master_seed && a.records == b.records; }

}  // namespace dualpairs::harness
