#include "dualpairs/harness/commands.hpp"

#include <ostream>

namespace dualpairs::harness {

namespace {

using json_io::Json;

constexpr double kWitnessResidualBound = 1e-7;

// Runs `body`, mapping exceptions onto exit statuses.
template <class Fn>
int guarded(std::ostream& err, Fn body) {
    try {
        return body();
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const DimensionError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const PreconditionError& e) {
        err << "check failed: " << e.what() << '\n';
        return kExitCheckFailed;
    }
}

Json group_json(const GroupElem& g) { return g.is_complex() ? json_io::to_json(g.complex()) : json_io::to_json(g.real()); }

Json algebra_json(const LieAlgElem& a) { return a.is_complex() ? json_io::to_json(a.complex()) : json_io::to_json(a.real()); }

DualPairInstance load(PairId pair, const std::string& file) { return instance_from_json(pair, json_io::read_file(file)); }

}  // namespace

Json instance_to_json(const DualPairInstance& inst) {
    switch (inst.pair) {
        case PairId::unitary: return json_io::to_json(inst.complex_point());
        case PairId::symplectic: return json_io::to_json(inst.real_point());
        case PairId::general_linear: return json_io::to_json(inst.cotangent_point());
    }
    return {};
}

DualPairInstance instance_from_json(PairId pair, const Json& j) {
    try {
        switch (pair) {
            case PairId::unitary: return DualPairInstance::unitary(json_io::complex_matrix(j));
            case PairId::symplectic: return DualPairInstance::symplectic(json_io::real_matrix(j));
            case PairId::general_linear: return DualPairInstance::general_linear(json_io::cotangent_point(j));
        }
    } catch (const DimensionError& e) {
        throw InputError(e.what());
    }
    throw std::logic_error("unreachable");
}

std::filesystem::path partner_path(const std::filesystem::path& out) {
    std::filesystem::path p = out;
    p.replace_filename(out.stem().string() + ".partner" + out.extension().string());
    return p;
}

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        require_valid_dims(opt.pair, opt.n, opt.m);
        CounterRng rng(opt.seed);
        if (opt.partner == PartnerMode::none) {
            const Json inst = instance_to_json(random_instance(opt.pair, opt.n, opt.m, rng));
            if (opt.out.empty()) {
                out << json_io::dump(inst) << '\n';
            } else {
                json_io::write_file(opt.out, inst);
            }
            return kExitOk;
        }
        const auto [a, b] = fiber_pair(opt.pair, opt.n, opt.m, opt.partner, rng);
        if (opt.out.empty()) {
            out << json_io::dump({{"instance", instance_to_json(a)}, {"partner", instance_to_json(b)}}) << '\n';
        } else {
            json_io::write_file(opt.out, instance_to_json(a));
            json_io::write_file(partner_path(opt.out), instance_to_json(b));
        }
        return kExitOk;
    });
}

int cmd_momentum(PairId pair, Side side, const std::string& file, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto inst = load(pair, file);
        const LieAlgElem j = momentum(inst, side).value;
        out << json_io::dump({{"pair", pair_name(pair)},
                              {"side", side_name(side)},
                              {"algebra", algebra_name(j.algebra())},
                              {"value", algebra_json(j)},
                              {"identity_residual", j.residual()}})
            << '\n';
        return kExitOk;
    });
}

int cmd_witness(PairId pair, Side side, const std::string& file_a, const std::string& file_b, double tol, std::ostream& out,
                std::ostream& err) {
    return guarded(err, [&] {
        const auto a = load(pair, file_a);
        const auto b = load(pair, file_b);
        Tolerances t;
        t.eq_tol = tol;
        t.validate();
        const WitnessReport rep = witness(a, b, side, t);
        Json j{{"pair", pair_name(pair)},
               {"side", side_name(side)},
               {"group", group_name(rep.witness.group())},
               {"witness", group_json(rep.witness)},
               {"residual", rep.residual}};
        if (rep.condition) j["condition"] = *rep.condition;
        out << json_io::dump(j) << '\n';
        if (!(rep.residual <= kWitnessResidualBound)) {
            err << "check failed: witness residual " << rep.residual << " exceeds " << kWitnessResidualBound << '\n';
            return kExitCheckFailed;
        }
        return kExitOk;
    });
}

int cmd_orbit(PairId pair, const std::string& file, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto inst = load(pair, file);
        const auto [left, right] = orbit_correspondence(inst);
        Json j{{"pair", pair_name(pair)}};
        switch (pair) {
            case PairId::unitary: {
                const auto& sigmas = std::get<std::vector<double>>(right);
                j["label"] = sigmas;
                j["normal_form_left"] = json_io::to_json(unitary::normal_form(sigmas, inst.n));
                j["normal_form_right"] = json_io::to_json(unitary::normal_form(sigmas, inst.m));
                break;
            }
            case PairId::symplectic: {
                const auto& inv = std::get<symplectic::OrbitInvariants>(right);
                j["label"] = json_io::to_json(inv);
                j["normal_form_left"] = json_io::to_json(symplectic::normal_form_left(inv).real());
                j["normal_form_right"] = json_io::to_json(symplectic::normal_form_right(inv).real());
                break;
            }
            case PairId::general_linear: {
                const auto& jd = std::get<gl::JordanData>(left);
                j["label"] = json_io::to_json(jd);
                if (jd.is_rational()) {
                    const auto [zeta, xi] = gl::jordan_correspond_exact(jd);
                    j["normal_form_left"] = json_io::to_json(zeta);
                    j["normal_form_right"] = json_io::to_json(xi);
                } else {
                    const auto [zeta, xi] = gl::jordan_correspond(jd);
                    j["normal_form_left"] = json_io::to_json(zeta);
                    j["normal_form_right"] = json_io::to_json(xi);
                }
                break;
            }
        }
        const bool match = labels_correspond(pair, left, right);
        j["labels_correspond"] = match;
        out << json_io::dump(j) << '\n';
        if (!match) {
            err << "check failed: left and right orbit labels do not correspond\n";
            return kExitCheckFailed;
        }
        return kExitOk;
    });
}

int cmd_suite(const SuiteConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const RunReport report = run_suites(config);
        const Json j = to_json(report);
        if (config.out.empty()) {
            out << json_io::dump(j) << '\n';
        } else {
            json_io::write_file(config.out, j);
            out << "records: " << report.records.size() << "  passed: " << report.passed << "  failed: " << report.failed
                << "  wall clock: " << report.wall_clock_s << " s\n";
        }
        if (!report.all_pass()) {
            Index shown = 0;
            for (const auto& r : report.records) {
                if (!r.pass && shown++ < 20) {
                    err << "FAIL " << r.check << " pair=" << r.pair << " dims=[" << r.n << "," << r.m << "] seed=" << r.seed
                        << " residual=" << r.residual << '\n';
                }
            }
            if (shown > 20) err << "... " << shown - 20 << " more failures\n";
            return kExitCheckFailed;
        }
        return kExitOk;
    });
}

}  // namespace dualpairs::harness
