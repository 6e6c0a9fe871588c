// dualpairs: generate instances, evaluate momentum maps, build witnesses,
// read off orbit labels and run the property suites.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "dualpairs/harness/commands.hpp"

using namespace dualpairs;
using namespace dualpairs::harness;

int main(int argc, char** argv) {
    CLI::App app{"Dual pairs of momentum maps: numerical verification toolkit"};
    app.require_subcommand(1);

    std::string pair_s = "unitary";
    std::string side_s = "left";
    Index n = 0;
    Index m = 0;
    std::uint64_t seed = 1;
    double tol = 1e-9;
    std::optional<double> suite_tol;
    Index trials = 0;
    std::string out;

    auto* gen = app.add_subcommand("gen", "write a random full-rank instance (and optionally a same-fiber partner)");
    std::string partner_s = "none";
    gen->add_option("pair_pos", pair_s, "pair (unitary|symplectic|gl)");
    gen->add_option("n_pos", n, "n");
    gen->add_option("m_pos", m, "m");
    gen->add_option("--pair", pair_s, "pair (unitary|symplectic|gl)");
    gen->add_option("--n", n, "left dimension parameter");
    gen->add_option("--m", m, "right dimension parameter");
    gen->add_option("--seed", seed, "seed");
    gen->add_option("--partner", partner_s, "none|fiber-left|fiber-right|normal-form|normal-form-right");
    gen->add_option("--out", out, "output file (partner goes to <stem>.partner<ext>)");

    auto* mom = app.add_subcommand("momentum", "print j_left or j_right of an instance file");
    std::string file_a;
    std::string file_b;
    mom->add_option("--pair", pair_s, "pair")->required();
    mom->add_option("--side", side_s, "left|right");
    mom->add_option("file", file_a, "instance file")->required();

    auto* wit = app.add_subcommand("witness", "build the group element carrying file A to file B");
    wit->add_option("--pair", pair_s, "pair")->required();
    wit->add_option("--side", side_s, "left|right");
    wit->add_option("--tol", tol, "relative tolerance for the momentum precondition");
    wit->add_option("file_a", file_a, "source instance")->required();
    wit->add_option("file_b", file_b, "target instance")->required();

    auto* orb = app.add_subcommand("orbit", "print the orbit label and both normal forms");
    orb->add_option("--pair", pair_s, "pair")->required();
    orb->add_option("file", file_a, "instance file")->required();

    auto* suite = app.add_subcommand("suite", "run the registered property suites");
    std::string config_file;
    std::vector<std::string> pairs;
    std::vector<std::string> only;
    Index max_dim = 0;
    bool list = false;
    suite->add_option("--config", config_file, "suite config JSON (flags override its fields)");
    suite->add_option("--pair", pairs, "restrict to these pairs");
    suite->add_option("--only", only, "restrict to these suites");
    suite->add_option("--seed", seed, "master seed");
    suite->add_option("--tol", suite_tol, "replace every check threshold");
    suite->add_option("--trials", trials, "trials per suite and variant (0: suite defaults)");
    suite->add_option("--max-dim", max_dim, "largest n sampled");
    suite->add_option("--out", out, "report file (stdout when absent)");
    suite->add_flag("--list", list, "list the registered suites and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (*gen) {
            GenOptions opt;
            opt.pair = parse_pair(pair_s);
            opt.n = n;
            opt.m = m;
            opt.seed = seed;
            opt.partner = parse_partner(partner_s);
            opt.out = out;
            return cmd_gen(opt, std::cout, std::cerr);
        }
        if (*mom) return cmd_momentum(parse_pair(pair_s), parse_side(side_s), file_a, std::cout, std::cerr);
        if (*wit) return cmd_witness(parse_pair(pair_s), parse_side(side_s), file_a, file_b, tol, std::cout, std::cerr);
        if (*orb) return cmd_orbit(parse_pair(pair_s), file_a, std::cout, std::cerr);
        if (*suite) {
            if (list) {
                for (const auto& s : registered_suites()) {
                    std::cout << s.name << "  (" << s.default_trials << " trials)  " << s.description << '\n';
                }
                return kExitOk;
            }
            SuiteConfig cfg = config_file.empty() ? SuiteConfig{} : suite_config_from_json(json_io::read_file(config_file));
            if (!pairs.empty()) {
                cfg.pairs.clear();
                for (const auto& p : pairs) cfg.pairs.push_back(parse_pair(p));
            }
            if (!only.empty()) cfg.suites = only;
            if (suite->count("--seed") > 0) cfg.seed = seed;
            if (suite_tol) cfg.tol = suite_tol;
            if (suite->count("--trials") > 0) cfg.trials = trials;
            if (max_dim > 0) cfg.max_dim = max_dim;
            if (!out.empty()) cfg.out = out;
            return cmd_suite(cfg, std::cout, std::cerr);
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
