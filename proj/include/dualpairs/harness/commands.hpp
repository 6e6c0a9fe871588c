#pragma once

// The CLI subcommands as plain functions. Each returns the process exit
// status: 0 success, 1 check failure (failed suite, momentum mismatch,
// rank violation, witness residual above 1e-7), 2 input error.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "dualpairs/harness/generators.hpp"
#include "dualpairs/harness/suite.hpp"

namespace dualpairs::harness {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

// Instance files: a matrix (unitary, symplectic) or {"Q", "P"} (GL).
json_io::Json instance_to_json(const DualPairInstance& inst);
DualPairInstance instance_from_json(PairId pair, const json_io::Json& j);

struct GenOptions {
    PairId pair = PairId::unitary;
    Index n = 1;
    Index m = 1;
    std::uint64_t seed = 1;
    PartnerMode partner = PartnerMode::none;
    // Empty: print to stdout. Otherwise the instance goes to `out` and the
    // partner to `<stem>.partner<ext>` next to it.
    std::string out;
};

std::filesystem::path partner_path(const std::filesystem::path& out);

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err);
int cmd_momentum(PairId pair, Side side, const std::string& file, std::ostream& out, std::ostream& err);
int cmd_witness(PairId pair, Side side, const std::string& file_a, const std::string& file_b, double tol, std::ostream& out,
                std::ostream& err);
int cmd_orbit(PairId pair, const std::string& file, std::ostream& out, std::ostream& err);
int cmd_suite(const SuiteConfig& config, std::ostream& out, std::ostream& err);

}  // namespace dualpairs::harness
