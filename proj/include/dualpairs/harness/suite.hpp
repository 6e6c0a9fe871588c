#pragma once

// Batch property suites and their JSON reports.
//
// Every trial draws from CounterRng::for_trial(master_seed, stream_suite, trial)
// and the record's "seed" field holds the 64-bit stream id
// (stream_suite << 32 | trial), so a single record can be replayed from the
// master seed alone. Records are sorted by (check, pair, dims, seed) before
// the report is written.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dualpairs/json_io.hpp"
#include "dualpairs/pairs_common.hpp"

namespace dualpairs::harness {

struct VerificationRecord {
    std::string check;
    std::string pair;  // pair name, or "-" for pair-independent checks
    Index n = 0;
    Index m = 0;
    std::uint64_t seed = 0;
    double residual = 0.0;
    bool pass = false;

    friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;
};

struct SuiteConfig {
    std::vector<PairId> pairs{PairId::unitary, PairId::symplectic, PairId::general_linear};
    // Suites to run; empty means all registered suites.
    std::vector<std::string> suites;
    Index max_dim = 6;
    // Trials per (suite, pair, side); 0 selects each suite's own default.
    Index trials = 0;
    std::uint64_t seed = 1;
    // Replaces every check threshold when set.
    std::optional<double> tol;
    std::string out;

    // Throws InputError on unknown suite names or out-of-range values.
    void validate() const;
};

// {"pairs", "suites", "max_dim", "trials", "seed", "tol", "out"}; absent
// fields keep their defaults.
SuiteConfig suite_config_from_json(const json_io::Json& j);
json_io::Json to_json(const SuiteConfig& c);

struct RunReport {
    std::uint64_t master_seed = 0;
    std::vector<VerificationRecord> records;
    Index passed = 0;
    Index failed = 0;
    double wall_clock_s = 0.0;

    bool all_pass() const { return failed == 0 && !records.empty(); }
    // Recomputes the summary counts and sorts the records.
    void finalize();
};

struct SuiteInfo {
    std::uint32_t id;
    std::string name;
    Index default_trials;
    std::string description;
};

const std::vector<SuiteInfo>& registered_suites();

RunReport run_suites(const SuiteConfig& config);

json_io::Json to_json(const VerificationRecord& r);
VerificationRecord record_from_json(const json_io::Json& j);
json_io::Json to_json(const RunReport& r);
// Throws InputError if the summary counts disagree with the records.
RunReport report_from_json(const json_io::Json& j);

// The records of two reports are identical (wall clock ignored).
bool same_records(const RunReport& a, const RunReport& b);

}  // namespace dualpairs::harness
