#pragma once

// Counter-based pseudorandom streams (Philox4x32-10, Salmon et al. 2011).
//
// A stream is fully determined by (seed, stream id); block i of the stream is
// philox(counter = {i_lo, i_hi, stream_lo, stream_hi}, key = {seed_lo, seed_hi}).
// Each block yields two 64-bit words: (x1 << 32 | x0) and (x3 << 32 | x2).
// Uniform doubles take the top 53 bits of a word; Gaussians use Box-Muller on
// consecutive uniform pairs (cos branch first, then sin branch).

#include <array>
#include <cstdint>

namespace dualpairs {

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter, std::array<std::uint32_t, 2> key);

class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

    // Independent stream for trial `trial` of suite `suite`.
    static CounterRng for_trial(std::uint64_t seed, std::uint32_t suite, std::uint32_t trial);

    std::uint64_t next_u64();
    // Uniform in [0, 1).
    double uniform();
    // Uniform in (0, 1].
    double uniform_open_zero();
    double gaussian();
    // Uniform integer in [lo, hi].
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    std::array<std::uint64_t, 2> buffer_{};
    int buffered_ = 0;
    double spare_gaussian_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace dualpairs
