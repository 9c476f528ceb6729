#pragma once

#include <cstdint>
#include <vector>

namespace propb {

// 64-bit finalizer from the splitmix64 reference implementation.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derives an independent stream seed from (seed, tag, index). Used for the
// documented one-master-seed scheme: every subcommand / trial / restart gets
// its own stream and results do not depend on scheduling.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag,
                                    std::uint64_t index) {
    std::uint64_t s = mix64(seed ^ 0xa076'1d64'78bd'642fULL);
    s = mix64(s ^ tag);
    s = mix64(s ^ index);
    return s;
}

// Stream tags for derive_seed. Fixed constants, part of the reproducibility
// contract (changing them changes every derived stream).
namespace stream {
constexpr std::uint64_t kGen = 0x67656eULL;      // "gen"
constexpr std::uint64_t kRun = 0x72756eULL;      // "run"
constexpr std::uint64_t kRestart = 0x72737274ULL;
constexpr std::uint64_t kTrial = 0x7472696cULL;
constexpr std::uint64_t kExperiment = 0x65787074ULL;
} // namespace stream

// Counter-based generator (splitmix64). Deterministic across platforms; no
// std distributions are used anywhere so outputs are bit-stable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Unbiased uniform integer in [0, n); n >= 1.
    std::uint64_t next_below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    // Uniform k-subset of {0,...,pool-1} via Floyd's algorithm; returned sorted.
    std::vector<std::int32_t> sample_subset(std::uint64_t pool, std::size_t k);

private:
    std::uint64_t state_;
};

} // namespace propb
