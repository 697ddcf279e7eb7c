#pragma once

#include <cstdint>
#include <random>

namespace ercp {

namespace detail {

// splitmix64; used only to derive well-separated stream ids.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace detail

// Seeded randomness handle. Identical (seed, stream) yields an identical
// draw sequence; distinct streams are statistically independent. All
// randomness in the toolkit flows from one seed fanned out by stream ids.
struct RandomSource {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;

    std::mt19937_64 engine() const {
        std::seed_seq seq{static_cast<std::uint32_t>(seed),
                          static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream),
                          static_cast<std::uint32_t>(stream >> 32)};
        return std::mt19937_64(seq);
    }

    // Derived child stream; deterministic and collision-resistant.
    RandomSource substream(std::uint64_t n) const {
        return RandomSource{seed, detail::splitmix64(stream + 0x9E3779B97F4A7C15ULL * (n + 1))};
    }
};

// n uniform draws on [0,1), one engine per call.
std::vector<double> uniform_draws(std::size_t n, RandomSource rng);

}  // namespace ercp
