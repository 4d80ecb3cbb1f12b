// random.hpp
// Seeded, splittable random streams for reproducible Monte Carlo runs.

#pragma once

#include <cstdint>
#include <random>

namespace nogo {

namespace detail {

// SplitMix64 finalizer, used to turn (seed, stream_id) into well-mixed
// engine seed material and to derive child stream ids.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t combine(std::uint64_t a, std::uint64_t b) {
    return mix64(a ^ (mix64(b) + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
}

} // namespace detail

// A deterministic random stream identified by (seed, stream_id).
// The same pair always reproduces the same sample sequence, and derive()
// yields statistically independent child streams, so work units can be
// split across (k, chunk) indices with a deterministic merge order.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed, std::uint64_t stream_id = 0)
        : seed_(seed),
          stream_(stream_id),
          engine_(detail::combine(detail::mix64(seed), stream_id)) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_; }

    // Uniform double in [0, 1), 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Zero-mean Gaussian.
    double gaussian(double stddev) {
        return normal_(engine_) * stddev;
    }

    std::uint64_t next_u64() { return engine_(); }

    // Independent child stream; does not consume entropy from this stream.
    RandomSource derive(std::uint64_t child) const {
        return RandomSource(seed_, detail::combine(stream_, child + 1));
    }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace nogo
