#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace cohortforge {

/// Deterministic RNG with portable draw functions. std distributions are
/// implementation-defined, so all sampling goes through these helpers to
/// keep artifacts byte-identical for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : base_(seed), engine_(seed) {}

    /// Sub-stream for patient `index`; independent of draws on this stream.
    Rng fork(std::uint64_t index) const { return Rng(seed_mix(base_, index)); }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1).
    double next_double() { return (engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [lo, hi] inclusive.
    std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(engine_() % span);
    }

    bool bernoulli(double p) { return next_double() < p; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_int(0, static_cast<std::int64_t>(i) - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(next_int(0, static_cast<std::int64_t>(v.size()) - 1))];
    }

private:
    static std::uint64_t seed_mix(std::uint64_t seed, std::uint64_t index) {
        // splitmix64 step over seed + golden-ratio-spread index
        std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t base_ = 0;
    std::mt19937_64 engine_;
};

}  // namespace cohortforge
