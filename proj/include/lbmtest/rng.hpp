#pragma once

#include <cmath>
#include <cstdint>

namespace lbmtest {

namespace detail {

/// splitmix64 finalizer; used to spread seeds and derive substreams.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace detail

/// Deterministic, platform-independent PRNG (xoshiro256++) with explicit
/// substreams. A (seed, stream) pair fully determines the sequence, so any
/// trial of an experiment can be regenerated in isolation. All sampling
/// routines are implemented here rather than via <random> distributions,
/// whose algorithms the standard leaves unspecified.
class Rng {
  public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
        std::uint64_t x = detail::mix64(seed) ^ detail::mix64(detail::mix64(stream) + 1);
        for (auto& word : state_) {
            x = detail::mix64(x);
            word = x;
        }
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = detail::rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = detail::rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0, 1]; safe as a log() argument.
    double uniform_pos() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Unbiased uniform integer in {lo..hi} via rejection sampling.
    int uniform_int(int lo, int hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return lo + static_cast<int>(x % span);
    }

    /// Standard normal via Box-Muller (one draw per pair of uniforms).
    double normal() {
        const double u1 = uniform_pos();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    bool bernoulli(double prob) { return uniform01() < prob; }

    /// Poisson by inversion of exponential interarrivals; adequate for the
    /// small rates used here (multiplicative form, no log per step).
    int poisson(double rate) {
        const double threshold = std::exp(-rate);
        int count = 0;
        double prod = uniform_pos();
        while (prod > threshold) {
            ++count;
            prod *= uniform_pos();
        }
        return count;
    }

  private:
    std::uint64_t state_[4];
};

/// Derive a child stream id; nestable (e.g. per trial, then per attempt).
inline std::uint64_t substream(std::uint64_t stream, std::uint64_t index) {
    return detail::mix64(stream ^ detail::mix64(index + 0x51D2CC5A1ull));
}

}  // namespace lbmtest
