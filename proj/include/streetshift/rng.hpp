#pragma once

#include <cmath>
#include <cstdint>

namespace streetshift {

// SplitMix64 generator. The whole state is one u64 so it can be stored in a
// checkpoint and restored exactly. normal() derives both Box-Muller uniforms
// per call and discards the second variate, keeping the state a pure u64
// (no cached spare).
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    // Inclusive integer range.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    double uniform_range(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller.
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    std::uint64_t state() const { return state_; }
    void set_state(std::uint64_t s) { state_ = s; }

private:
    std::uint64_t state_;
};

// Stateless mix used to derive per-item seeds from a master seed by counter.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter) {
    std::uint64_t z = master ^ (0x9E3779B97F4A7C15ull * (counter + 1));
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// FNV-1a over a byte string; used for config hashes.
inline std::uint64_t fnv1a64(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001B3ull;
    }
    return h;
}

}  // namespace streetshift
