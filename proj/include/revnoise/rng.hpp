#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace revnoise {

/// splitmix64 finalizer; full-period 64-bit mixer.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Counter-based random stream: every draw is a pure function of
/// (seed, counters), so Monte Carlo results are bit-identical no matter how
/// trials are partitioned across threads or re-run.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t bits(std::uint64_t a, std::uint64_t b, std::uint64_t c) const {
        std::uint64_t h = mix64(seed_ ^ (a * 0xD1B54A32D192ED03ull));
        h = mix64(h ^ (b * 0x8CB92BA72F3D8DD7ull));
        return mix64(h ^ (c * 0xA24BAED4963EE407ull));
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform(std::uint64_t a, std::uint64_t b, std::uint64_t c) const {
        return static_cast<double>(bits(a, b, c) >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p, std::uint64_t a, std::uint64_t b, std::uint64_t c) const {
        return uniform(a, b, c) < p;
    }

    std::uint64_t seed() const { return seed_; }

  private:
    std::uint64_t seed_;
};

/// Sequential deterministic generator for test-instance construction.
/// Wraps mt19937_64 (fully pinned by the standard) and hand-rolls the
/// variate transforms, since the std distributions are implementation
/// defined and would break seed-reproducibility guarantees.
class DetRng {
  public:
    explicit DetRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_bits() { return engine_(); }

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Box-Muller; one normal per call (the spare is discarded to keep the
    /// draw count predictable).
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    double exponential() {
        double u = uniform();
        while (u <= 0.0) u = uniform();
        return -std::log(u);
    }

    std::uint64_t uniform_index(std::uint64_t n) { return engine_() % n; }

  private:
    std::mt19937_64 engine_;
};

} // namespace revnoise
