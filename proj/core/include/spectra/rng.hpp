#pragma once

#include <cstdint>
#include <random>

namespace spectra {

/// Deterministic RNG stream. Streams derived from (master seed, index) are
/// independent and reproducible regardless of evaluation order, so parallel
/// sampling schedules cannot change results.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix(seed)) {}

    static std::uint64_t splitmix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    /// Independent substream for (this stream's seed, index).
    static Rng stream(std::uint64_t master_seed, std::uint64_t index) {
        return Rng(splitmix(master_seed) ^ splitmix(index * 0xd1342543de82ef95ULL + 1));
    }

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound) by rejection; independent of libstdc++ distribution internals.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % bound;
    }

    /// Uniform element of F_q.
    int field_element(int q) { return static_cast<int>(below(static_cast<std::uint64_t>(q))); }

    /// Uniform element of F_q \ {0}.
    int nonzero_field_element(int q) { return 1 + static_cast<int>(below(static_cast<std::uint64_t>(q - 1))); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace spectra
