#pragma once

#include <cstdint>
#include <random>

namespace fmom {

/// Seeded random stream: mt19937_64 plus fixed mappings to uniform and
/// normal doubles. The std::*_distribution adaptors are implementation
/// defined, so the mappings are spelled out here to keep identical seeds
/// giving identical sequences.
class rng_stream {
public:
    explicit rng_stream(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Standard normal (Box-Muller; the second value of each pair is cached).
    double normal();

    std::mt19937_64& engine() noexcept { return engine_; }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace fmom
