#pragma once

#include <cstdint>

// Counter-based random draws. Every draw is a pure function of
// (seed, stream, step, index), so two rollouts that share a seed see the
// same environment randomness at the same step even after their
// trajectories diverge. No state, no draw-order sensitivity.
namespace cpss::rng {

// Stream tags keep unrelated draw families from aliasing.
inline constexpr std::uint32_t kStreamInit = 1;    // initial traffic layout
inline constexpr std::uint32_t kStreamSpawn = 2;   // per-step spawn draws
inline constexpr std::uint32_t kStreamRegime = 3;  // regime block choices / jitter
inline constexpr std::uint32_t kStreamTrain = 4;   // exploration during training
inline constexpr std::uint32_t kStreamEpisode = 5; // episode seed derivation

constexpr std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    return splitmix(a + 0x632be59bd9b4e019ULL * b);
}

constexpr std::uint64_t draw_u64(std::uint64_t seed, std::uint32_t stream,
                                 std::uint64_t step, std::uint64_t index) {
    std::uint64_t h = splitmix(seed);
    h = mix(h, stream);
    h = mix(h, step);
    h = mix(h, index);
    return h;
}

// Uniform in [0, 1).
constexpr double draw_unit(std::uint64_t seed, std::uint32_t stream,
                           std::uint64_t step, std::uint64_t index) {
    return static_cast<double>(draw_u64(seed, stream, step, index) >> 11) * 0x1.0p-53;
}

constexpr double draw_range(std::uint64_t seed, std::uint32_t stream,
                            std::uint64_t step, std::uint64_t index,
                            double lo, double hi) {
    return lo + (hi - lo) * draw_unit(seed, stream, step, index);
}

// Uniform integer in [0, n). Modulo bias is irrelevant at 64 bits.
constexpr int draw_index(std::uint64_t seed, std::uint32_t stream,
                         std::uint64_t step, std::uint64_t index, int n) {
    return static_cast<int>(draw_u64(seed, stream, step, index) % static_cast<std::uint64_t>(n));
}

} // namespace cpss::rng
