#pragma once

#include <cstdint>

namespace weingarten {

/// 64-bit linear congruential generator used wherever results have to be
/// reproducible bit for bit in other languages:
///
///   state' = 6364136223846793005 * state + 1442695040888963407  (mod 2^64)
///
/// `uniform()` returns the top 53 bits of the new state scaled by 2^-53, so it
/// lies in [0, 1). The seed is used as the initial state unchanged.
class Lcg64 {
public:
    static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
    static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

    explicit constexpr Lcg64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        state_ = kMultiplier * state_ + kIncrement;
        return state_;
    }

    constexpr double uniform() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    constexpr double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

private:
    std::uint64_t state_;
};

} // namespace weingarten
