#ifndef DIAMCRIT_RNG_HPP
#define DIAMCRIT_RNG_HPP

#include <cmath>
#include <cstdint>

namespace diamcrit {

// Pinned pseudo-random generator: splitmix64 (Steele/Lea/Flood), with the
// standard constants.  The i-th output for seed s is
//     mix(s + 0x9E3779B97F4A7C15 * (i+1)),
// which makes the stream both sequential and randomly addressable, so
// sampling loops can be split across threads without changing the result.
// All seeded behaviour in this project derives from this generator; the
// constants below are part of the output contract.
inline constexpr std::uint64_t kSplitMix64Gamma = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return splitmix64_mix(state_ += kSplitMix64Gamma); }

    // Output i of the stream for this seed, independent of calls to next().
    static std::uint64_t at(std::uint64_t seed, std::uint64_t index) {
        return splitmix64_mix(seed + kSplitMix64Gamma * (index + 1));
    }

    // Uniform in [0, bound); bound > 0.  Modulo reduction: the tiny bias is
    // irrelevant here, determinism is what matters.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

// Bernoulli(p) decision from one 64-bit draw, using a 53-bit threshold so the
// comparison is exact in IEEE double arithmetic on every platform.
inline std::uint64_t bernoulli_threshold53(double p) {
    if (p <= 0.0) return 0;
    if (p >= 1.0) return (std::uint64_t{1} << 53);
    return static_cast<std::uint64_t>(std::llround(p * 9007199254740992.0));  // p * 2^53
}

inline bool bernoulli_hit(std::uint64_t draw, std::uint64_t threshold53) {
    return (draw >> 11) < threshold53;
}

}  // namespace diamcrit

#endif  // DIAMCRIT_RNG_HPP
