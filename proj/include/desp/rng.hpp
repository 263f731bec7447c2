#ifndef DESP_RNG_HPP
#define DESP_RNG_HPP

#include <array>
#include <cstddef>
#include <cstdint>

namespace desp {

/**
 * Generalized feedback shift register generator on the trinomial (98, 27):
 *
 *     x[n] = x[n-98] XOR x[n-27]
 *
 * over 32-bit words. The circular register keeps the last 98 outputs;
 * the cursor points at x[n-98] and the second tap sits 71 slots ahead.
 *
 * Seeding is fully pinned so independent implementations produce identical
 * streams: a Lehmer LCG (v <- 16807*v mod 2^31-1, v0 = seed) supplies two
 * draws per register word, packed as ((a mod 2^16) << 16) + (b mod 2^16),
 * and the first 1000 outputs are discarded as warm-up. Conformance triples
 * live in data/rng-fixtures.
 *
 * Single-owner mutable state: one generator per simulation run, never
 * shared across threads.
 */
class Gfsr {
public:
    static constexpr std::size_t kRegisterSize = 98;
    static constexpr std::size_t kShortLag = 27;
    static constexpr std::int64_t kMinSeed = 1;
    static constexpr std::int64_t kMaxSeed = 2147483646;  // 2^31 - 2

    explicit Gfsr(std::int64_t seed);

    std::uint32_t next_u32();

    double uniform01();                  // [0, 1)
    double uniform(double a, double b);  // [a, b), requires a <= b
    double exponential(double mean);     // [0, inf), requires mean > 0

    // State peeks for white-box tests and the fixture self-check.
    std::uint32_t word(std::size_t i) const { return register_[i]; }
    std::size_t cursor() const { return index_; }
    std::uint64_t draws_emitted() const { return draws_emitted_; }

private:
    std::array<std::uint32_t, kRegisterSize> register_{};
    std::size_t index_ = 0;
    std::uint64_t draws_emitted_ = 0;
};

}  // namespace desp

#endif
