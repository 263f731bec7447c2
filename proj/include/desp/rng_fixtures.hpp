#ifndef DESP_RNG_FIXTURES_HPP
#define DESP_RNG_FIXTURES_HPP

#include <array>
#include <cstdint>
#include <string>

namespace desp {

// Golden conformance triple: the draw_index-th 32-bit output (1-based,
// counted after warm-up) for the given seed. The same triples ship in
// data/rng-fixtures for cross-language checks.
struct RngFixture {
    std::int64_t seed;
    std::uint64_t draw_index;
    std::uint32_t expected;
};

const std::array<RngFixture, 9>& rng_fixtures();

// Replays every fixture on a fresh generator. Returns an empty string on
// success, otherwise a description of the first mismatch.
std::string verify_rng_fixtures();

}  // namespace desp

#endif
