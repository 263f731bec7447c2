#include "desp/rng.hpp"

#include <cmath>
#include <string>

#include "desp/errors.hpp"

namespace desp {

namespace {
constexpr std::uint64_t kLehmerMultiplier = 16807;
constexpr std::uint64_t kLehmerModulus = 2147483647;  // 2^31 - 1
constexpr int kWarmupDraws = 1000;
}  // namespace

Gfsr::Gfsr(std::int64_t seed) {
    if (seed < kMinSeed || seed > kMaxSeed) {
        throw ConfigError("rng seed must lie in [1, 2^31-2], got " +
                          std::to_string(seed));
    }
    std::uint64_t v = static_cast<std::uint64_t>(seed);
    for (auto& word : register_) {
        v = (kLehmerMultiplier * v) % kLehmerModulus;
        const std::uint32_t hi = static_cast<std::uint32_t>(v % 65536);
        v = (kLehmerMultiplier * v) % kLehmerModulus;
        const std::uint32_t lo = static_cast<std::uint32_t>(v % 65536);
        word = (hi << 16) + lo;
    }
    for (int i = 0; i < kWarmupDraws; ++i) {
        next_u32();
    }
    draws_emitted_ = 0;
}

std::uint32_t Gfsr::next_u32() {
    // register_[index_] is x[n-98]; the slot 98-27 ahead holds x[n-27].
    const std::size_t k = (index_ + (kRegisterSize - kShortLag)) % kRegisterSize;
    const std::uint32_t out = register_[index_] ^ register_[k];
    register_[index_] = out;
    index_ = (index_ + 1) % kRegisterSize;
    ++draws_emitted_;
    return out;
}

double Gfsr::uniform01() {
    return static_cast<double>(next_u32()) / 4294967296.0;  // 2^32, result < 1
}

double Gfsr::uniform(double a, double b) {
    if (a > b) {
        throw ConfigError("uniform bounds out of order: a=" + std::to_string(a) +
                          " > b=" + std::to_string(b));
    }
    return a + (b - a) * uniform01();
}

double Gfsr::exponential(double mean) {
    if (mean <= 0.0) {
        throw ConfigError("exponential mean must be positive, got " +
                          std::to_string(mean));
    }
    // ln(1-u) with u < 1 stays finite; u = 0 maps to 0.
    return -mean * std::log(1.0 - uniform01());
}

}  // namespace desp
