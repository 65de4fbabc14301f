#pragma once

#include <string_view>

#include "evauth/sha256.hpp"
#include "evauth/u256.hpp"

namespace evauth {

// Hash-counter DRBG. Every consumer takes an Rng& explicitly; fixed seeds
// give bit-reproducible runs, which the simulator depends on.
class Rng {
public:
    explicit Rng(ByteSpan seed_material);
    static Rng from_u64(std::uint64_t seed);
    static Rng system(); // seeded from std::random_device

    void fill(std::uint8_t* out, std::size_t n);
    Bytes bytes(std::size_t n);
    U256 u256();
    std::uint64_t u64();

    // Independent child stream, stable for (seed, label).
    Rng derive(std::string_view label) const;

private:
    Digest key_{};
    std::uint64_t counter_ = 0;
    Digest buf_{};
    std::size_t avail_ = 0;
};

} // namespace evauth
