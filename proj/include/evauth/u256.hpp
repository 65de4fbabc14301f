#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "evauth/bytes.hpp"

namespace evauth {

// Unsigned 256-bit integer, four 64-bit limbs, least significant first.
struct U256 {
    std::array<std::uint64_t, 4> w{};

    static U256 from_u64(std::uint64_t v);
    static U256 from_hex(std::string_view hex);      // up to 64 hex digits
    static U256 from_be_bytes(ByteSpan b);           // exactly 32 bytes

    Bytes be_bytes() const;                           // 32 bytes, big endian
    std::string hex() const;                          // 64 lowercase digits

    bool is_zero() const;
    bool bit(unsigned i) const;                       // i < 256
    unsigned top_bit() const;                         // index of highest set bit, 0 if zero

    bool operator==(const U256&) const = default;
};

bool u256_less(const U256& a, const U256& b);

// r = a + b, returns carry out.
std::uint64_t u256_add(U256& r, const U256& a, const U256& b);
// r = a - b, returns borrow out.
std::uint64_t u256_sub(U256& r, const U256& a, const U256& b);
// out[0..7] = a * b (schoolbook, 512-bit product, little endian limbs).
void u256_mul_wide(std::uint64_t out[8], const U256& a, const U256& b);

} // namespace evauth
