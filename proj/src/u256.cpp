#include "evauth/u256.hpp"

#include <stdexcept>

namespace evauth {

U256 U256::from_u64(std::uint64_t v) {
    U256 r;
    r.w[0] = v;
    return r;
}

U256 U256::from_hex(std::string_view hex) {
    if (hex.size() > 64) throw std::invalid_argument("U256::from_hex: too long");
    std::string padded(64 - hex.size(), '0');
    padded.append(hex);
    return from_be_bytes(evauth::from_hex(padded));
}

U256 U256::from_be_bytes(ByteSpan b) {
    if (b.size() != 32) throw std::invalid_argument("U256::from_be_bytes: need 32 bytes");
    U256 r;
    for (int limb = 0; limb < 4; ++limb)
        r.w[3 - limb] = read_be64(b.data() + 8 * limb);
    return r;
}

Bytes U256::be_bytes() const {
    Bytes out;
    out.reserve(32);
    for (int limb = 3; limb >= 0; --limb) put_be64(out, w[limb]);
    return out;
}

std::string U256::hex() const {
    return to_hex(be_bytes());
}

bool U256::is_zero() const {
    return (w[0] | w[1] | w[2] | w[3]) == 0;
}

bool U256::bit(unsigned i) const {
    return (w[i / 64] >> (i % 64)) & 1u;
}

unsigned U256::top_bit() const {
    for (int limb = 3; limb >= 0; --limb) {
        if (w[limb] == 0) continue;
        unsigned b = 63;
        while (!((w[limb] >> b) & 1u)) --b;
        return static_cast<unsigned>(limb) * 64 + b;
    }
    return 0;
}

bool u256_less(const U256& a, const U256& b) {
    for (int i = 3; i >= 0; --i) {
        if (a.w[i] != b.w[i]) return a.w[i] < b.w[i];
    }
    return false;
}

std::uint64_t u256_add(U256& r, const U256& a, const U256& b) {
    unsigned __int128 carry = 0;
    for (int i = 0; i < 4; ++i) {
        unsigned __int128 cur = carry + a.w[i] + b.w[i];
        r.w[i] = static_cast<std::uint64_t>(cur);
        carry = cur >> 64;
    }
    return static_cast<std::uint64_t>(carry);
}

std::uint64_t u256_sub(U256& r, const U256& a, const U256& b) {
    unsigned __int128 borrow = 0;
    for (int i = 0; i < 4; ++i) {
        unsigned __int128 cur =
            static_cast<unsigned __int128>(a.w[i]) - b.w[i] - borrow;
        r.w[i] = static_cast<std::uint64_t>(cur);
        borrow = (cur >> 64) ? 1 : 0;
    }
    return static_cast<std::uint64_t>(borrow);
}

void u256_mul_wide(std::uint64_t out[8], const U256& a, const U256& b) {
    for (int i = 0; i < 8; ++i) out[i] = 0;
    for (int i = 0; i < 4; ++i) {
        std::uint64_t carry = 0;
        for (int j = 0; j < 4; ++j) {
            unsigned __int128 cur =
                static_cast<unsigned __int128>(a.w[i]) * b.w[j] + out[i + j] + carry;
            out[i + j] = static_cast<std::uint64_t>(cur);
            carry = static_cast<std::uint64_t>(cur >> 64);
        }
        out[i + 4] = carry;
    }
}

} // namespace evauth
