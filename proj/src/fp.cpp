#include "evauth/fp.hpp"

#include <stdexcept>

namespace evauth {

MontCtx::MontCtx(const U256& modulus) : mod_(modulus) {
    if ((modulus.w[0] & 1u) == 0 || !modulus.bit(255))
        throw std::invalid_argument("MontCtx: modulus must be odd with top bit set");

    // n0 = -mod^{-1} mod 2^64 (Newton iteration doubles correct bits).
    std::uint64_t inv = 1;
    for (int i = 0; i < 6; ++i) inv *= 2 - mod_.w[0] * inv;
    n0_ = ~inv + 1;

    // one = 2^256 mod m. Top bit of m is set, so 2^256 - m < m.
    U256 zero{};
    u256_sub(one_, zero, mod_);

    // r2 = 2^512 mod m by 256 modular doublings of one.
    U256 r = one_;
    for (int i = 0; i < 256; ++i) r = add(r, r);
    r2_ = r;
}

U256 MontCtx::to_mont(const U256& a) const {
    return mul(a, r2_);
}

U256 MontCtx::from_mont(const U256& a) const {
    return mul(a, U256::from_u64(1));
}

// CIOS Montgomery multiplication.
U256 MontCtx::mul(const U256& a, const U256& b) const {
    std::uint64_t t[6] = {0, 0, 0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
        std::uint64_t carry = 0;
        for (int j = 0; j < 4; ++j) {
            unsigned __int128 cur =
                static_cast<unsigned __int128>(a.w[i]) * b.w[j] + t[j] + carry;
            t[j] = static_cast<std::uint64_t>(cur);
            carry = static_cast<std::uint64_t>(cur >> 64);
        }
        unsigned __int128 cur4 = static_cast<unsigned __int128>(t[4]) + carry;
        t[4] = static_cast<std::uint64_t>(cur4);
        t[5] += static_cast<std::uint64_t>(cur4 >> 64);

        std::uint64_t m = t[0] * n0_;
        unsigned __int128 cur =
            static_cast<unsigned __int128>(m) * mod_.w[0] + t[0];
        carry = static_cast<std::uint64_t>(cur >> 64);
        for (int j = 1; j < 4; ++j) {
            cur = static_cast<unsigned __int128>(m) * mod_.w[j] + t[j] + carry;
            t[j - 1] = static_cast<std::uint64_t>(cur);
            carry = static_cast<std::uint64_t>(cur >> 64);
        }
        cur4 = static_cast<unsigned __int128>(t[4]) + carry;
        t[3] = static_cast<std::uint64_t>(cur4);
        t[4] = t[5] + static_cast<std::uint64_t>(cur4 >> 64);
        t[5] = 0;
    }
    U256 r{{t[0], t[1], t[2], t[3]}};
    if (t[4] != 0 || !u256_less(r, mod_)) u256_sub(r, r, mod_);
    return r;
}

U256 MontCtx::add(const U256& a, const U256& b) const {
    U256 r;
    std::uint64_t carry = u256_add(r, a, b);
    if (carry != 0 || !u256_less(r, mod_)) u256_sub(r, r, mod_);
    return r;
}

U256 MontCtx::sub(const U256& a, const U256& b) const {
    U256 r;
    std::uint64_t borrow = u256_sub(r, a, b);
    if (borrow != 0) u256_add(r, r, mod_);
    return r;
}

U256 MontCtx::neg(const U256& a) const {
    if (a.is_zero()) return a;
    U256 r;
    u256_sub(r, mod_, a);
    return r;
}

U256 MontCtx::pow(const U256& base, const U256& exp) const {
    U256 acc = one_;
    if (exp.is_zero()) return acc;
    for (int i = static_cast<int>(exp.top_bit()); i >= 0; --i) {
        acc = sqr(acc);
        if (exp.bit(static_cast<unsigned>(i))) acc = mul(acc, base);
    }
    return acc;
}

U256 MontCtx::inv(const U256& a) const {
    if (a.is_zero()) throw std::invalid_argument("MontCtx::inv: zero");
    U256 e;
    u256_sub(e, mod_, U256::from_u64(2));
    return pow(a, e);
}

U256 MontCtx::mul_std(const U256& a, const U256& b) const {
    return mul(mul(a, r2_), b);
}

U256 MontCtx::inv_std(const U256& a) const {
    return from_mont(inv(to_mont(reduce(a))));
}

U256 MontCtx::reduce(const U256& a) const {
    U256 r = a;
    while (!u256_less(r, mod_)) u256_sub(r, r, mod_);
    return r;
}

} // namespace evauth
