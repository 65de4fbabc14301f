#pragma once

#include "evauth/u256.hpp"

namespace evauth {

// Montgomery arithmetic modulo a fixed odd 256-bit modulus with the top bit
// set (both curve moduli qualify). Values passed to mul/sqr/pow/inv must be
// in Montgomery form; add/sub/neg work in either domain.
class MontCtx {
public:
    explicit MontCtx(const U256& modulus);

    const U256& modulus() const { return mod_; }

    U256 to_mont(const U256& a) const;   // a < modulus
    U256 from_mont(const U256& a) const;

    U256 mul(const U256& a, const U256& b) const;
    U256 sqr(const U256& a) const { return mul(a, a); }
    U256 add(const U256& a, const U256& b) const;
    U256 sub(const U256& a, const U256& b) const;
    U256 neg(const U256& a) const;
    U256 pow(const U256& base, const U256& exp) const;
    U256 inv(const U256& a) const;       // a != 0, via Fermat

    // Standard-domain helpers for occasional use.
    U256 mul_std(const U256& a, const U256& b) const;
    U256 inv_std(const U256& a) const;
    U256 reduce(const U256& a) const;    // a arbitrary -> a mod modulus

    const U256& one_mont() const { return one_; }

private:
    U256 mod_;
    U256 r2_;     // 2^512 mod modulus
    U256 one_;    // 2^256 mod modulus
    std::uint64_t n0_ = 0; // -modulus^{-1} mod 2^64
};

} // namespace evauth
