#pragma once

#include "evauth/curve.hpp"
#include "evauth/hash.hpp"

namespace evauth {

struct KeyPair {
    Scalar priv{};
    Point pub{};
};

// Signature keeps the full nonce point R next to (r, s); r is always
// R.x mod order. Wire form: compressed R (33 bytes) followed by s (32).
struct Signature {
    Point R{};
    Scalar r{}, s{};
    bool operator==(const Signature&) const = default;
};

KeyPair keygen(Rng& rng);
KeyPair keypair_from_priv(const Scalar& priv); // Precondition error on zero

// Digest-level core. The nonce is derived by hashing (priv, digest, retry
// counter), so identical inputs give identical signatures.
Signature sign_digest(const Digest& digest, const Scalar& priv);
bool verify_digest(const Digest& digest, const Point& pub, const Signature& sig);

// Byte-message convenience: digest = hash_parts(m).
Signature sign_message(ByteSpan m, const Scalar& priv);
bool verify_message(ByteSpan m, const Point& pub, const Signature& sig);

// Mathematical check R'.x mod order == r for R' = (h/s)G + (r/s)Q.
// Used directly by the published-vector tests and the extraction oracle;
// accepts any digest length (leftmost 32 bytes used) and returns false
// (never throws) on out-of-range r or s.
bool verify_rs(ByteSpan digest, const Point& pub, const U256& r, const U256& s);

Bytes encode_signature(const Signature& sig); // 65 bytes
std::optional<Signature> decode_signature(ByteSpan b);

} // namespace evauth
