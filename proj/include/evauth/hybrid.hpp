#pragma once

#include "evauth/ecdsa.hpp"

namespace evauth {

// One-shot public-key encryption: fresh ephemeral pair (e, eG), shared
// secret hash_parts(encode(e * pub)), keystream body, keyed digest tag.
// Layout: eG (33) || tag (32) || body (len(plaintext)).
Bytes hybrid_encrypt(const Point& pub, ByteSpan plaintext, Rng& rng);

// Throws Decode on malformed input, Confidentiality on tag mismatch.
Bytes hybrid_decrypt(const Scalar& priv, ByteSpan ciphertext);

} // namespace evauth
