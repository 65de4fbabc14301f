#include "evauth/hybrid.hpp"

namespace evauth {

using namespace curve;

namespace {

Digest shared_secret(const Point& shared_point) {
    return hash_parts(encode_point(shared_point));
}

Digest tag_of(const Digest& ss, ByteSpan eph, ByteSpan body) {
    return hash_parts(digest_span(ss), to_bytes("hybrid-mac"), eph, body);
}

} // namespace

Bytes hybrid_encrypt(const Point& pub, ByteSpan plaintext, Rng& rng) {
    if (pub.inf || !on_curve(pub)) fail(Err::Precondition, "bad recipient key");
    Scalar e = s_random_nonzero(rng);
    Point E = mul_base(e);
    Digest ss = shared_secret(mul(e, pub));
    Bytes eph = encode_point(E);
    Bytes body = keystream_wrap(digest_span(ss), "hybrid-enc", plaintext);
    Digest tag = tag_of(ss, eph, body);
    Bytes out = eph;
    append(out, digest_span(tag));
    append(out, body);
    return out;
}

Bytes hybrid_decrypt(const Scalar& priv, ByteSpan ciphertext) {
    if (ciphertext.size() < 65) fail(Err::Decode, "hybrid ciphertext too short");
    auto E = decode_point(ciphertext.first(33));
    if (!E || E->inf) fail(Err::Decode, "bad ephemeral point");
    if (priv.is_zero()) fail(Err::Precondition, "zero private key");
    Digest ss = shared_secret(mul(priv, *E));
    ByteSpan tag = ciphertext.subspan(33, 32);
    ByteSpan body = ciphertext.subspan(65);
    Digest expect = tag_of(ss, ciphertext.first(33), body);
    if (!equal_bytes(tag, digest_span(expect)))
        fail(Err::Confidentiality, "authentication tag mismatch");
    return keystream_wrap(digest_span(ss), "hybrid-enc", body);
}

} // namespace evauth
