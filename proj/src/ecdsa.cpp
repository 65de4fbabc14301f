#include "evauth/ecdsa.hpp"

namespace evauth {

using namespace curve;

KeyPair keygen(Rng& rng) {
    Scalar d = s_random_nonzero(rng);
    return KeyPair{d, mul_base(d)};
}

KeyPair keypair_from_priv(const Scalar& priv) {
    if (priv.is_zero()) fail(Err::Precondition, "zero private key");
    return KeyPair{priv, mul_base(priv)};
}

Signature sign_digest(const Digest& digest, const Scalar& priv) {
    if (priv.is_zero()) fail(Err::Precondition, "zero private key");
    Scalar e = s_from_digest(digest_span(digest));
    for (std::uint32_t ctr = 0;; ++ctr) {
        Bytes ctr_b;
        put_be32(ctr_b, ctr);
        Digest kd = hash_parts(s_bytes(priv), digest_span(digest), ctr_b);
        Scalar k = s_from_digest(digest_span(kd));
        if (k.is_zero()) continue;
        Point R = mul_base(k);
        Scalar r = s_reduce(R.x);
        if (r.is_zero()) continue;
        Scalar s = s_mul(s_inv(k), s_add(e, s_mul(r, priv)));
        if (s.is_zero()) continue;
        return Signature{R, r, s};
    }
}

bool verify_rs(ByteSpan digest, const Point& pub, const U256& r, const U256& s) {
    const U256& n = group().order;
    if (r.is_zero() || s.is_zero()) return false;
    if (!u256_less(r, n) || !u256_less(s, n)) return false;
    if (pub.inf || !on_curve(pub)) return false;
    Scalar e = s_from_digest(digest);
    Scalar si = s_inv(Scalar{s});
    Scalar u1 = s_mul(e, si);
    Scalar u2 = s_mul(Scalar{r}, si);
    Point Rp = mul_add(u1, group().generator, u2, pub);
    if (Rp.inf) return false;
    return s_reduce(Rp.x).v == r;
}

bool verify_digest(const Digest& digest, const Point& pub, const Signature& sig) {
    if (sig.R.inf || !on_curve(sig.R)) return false;
    if (s_reduce(sig.R.x) != sig.r) return false;
    return verify_rs(digest_span(digest), pub, sig.r.v, sig.s.v);
}

Signature sign_message(ByteSpan m, const Scalar& priv) {
    return sign_digest(hash_parts(m), priv);
}

bool verify_message(ByteSpan m, const Point& pub, const Signature& sig) {
    return verify_digest(hash_parts(m), pub, sig);
}

Bytes encode_signature(const Signature& sig) {
    Bytes out = encode_point(sig.R);
    append(out, s_bytes(sig.s));
    return out;
}

std::optional<Signature> decode_signature(ByteSpan b) {
    if (b.size() != 65) return std::nullopt;
    auto R = decode_point(b.first(33));
    if (!R || R->inf || !on_curve(*R)) return std::nullopt;
    U256 s = U256::from_be_bytes(b.subspan(33));
    if (s.is_zero() || !u256_less(s, group().order)) return std::nullopt;
    Scalar r = s_reduce(R->x);
    if (r.is_zero()) return std::nullopt;
    return Signature{*R, r, Scalar{s}};
}

} // namespace evauth
