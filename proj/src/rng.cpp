#include "evauth/rng.hpp"

#include <random>

#include "evauth/hash.hpp"

namespace evauth {

Rng::Rng(ByteSpan seed_material) {
    key_ = hash_parts(to_bytes("rng-seed"), seed_material);
}

Rng Rng::from_u64(std::uint64_t seed) {
    Bytes b;
    put_be64(b, seed);
    return Rng(b);
}

Rng Rng::system() {
    std::random_device rd;
    Bytes b;
    for (int i = 0; i < 8; ++i) put_be32(b, rd());
    return Rng(b);
}

void Rng::fill(std::uint8_t* out, std::size_t n) {
    while (n > 0) {
        if (avail_ == 0) {
            Bytes ctr;
            put_be64(ctr, counter_++);
            buf_ = hash_parts(digest_span(key_), to_bytes("rng-block"), ctr);
            avail_ = buf_.size();
        }
        std::size_t take = std::min(n, avail_);
        std::size_t start = buf_.size() - avail_;
        for (std::size_t i = 0; i < take; ++i) out[i] = buf_[start + i];
        avail_ -= take;
        out += take;
        n -= take;
    }
}

Bytes Rng::bytes(std::size_t n) {
    Bytes out(n);
    fill(out.data(), n);
    return out;
}

U256 Rng::u256() {
    std::uint8_t b[32];
    fill(b, 32);
    return U256::from_be_bytes(ByteSpan(b, 32));
}

std::uint64_t Rng::u64() {
    std::uint8_t b[8];
    fill(b, 8);
    return read_be64(b);
}

Rng Rng::derive(std::string_view label) const {
    Digest d = hash_parts(digest_span(key_), to_bytes("rng-derive"), to_bytes(label));
    return Rng(digest_span(d));
}

} // namespace evauth
