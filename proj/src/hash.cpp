#include "evauth/hash.hpp"

namespace evauth {

Digest hash_parts(std::initializer_list<ByteSpan> parts) {
    Sha256 h;
    Bytes len;
    len.reserve(4);
    for (const auto& p : parts) {
        len.clear();
        put_be32(len, static_cast<std::uint32_t>(p.size()));
        h.update(len);
        h.update(p);
    }
    return h.finish();
}

Digest hash_parts(ByteSpan a) {
    return hash_parts({a});
}

Digest hash_parts(ByteSpan a, ByteSpan b) {
    return hash_parts({a, b});
}

Digest hash_parts(ByteSpan a, ByteSpan b, ByteSpan c) {
    return hash_parts({a, b, c});
}

Digest hash_parts(ByteSpan a, ByteSpan b, ByteSpan c, ByteSpan d) {
    return hash_parts({a, b, c, d});
}

Bytes keystream_wrap(ByteSpan key, std::string_view label, ByteSpan data) {
    Bytes out(data.begin(), data.end());
    Bytes label_b = to_bytes(label);
    std::uint64_t block = 0;
    for (std::size_t off = 0; off < out.size(); off += 32, ++block) {
        Bytes ctr;
        put_be64(ctr, block);
        Digest ks = hash_parts(key, label_b, ctr);
        std::size_t n = std::min<std::size_t>(32, out.size() - off);
        for (std::size_t i = 0; i < n; ++i) out[off + i] ^= ks[i];
    }
    return out;
}

} // namespace evauth
