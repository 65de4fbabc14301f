#pragma once

#include <array>
#include <cstdint>

#include "evauth/bytes.hpp"

namespace evauth {

using Digest = std::array<std::uint8_t, 32>;

class Sha256 {
public:
    Sha256();
    void update(ByteSpan data);
    Digest finish();
    static Digest digest(ByteSpan data);

private:
    void compress(const std::uint8_t block[64]);

    std::uint32_t state_[8];
    std::uint8_t buf_[64];
    std::size_t buf_len_ = 0;
    std::uint64_t total_ = 0;
};

ByteSpan digest_span(const Digest& d);
Bytes digest_bytes(const Digest& d);
Digest digest_from(ByteSpan b); // exactly 32 bytes

} // namespace evauth
