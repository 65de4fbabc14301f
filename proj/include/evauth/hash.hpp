#pragma once

#include <initializer_list>

#include "evauth/sha256.hpp"

namespace evauth {

// Digest over a part list. Every part is prefixed with its 32-bit big-endian
// length, so distinct part lists can never collide by concatenation.
Digest hash_parts(std::initializer_list<ByteSpan> parts);
Digest hash_parts(ByteSpan a);
Digest hash_parts(ByteSpan a, ByteSpan b);
Digest hash_parts(ByteSpan a, ByteSpan b, ByteSpan c);
Digest hash_parts(ByteSpan a, ByteSpan b, ByteSpan c, ByteSpan d);

// XOR of data with the keystream hash_parts(key, label, be64(block index)),
// block by block. Self-inverse for fixed key and label.
Bytes keystream_wrap(ByteSpan key, std::string_view label, ByteSpan data);

} // namespace evauth
