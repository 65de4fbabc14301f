#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evauth {

using Bytes = std::vector<std::uint8_t>;
using ByteSpan = std::span<const std::uint8_t>;

Bytes to_bytes(std::string_view s);
std::string to_string(ByteSpan b);

std::string to_hex(ByteSpan b);
Bytes from_hex(std::string_view hex); // throws std::invalid_argument

void append(Bytes& out, ByteSpan more);
Bytes concat(std::initializer_list<ByteSpan> parts);

void put_be32(Bytes& out, std::uint32_t v);
void put_be64(Bytes& out, std::uint64_t v);
std::uint32_t read_be32(const std::uint8_t* p);
std::uint64_t read_be64(const std::uint8_t* p);

bool equal_bytes(ByteSpan a, ByteSpan b);

} // namespace evauth
