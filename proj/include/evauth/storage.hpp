#pragma once
#include "evauth/bytes.hpp"

#include <filesystem>

namespace evauth {

// Versioned state container: magic(8) || version(1) || payload || sha256 of
// everything before. unwrap_state names corruption as a storage error.
Bytes wrap_state(const char* magic8, std::uint8_t version, ByteSpan payload);
Bytes unwrap_state(const char* magic8, std::uint8_t version, ByteSpan file);

// Write via temp file + rename so a crash never leaves a half-written state.
void write_file_atomic(const std::filesystem::path& path, ByteSpan data);
Bytes read_file(const std::filesystem::path& path); // not-found / storage errors

} // namespace evauth
