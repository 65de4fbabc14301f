#include "evauth/storage.hpp"

#include "evauth/errors.hpp"
#include "evauth/sha256.hpp"

#include <cstdio>
#include <fstream>

namespace evauth {

Bytes wrap_state(const char* magic8, std::uint8_t version, ByteSpan payload) {
    Bytes out(reinterpret_cast<const std::uint8_t*>(magic8),
              reinterpret_cast<const std::uint8_t*>(magic8) + 8);
    out.push_back(version);
    append(out, payload);
    Digest sum = Sha256::digest(out);
    append(out, digest_span(sum));
    return out;
}

Bytes unwrap_state(const char* magic8, std::uint8_t version, ByteSpan file) {
    if (file.size() < 8 + 1 + 32) fail(Err::Storage, "state file too short");
    if (!equal_bytes(file.first(8), ByteSpan(reinterpret_cast<const std::uint8_t*>(magic8), 8)))
        fail(Err::Storage, "state file magic mismatch");
    if (file[8] != version) fail(Err::Storage, "state file version mismatch");
    ByteSpan body = file.first(file.size() - 32);
    Digest sum = Sha256::digest(body);
    if (!equal_bytes(file.last(32), digest_span(sum)))
        fail(Err::Storage, "state file checksum mismatch");
    return Bytes(body.begin() + 9, body.end());
}

void write_file_atomic(const std::filesystem::path& path, ByteSpan data) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) fail(Err::Storage, "cannot open " + tmp.string());
        f.write(reinterpret_cast<const char*>(data.data()),
                static_cast<std::streamsize>(data.size()));
        if (!f) fail(Err::Storage, "short write to " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) fail(Err::Storage, "rename failed: " + ec.message());
}

Bytes read_file(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail(Err::NotFound, "cannot open " + path.string());
    Bytes out((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    if (f.bad()) fail(Err::Storage, "read failed: " + path.string());
    return out;
}

} // namespace evauth
