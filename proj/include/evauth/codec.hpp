#pragma once
#include "evauth/bytes.hpp"

#include <optional>

namespace evauth {

// Length-prefixed field stream. Wire form: optional 1-byte tag, then each
// field as be32 length followed by the bytes. Decoding is strict: bounds are
// checked and trailing bytes are an error.
class FieldWriter {
public:
    FieldWriter() = default;
    explicit FieldWriter(std::uint8_t tag) { out_.push_back(tag); }

    FieldWriter& field(ByteSpan b);
    FieldWriter& field_u32(std::uint32_t v);
    FieldWriter& field_u64(std::uint64_t v);

    Bytes take() { return std::move(out_); }

private:
    Bytes out_;
};

class FieldReader {
public:
    // Tagless stream.
    explicit FieldReader(ByteSpan wire) : wire_(wire) {}
    // Tagged stream; decode-error if the first byte is not expected_tag.
    FieldReader(std::uint8_t expected_tag, ByteSpan wire);

    Bytes field();
    std::uint32_t field_u32();
    std::uint64_t field_u64();
    // Throws decode-error unless the stream is fully consumed.
    void done() const;

    bool empty() const { return pos_ == wire_.size(); }

private:
    ByteSpan wire_;
    std::size_t pos_ = 0;
};

// First byte of a tagged stream, if any.
std::optional<std::uint8_t> peek_tag(ByteSpan wire);

} // namespace evauth
