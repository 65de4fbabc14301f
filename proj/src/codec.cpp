#include "evauth/codec.hpp"

#include "evauth/errors.hpp"

namespace evauth {

FieldWriter& FieldWriter::field(ByteSpan b) {
    put_be32(out_, static_cast<std::uint32_t>(b.size()));
    append(out_, b);
    return *this;
}

FieldWriter& FieldWriter::field_u32(std::uint32_t v) {
    Bytes tmp;
    put_be32(tmp, v);
    return field(tmp);
}

FieldWriter& FieldWriter::field_u64(std::uint64_t v) {
    Bytes tmp;
    put_be64(tmp, v);
    return field(tmp);
}

FieldReader::FieldReader(std::uint8_t expected_tag, ByteSpan wire) : wire_(wire) {
    if (wire_.empty()) fail(Err::Decode, "empty message");
    if (wire_[0] != expected_tag) fail(Err::Decode, "unexpected message tag");
    pos_ = 1;
}

Bytes FieldReader::field() {
    if (wire_.size() - pos_ < 4) fail(Err::Decode, "field length missing");
    std::uint32_t len = read_be32(wire_.data() + pos_);
    pos_ += 4;
    if (wire_.size() - pos_ < len) fail(Err::Decode, "field extends past end");
    Bytes out(wire_.begin() + pos_, wire_.begin() + pos_ + len);
    pos_ += len;
    return out;
}

std::uint32_t FieldReader::field_u32() {
    Bytes b = field();
    if (b.size() != 4) fail(Err::Decode, "expected 4-byte field");
    return read_be32(b.data());
}

std::uint64_t FieldReader::field_u64() {
    Bytes b = field();
    if (b.size() != 8) fail(Err::Decode, "expected 8-byte field");
    return read_be64(b.data());
}

void FieldReader::done() const {
    if (pos_ != wire_.size()) fail(Err::Decode, "trailing bytes");
}

std::optional<std::uint8_t> peek_tag(ByteSpan wire) {
    if (wire.empty()) return std::nullopt;
    return wire[0];
}

} // namespace evauth
