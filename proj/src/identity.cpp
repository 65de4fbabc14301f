#include "evauth/identity.hpp"

#include "evauth/codec.hpp"
#include "evauth/errors.hpp"
#include "evauth/hash.hpp"

#include <algorithm>

namespace evauth {
namespace identity {

using namespace curve;

namespace {
constexpr std::string_view kPrefix = "did:evauth:";
}

std::string make_did(const Point& pub, ByteSpan salt) {
    if (pub.inf) fail(Err::Precondition, "identity needs an affine key");
    Digest d = hash_parts(encode_point(pub), salt);
    return std::string(kPrefix) + to_hex(digest_span(d));
}

bool looks_like_did(std::string_view s) {
    if (s.size() != kPrefix.size() + 64 || s.substr(0, kPrefix.size()) != kPrefix) return false;
    return std::all_of(s.begin() + kPrefix.size(), s.end(), [](char c) {
        return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
    });
}

DidDocument make_document(const Point& pub, Rng& rng) {
    DidDocument doc;
    doc.salt = rng.bytes(16);
    doc.pub = pub;
    doc.did = make_did(pub, doc.salt);
    return doc;
}

Bytes encode_document(const DidDocument& doc) {
    FieldWriter w;
    w.field(to_bytes(doc.did)).field(encode_point(doc.pub)).field(doc.salt);
    return w.take();
}

DidDocument decode_document(ByteSpan b) {
    FieldReader r(b);
    DidDocument doc;
    doc.did = to_string(r.field());
    auto pub = decode_point(r.field());
    doc.salt = r.field();
    r.done();
    if (!pub || pub->inf) fail(Err::Decode, "bad document key");
    if (!looks_like_did(doc.did)) fail(Err::Decode, "bad document identifier");
    doc.pub = *pub;
    if (doc.did != make_did(doc.pub, doc.salt)) fail(Err::Decode, "identifier does not match key");
    return doc;
}

Digest chain_step(const Digest& prev, ByteSpan record) {
    return hash_parts(digest_span(prev), record);
}

void Registry::add(const DidDocument& doc) {
    if (by_did_.count(doc.did)) fail(Err::Input, "identifier already registered");
    Bytes rec = encode_document(doc);
    chain_ = chain_step(chain_, rec);
    records_.push_back(std::move(rec));
    by_did_.emplace(doc.did, doc);
}

std::optional<DidDocument> Registry::resolve(std::string_view did) const {
    auto it = by_did_.find(did);
    if (it == by_did_.end()) return std::nullopt;
    return it->second;
}

Bytes Registry::serialize() const {
    FieldWriter w;
    w.field_u32(static_cast<std::uint32_t>(records_.size()));
    for (const Bytes& rec : records_) w.field(rec);
    w.field(digest_span(chain_));
    return w.take();
}

Registry Registry::deserialize(ByteSpan payload) {
    FieldReader r(payload);
    Registry reg;
    std::uint32_t count = r.field_u32();
    for (std::uint32_t i = 0; i < count; ++i) {
        Bytes rec = r.field();
        DidDocument doc = decode_document(rec);
        if (reg.by_did_.count(doc.did)) fail(Err::Storage, "duplicate record in log");
        reg.chain_ = chain_step(reg.chain_, rec);
        reg.records_.push_back(std::move(rec));
        reg.by_did_.emplace(doc.did, doc);
    }
    Bytes stored = r.field();
    r.done();
    if (!equal_bytes(stored, digest_span(reg.chain_)))
        fail(Err::Storage, "registry chain mismatch");
    return reg;
}

std::string canonical_body(const CredentialBody& body) {
    auto check_text = [](std::string_view s, bool is_key) {
        for (char c : s) {
            if (c == '\n') fail(Err::Input, "newline in credential field");
            if (is_key && c == '=') fail(Err::Input, "'=' in attribute key");
        }
    };
    check_text(body.issuer_did, false);
    check_text(body.subject_did, false);

    auto attrs = body.attrs;
    std::sort(attrs.begin(), attrs.end());
    for (std::size_t i = 0; i < attrs.size(); ++i) {
        check_text(attrs[i].first, true);
        check_text(attrs[i].second, false);
        if (i && attrs[i].first == attrs[i - 1].first)
            fail(Err::Input, "duplicate attribute key");
    }

    std::string out = "cred:1\n";
    out += "issuer:" + body.issuer_did + "\n";
    out += "subject:" + body.subject_did + "\n";
    out += "issued:" + std::to_string(body.issued_at) + "\n";
    for (const auto& [k, v] : attrs) out += "attr:" + k + "=" + v + "\n";
    return out;
}

Bytes encode_body(const CredentialBody& body) {
    FieldWriter w;
    w.field(to_bytes(body.issuer_did)).field(to_bytes(body.subject_did)).field_u64(body.issued_at);
    w.field_u32(static_cast<std::uint32_t>(body.attrs.size()));
    for (const auto& [k, v] : body.attrs) w.field(to_bytes(k)).field(to_bytes(v));
    return w.take();
}

CredentialBody decode_body(ByteSpan b) {
    FieldReader r(b);
    CredentialBody body;
    body.issuer_did = to_string(r.field());
    body.subject_did = to_string(r.field());
    body.issued_at = r.field_u64();
    std::uint32_t n = r.field_u32();
    if (n > 1024) fail(Err::Decode, "too many attributes");
    for (std::uint32_t i = 0; i < n; ++i) {
        std::string k = to_string(r.field());
        std::string v = to_string(r.field());
        body.attrs.emplace_back(std::move(k), std::move(v));
    }
    r.done();
    return body;
}

Digest credential_digest(const CredentialBody& body, const Point& subject_pub, ByteSpan nonce) {
    if (nonce.size() != 32) fail(Err::Precondition, "credential nonce must be 32 bytes");
    return hash_parts(to_bytes(canonical_body(body)), encode_point(subject_pub), nonce);
}

SignedCredential issue_credential(const CredentialBody& body, const Point& subject_pub,
                                  const Scalar& issuer_priv, Rng& rng) {
    SignedCredential vc;
    vc.body = body;
    vc.nonce = rng.bytes(32);
    vc.sig = sign_digest(credential_digest(body, subject_pub, vc.nonce), issuer_priv);
    return vc;
}

bool verify_credential(const SignedCredential& vc, const Point& subject_pub,
                       const Point& issuer_pub) {
    if (vc.nonce.size() != 32) return false;
    return verify_digest(credential_digest(vc.body, subject_pub, vc.nonce), issuer_pub, vc.sig);
}

Digest credential_hash_value(const SignedCredential& vc, const Point& subject_pub) {
    return credential_digest(vc.body, subject_pub, vc.nonce);
}

Bytes encode_credential(const SignedCredential& vc) {
    FieldWriter w;
    w.field(to_bytes(vc.body.issuer_did))
        .field(to_bytes(vc.body.subject_did))
        .field_u64(vc.body.issued_at)
        .field_u32(static_cast<std::uint32_t>(vc.body.attrs.size()));
    for (const auto& [k, v] : vc.body.attrs) w.field(to_bytes(k)).field(to_bytes(v));
    w.field(vc.nonce).field(encode_signature(vc.sig));
    return w.take();
}

SignedCredential decode_credential(ByteSpan b) {
    FieldReader r(b);
    SignedCredential vc;
    vc.body.issuer_did = to_string(r.field());
    vc.body.subject_did = to_string(r.field());
    vc.body.issued_at = r.field_u64();
    std::uint32_t n = r.field_u32();
    if (n > 1024) fail(Err::Decode, "too many attributes");
    for (std::uint32_t i = 0; i < n; ++i) {
        std::string k = to_string(r.field());
        std::string v = to_string(r.field());
        vc.body.attrs.emplace_back(std::move(k), std::move(v));
    }
    vc.nonce = r.field();
    auto sig = decode_signature(r.field());
    r.done();
    if (vc.nonce.size() != 32) fail(Err::Decode, "bad credential nonce");
    if (!sig) fail(Err::Decode, "bad credential signature");
    vc.sig = *sig;
    return vc;
}

zkp::Statement credential_statement(const SignedCredential& vc, const Point& subject_pub,
                                    const Point& issuer_pub) {
    return zkp::possession_statement(credential_hash_value(vc, subject_pub), vc.sig.R, issuer_pub);
}

zkp::Witness credential_witness(const SignedCredential& vc, const Point& subject_pub) {
    return zkp::possession_witness(credential_hash_value(vc, subject_pub), vc.sig);
}

} // namespace identity
} // namespace evauth
