#include "evauth/messages.hpp"

#include "evauth/codec.hpp"
#include "evauth/errors.hpp"

namespace evauth {
namespace msg {

using namespace curve;

const char* tag_name(std::uint8_t tag) {
    switch (tag) {
        case kTagRev1: return "REV1";
        case kTagRev2: return "REV2";
        case kTagA1: return "A1";
        case kTagA2: return "A2";
        case kTagA3: return "A3";
        case kTagA4: return "A4";
        case kTagA5: return "A5";
        case kTagA6: return "A6";
        default: return "?";
    }
}

namespace {

void want_size(const Bytes& b, std::size_t n, const char* what) {
    if (b.size() != n) fail(Err::Decode, std::string(what) + " has wrong size");
}

Point read_point(FieldReader& r, const char* what) {
    auto p = decode_point(r.field());
    if (!p || p->inf) fail(Err::Decode, std::string(what) + " is not a valid key");
    return *p;
}

} // namespace

Bytes encode(const RegisterRequest& m) {
    FieldWriter w(kTagRev1);
    w.field(to_bytes(m.role)).field(encode_point(m.pub)).field(m.delta).field(to_bytes(m.lai));
    return w.take();
}

RegisterRequest decode_register_request(ByteSpan b) {
    FieldReader r(kTagRev1, b);
    RegisterRequest m;
    m.role = to_string(r.field());
    m.pub = read_point(r, "registration key");
    m.delta = r.field();
    m.lai = to_string(r.field());
    r.done();
    if (m.role != kRoleUser && m.role != kRoleStation) fail(Err::Decode, "unknown role");
    if (m.role == kRoleUser && m.delta.size() != 32) fail(Err::Decode, "bad user secret digest");
    if (m.role == kRoleStation && !m.delta.empty()) fail(Err::Decode, "stations carry no secret digest");
    return m;
}

Bytes encode(const RegisterResponse& m) {
    FieldWriter w(kTagRev2);
    w.field(m.doc).field(m.vc).field(m.secret).field(m.pdid);
    w.field_u32(static_cast<std::uint32_t>(m.shadows.size()));
    for (const Bytes& s : m.shadows) w.field(s);
    w.field(encode_point(m.usp_pub));
    return w.take();
}

RegisterResponse decode_register_response(ByteSpan b) {
    FieldReader r(kTagRev2, b);
    RegisterResponse m;
    m.doc = r.field();
    m.vc = r.field();
    m.secret = r.field();
    m.pdid = r.field();
    std::uint32_t n = r.field_u32();
    if (n > 64) fail(Err::Decode, "too many spare pseudonyms");
    for (std::uint32_t i = 0; i < n; ++i) {
        Bytes s = r.field();
        want_size(s, 32, "spare pseudonym");
        m.shadows.push_back(std::move(s));
    }
    m.usp_pub = read_point(r, "provider key");
    r.done();
    if (!m.pdid.empty()) want_size(m.pdid, 32, "pseudonym");
    return m;
}

Bytes encode(const ChargeRequest& m) {
    FieldWriter w(kTagA1);
    w.field(m.pdid).field(to_bytes(m.request)).field(to_bytes(m.proof_request));
    return w.take();
}

ChargeRequest decode_charge_request(ByteSpan b) {
    FieldReader r(kTagA1, b);
    ChargeRequest m;
    m.pdid = r.field();
    m.request = to_string(r.field());
    m.proof_request = to_string(r.field());
    r.done();
    want_size(m.pdid, 32, "pseudonym");
    return m;
}

Bytes encode(const StationCredential& m) {
    FieldWriter w(kTagA2);
    w.field(m.station_doc).field(m.station_vc).field(to_bytes(m.proof_request));
    return w.take();
}

StationCredential decode_station_credential(ByteSpan b) {
    FieldReader r(kTagA2, b);
    StationCredential m;
    m.station_doc = r.field();
    m.station_vc = r.field();
    m.proof_request = to_string(r.field());
    r.done();
    return m;
}

Bytes encode(const CredentialProof& m) {
    FieldWriter w(kTagA3);
    w.field(m.pdid).field(m.hash_value).field(m.proof).field(m.n_u).field(m.el).field(m.v1);
    return w.take();
}

CredentialProof decode_credential_proof(ByteSpan b) {
    FieldReader r(kTagA3, b);
    CredentialProof m;
    m.pdid = r.field();
    m.hash_value = r.field();
    m.proof = r.field();
    m.n_u = r.field();
    m.el = r.field();
    m.v1 = r.field();
    r.done();
    want_size(m.pdid, 32, "pseudonym");
    want_size(m.hash_value, 32, "credential digest");
    want_size(m.proof, 98, "possession proof");
    want_size(m.n_u, 32, "user nonce");
    want_size(m.v1, 32, "user check value");
    return m;
}

Bytes encode(const AuthRelay& m) {
    FieldWriter w(kTagA4);
    w.field(m.a3).field(m.pdid).field(to_bytes(m.did_cs)).field(m.n_cs);
    w.field(to_bytes(m.lai_cs)).field(m.v2);
    return w.take();
}

AuthRelay decode_auth_relay(ByteSpan b) {
    FieldReader r(kTagA4, b);
    AuthRelay m;
    m.a3 = r.field();
    m.pdid = r.field();
    m.did_cs = to_string(r.field());
    m.n_cs = r.field();
    m.lai_cs = to_string(r.field());
    m.v2 = r.field();
    r.done();
    want_size(m.pdid, 32, "pseudonym");
    want_size(m.n_cs, 32, "station nonce");
    want_size(m.v2, 32, "station check value");
    return m;
}

Bytes encode(const KeyDelivery& m) {
    FieldWriter w(kTagA5);
    w.field(m.sk_cs).field(m.v3).field(m.user_env);
    return w.take();
}

KeyDelivery decode_key_delivery(ByteSpan b) {
    FieldReader r(kTagA5, b);
    KeyDelivery m;
    m.sk_cs = r.field();
    m.v3 = r.field();
    m.user_env = r.field();
    r.done();
    want_size(m.sk_cs, 32, "masked station key");
    want_size(m.v3, 32, "station confirmation");
    return m;
}

Bytes encode(const UserKeyDelivery& m) {
    FieldWriter w(kTagA6);
    w.field(m.user_env);
    return w.take();
}

UserKeyDelivery decode_user_key_delivery(ByteSpan b) {
    FieldReader r(kTagA6, b);
    UserKeyDelivery m;
    m.user_env = r.field();
    r.done();
    return m;
}

} // namespace msg
} // namespace evauth
