#include "evauth/protocol.hpp"

#include "evauth/codec.hpp"
#include "evauth/errors.hpp"
#include "evauth/hybrid.hpp"
#include "evauth/storage.hpp"

#include <algorithm>

namespace evauth {
namespace protocol {

using namespace curve;

namespace {

constexpr const char* kWalletMagic = "EVAUTHWL";
constexpr const char* kCsMagic = "EVAUTHCS";
constexpr const char* kUspMagic = "EVAUTHDB";
constexpr const char* kRegistryMagic = "EVAUTHRG";

Bytes xor_bytes(ByteSpan a, ByteSpan b) {
    if (a.size() != b.size()) fail(Err::Precondition, "xor operands differ in size");
    Bytes out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
    return out;
}

Bytes d2b(const Digest& d) { return Bytes(d.begin(), d.end()); }

Digest b2d(ByteSpan b) {
    if (b.size() != 32) fail(Err::Precondition, "digest must be 32 bytes");
    Digest d;
    std::copy(b.begin(), b.end(), d.begin());
    return d;
}

const zkp::Crs& possession_crs() {
    static const zkp::Crs crs = zkp::setup(std::string(kPossessionRelation)).crs;
    return crs;
}

// 98-byte possession proof: signature point R, then the sigma proof.
Bytes encode_possession(const Point& R, const zkp::Proof& pr) {
    return concat({encode_point(R), zkp::encode_proof(pr)});
}

struct Possession {
    Point R;
    zkp::Proof pr;
};

Possession decode_possession(ByteSpan wire) {
    if (wire.size() != 98) fail(Err::Decode, "bad possession proof size");
    auto R = decode_point(wire.first(33));
    if (!R || R->inf) fail(Err::Decode, "bad possession proof point");
    auto pr = zkp::decode_proof(wire.subspan(33));
    if (!pr) fail(Err::Decode, "bad possession proof body");
    return Possession{*R, *pr};
}

void put_shadows(FieldWriter& w, const std::vector<Bytes>& shadows,
                 const std::vector<std::uint8_t>& used) {
    if (shadows.size() != used.size()) fail(Err::Precondition, "shadow bookkeeping out of step");
    w.field_u32(static_cast<std::uint32_t>(shadows.size()));
    for (const Bytes& s : shadows) w.field(s);
    w.field(used);
}

void get_shadows(FieldReader& r, std::vector<Bytes>& shadows, std::vector<std::uint8_t>& used) {
    std::uint32_t n = r.field_u32();
    if (n > 1024) fail(Err::Decode, "too many spare pseudonyms");
    for (std::uint32_t i = 0; i < n; ++i) shadows.push_back(r.field());
    used = r.field();
    if (used.size() != shadows.size()) fail(Err::Decode, "shadow flags out of step");
}

} // namespace

Bytes user_delta(std::string_view biometric, std::string_view password, OpCounters* c) {
    return d2b(counted_hash(c, HashClass::Construct, "delta",
                            {to_bytes(biometric), to_bytes(password)}));
}

// ---------------------------------------------------------------- enrollment

UspState usp_init(Rng& rng, identity::Registry& reg) {
    UspState usp;
    KeyPair keys = keygen(rng);
    usp.priv = keys.priv;
    usp.doc = identity::make_document(keys.pub, rng);
    reg.add(usp.doc);
    return usp;
}

Point UspState::pub() const { return doc.pub; }

UspUserRecord* UspState::find_user_did(std::string_view did) {
    for (auto& u : users)
        if (u.did == did) return &u;
    return nullptr;
}

UspStationRecord* UspState::find_station(std::string_view did) {
    for (auto& s : stations)
        if (s.did == did) return &s;
    return nullptr;
}

msg::RegisterResponse usp_register(UspState& usp, identity::Registry& reg,
                                   const msg::RegisterRequest& req, Rng& rng,
                                   std::uint64_t issued_at, std::uint32_t shadow_count) {
    msg::RegisterResponse resp;
    identity::DidDocument doc = identity::make_document(req.pub, rng);
    reg.add(doc);
    resp.doc = identity::encode_document(doc);
    resp.usp_pub = usp.doc.pub;

    identity::CredentialBody body;
    body.issuer_did = usp.doc.did;
    body.subject_did = doc.did;
    body.issued_at = issued_at;

    if (req.role == msg::kRoleUser) {
        if (req.delta.size() != 32) fail(Err::Input, "registration needs the secret digest");
        body.attrs = {{"registeredEvUser", "true"}};
        identity::SignedCredential vc = identity::issue_credential(body, req.pub, usp.priv, rng);
        resp.vc = identity::encode_credential(vc);

        UspUserRecord rec;
        rec.did = doc.did;
        rec.pub = req.pub;
        rec.k_user = rng.bytes(32);
        rec.pdid_cur = rng.bytes(32);
        for (std::uint32_t i = 0; i < shadow_count; ++i) rec.shadows.push_back(rng.bytes(32));
        rec.shadow_used.assign(rec.shadows.size(), 0);
        rec.expected_hash_value = d2b(identity::credential_hash_value(vc, req.pub));
        rec.vc_body = body;

        resp.secret = keystream_wrap(req.delta, "k-user", rec.k_user);
        resp.pdid = rec.pdid_cur;
        resp.shadows = rec.shadows;
        usp.users.push_back(std::move(rec));
    } else if (req.role == msg::kRoleStation) {
        if (req.lai.empty()) fail(Err::Input, "stations must register a location");
        body.attrs = {{"chargingStation", "true"}};
        identity::SignedCredential vc = identity::issue_credential(body, req.pub, usp.priv, rng);
        resp.vc = identity::encode_credential(vc);

        UspStationRecord rec;
        rec.did = doc.did;
        rec.pub = req.pub;
        rec.k_cs = rng.bytes(32);
        rec.lai = req.lai;
        resp.secret = rec.k_cs;
        usp.stations.push_back(std::move(rec));
    } else {
        fail(Err::Input, "unknown registration role");
    }
    return resp;
}

UserWallet user_enroll(const msg::RegisterResponse& resp, const KeyPair& keys,
                       std::string_view biometric, std::string_view password) {
    UserWallet w;
    w.doc = identity::decode_document(resp.doc);
    if (!(w.doc.pub == keys.pub)) fail(Err::Input, "enrollment response is for a different key");
    identity::SignedCredential vc = identity::decode_credential(resp.vc);
    if (vc.body.subject_did != w.doc.did ||
        !identity::verify_credential(vc, keys.pub, resp.usp_pub))
        fail(Err::PeerAuth, "enrollment credential invalid");
    if (resp.pdid.size() != 32) fail(Err::Input, "enrollment response lacks a pseudonym");
    if (resp.secret.size() != 32) fail(Err::Input, "enrollment response lacks the wrapped key");

    w.priv = keys.priv;
    w.usp_pub = resp.usp_pub;
    Bytes delta = user_delta(biometric, password);
    w.delta_check = d2b(hash_parts(delta, to_bytes("delta-chk")));
    w.k_star = resp.secret;
    w.pdid = resp.pdid;
    w.shadows = resp.shadows;
    w.shadow_used.assign(w.shadows.size(), 0);
    w.vc = resp.vc;
    return w;
}

CsState station_enroll(const msg::RegisterResponse& resp, const KeyPair& keys,
                       std::string_view lai) {
    CsState s;
    s.doc = identity::decode_document(resp.doc);
    if (!(s.doc.pub == keys.pub)) fail(Err::Input, "enrollment response is for a different key");
    identity::SignedCredential vc = identity::decode_credential(resp.vc);
    if (vc.body.subject_did != s.doc.did ||
        !identity::verify_credential(vc, keys.pub, resp.usp_pub))
        fail(Err::PeerAuth, "enrollment credential invalid");
    if (resp.secret.size() != 32) fail(Err::Input, "enrollment response lacks the station key");
    s.priv = keys.priv;
    s.usp_pub = resp.usp_pub;
    s.k_cs = resp.secret;
    s.lai = std::string(lai);
    s.vc = resp.vc;
    return s;
}

// -------------------------------------------------------------- user session

UserSession UserSession::begin(UserWallet& w, std::string lai, std::string_view biometric,
                               std::string_view password, Rng& rng, CheckToggles toggles) {
    UserSession s(w, rng);
    s.toggles_ = toggles;
    s.lai_ = std::move(lai);
    if (s.lai_.empty()) fail(Err::Input, "session needs a location");

    Bytes delta = user_delta(biometric, password, &s.counters_);
    Digest gate = counted_hash(&s.counters_, HashClass::Check, "delta-gate",
                               {delta, to_bytes("delta-chk")});
    if (!equal_bytes(d2b(gate), w.delta_check))
        fail(Err::LocalAuth, "biometric or password rejected");

    s.k_ = keystream_wrap(delta, "k-user", w.k_star);
    ++s.counters_.wrap_ops;

    if (!w.pdid_uncertain) {
        s.pdid_used_ = w.pdid;
    } else {
        for (std::size_t i = 0; i < w.shadows.size(); ++i) {
            if (!w.shadow_used[i]) {
                s.shadow_idx_ = static_cast<int>(i);
                s.pdid_used_ = w.shadows[i];
                break;
            }
        }
        if (s.shadow_idx_ < 0)
            fail(Err::ReRegistrationRequired, "spare pseudonyms exhausted");
    }
    return s;
}

Bytes UserSession::a1() {
    if (stage_ != 0) fail(Err::ProtocolOrder, "request already sent");
    stage_ = 1;
    msg::ChargeRequest m;
    m.pdid = pdid_used_;
    m.request = std::string(msg::kChargeRequestLiteral);
    m.proof_request = std::string(msg::kStationProofRequest);
    return msg::encode(m);
}

Bytes UserSession::on_a2(ByteSpan a2_wire) {
    if (stage_ != 1) fail(Err::ProtocolOrder, "station reply out of order");
    msg::StationCredential a2 = msg::decode_station_credential(a2_wire);
    if (a2.proof_request != msg::kUserProofRequest)
        fail(Err::ProtocolOrder, "unexpected proof request");

    identity::DidDocument cs_doc = identity::decode_document(a2.station_doc);
    identity::SignedCredential cs_vc = identity::decode_credential(a2.station_vc);
    if (cs_vc.body.subject_did != cs_doc.did)
        fail(Err::PeerAuth, "station credential subject mismatch");
    bool certified = false;
    for (const auto& [k, v] : cs_vc.body.attrs)
        if (k == "chargingStation" && v == "true") certified = true;
    if (!certified) fail(Err::PeerAuth, "station credential lacks certification");
    if (toggles_.user_verify_station_vc) {
        ++counters_.check_hash["station-vc-digest"];
        ++counters_.verify_ops;
        if (!identity::verify_credential(cs_vc, cs_doc.pub, wallet_->usp_pub))
            fail(Err::PeerAuth, "station credential rejected");
    }

    identity::SignedCredential vc = identity::decode_credential(wallet_->vc);
    ++counters_.construct_hash["cred-digest"];
    Digest hv = identity::credential_hash_value(vc, wallet_->doc.pub);
    zkp::Statement st = zkp::possession_statement(hv, vc.sig.R, wallet_->usp_pub);
    zkp::Witness witness = zkp::possession_witness(hv, vc.sig);
    ++counters_.prove_ops;
    zkp::Proof pr = zkp::prove(possession_crs(), st, witness, *rng_);

    n_u_ = rng_->bytes(32);
    Digest el_key = counted_hash(&counters_, HashClass::Construct, "el-key", {k_, n_u_});
    Bytes el = keystream_wrap(d2b(el_key), "lai", to_bytes(lai_));
    ++counters_.wrap_ops;
    Digest v1 = counted_hash(&counters_, HashClass::Construct, "v1", {pdid_used_, n_u_, k_, el});

    // The pseudonym is burned the moment it goes on the wire.
    if (shadow_idx_ >= 0) wallet_->shadow_used[shadow_idx_] = 1;
    wallet_->pdid_uncertain = true;

    msg::CredentialProof a3;
    a3.pdid = pdid_used_;
    a3.hash_value = d2b(hv);
    a3.proof = encode_possession(vc.sig.R, pr);
    a3.n_u = n_u_;
    a3.el = std::move(el);
    a3.v1 = d2b(v1);
    stage_ = 2;
    return msg::encode(a3);
}

void UserSession::finish(ByteSpan a6_wire) {
    if (stage_ != 2) fail(Err::ProtocolOrder, "key delivery out of order");
    msg::UserKeyDelivery a6 = msg::decode_user_key_delivery(a6_wire);

    ++counters_.seal_ops;
    Bytes plain = hybrid_decrypt(wallet_->priv, a6.user_env);
    FieldReader r(plain);
    Bytes sk_user = r.field();
    Bytes v4 = r.field();
    Bytes n_star = r.field();
    Bytes vc_star = r.field();
    r.done();
    if (sk_user.size() != 32 || v4.size() != 32 || n_star.size() != 32)
        fail(Err::Decode, "malformed key envelope");

    Digest mask = counted_hash(&counters_, HashClass::Construct, "sk-user-mask",
                               {pdid_used_, n_u_, k_});
    Bytes sk = xor_bytes(sk_user, d2b(mask));
    Digest v4_want = counted_hash(&counters_, HashClass::Check, "v4", {sk_user, n_u_, k_});
    if (!equal_bytes(v4, d2b(v4_want))) fail(Err::Integrity, "user confirmation mismatch");

    Bytes n_new = keystream_wrap(k_, "n-new", n_star);
    ++counters_.wrap_ops;
    Bytes vc_new_bytes = keystream_wrap(k_, "vc-new", vc_star);
    ++counters_.wrap_ops;
    identity::SignedCredential vc_new = identity::decode_credential(vc_new_bytes);
    if (vc_new.nonce != n_new) fail(Err::Integrity, "reissued credential nonce mismatch");
    if (vc_new.body.subject_did != wallet_->doc.did)
        fail(Err::Integrity, "reissued credential subject mismatch");

    Digest rotated = counted_hash(&counters_, HashClass::Construct, "pdid-rotate",
                                  {pdid_used_, k_});
    wallet_->pdid = d2b(rotated);
    wallet_->vc = vc_new_bytes;
    wallet_->pdid_uncertain = false;
    session_key_ = std::move(sk);
    stage_ = 3;
}

const Bytes& UserSession::session_key() const {
    if (stage_ != 3) fail(Err::ProtocolOrder, "session key not established");
    return session_key_;
}

// ----------------------------------------------------------- station session

CsSession CsSession::begin(CsState& s, Rng& rng, CheckToggles toggles) {
    CsSession cs(s, rng);
    cs.toggles_ = toggles;
    return cs;
}

Bytes CsSession::on_a1(ByteSpan a1_wire) {
    if (stage_ != 0) fail(Err::ProtocolOrder, "charge request out of order");
    msg::ChargeRequest a1 = msg::decode_charge_request(a1_wire);
    if (a1.request != msg::kChargeRequestLiteral ||
        a1.proof_request != msg::kStationProofRequest)
        fail(Err::ProtocolOrder, "unexpected request literals");
    pdid_ = a1.pdid;
    stage_ = 1;

    msg::StationCredential a2;
    a2.station_doc = identity::encode_document(state_->doc);
    a2.station_vc = state_->vc;
    a2.proof_request = std::string(msg::kUserProofRequest);
    return msg::encode(a2);
}

Bytes CsSession::on_a3(ByteSpan a3_wire) {
    if (stage_ != 1) fail(Err::ProtocolOrder, "credential proof out of order");
    msg::CredentialProof a3 = msg::decode_credential_proof(a3_wire);

    if (toggles_.cs_verify_proof) {
        Possession p = decode_possession(a3.proof);
        zkp::Statement st =
            zkp::possession_statement(b2d(a3.hash_value), p.R, state_->usp_pub);
        ++counters_.proof_check_ops;
        if (!zkp::verify(possession_crs(), st, p.pr))
            fail(Err::UserAuth, "possession proof rejected");
    }

    n_cs_ = rng_->bytes(32);
    Digest v2 = counted_hash(&counters_, HashClass::Construct, "v2",
                             {to_bytes(state_->doc.did), n_cs_, state_->k_cs,
                              to_bytes(state_->lai)});

    msg::AuthRelay a4;
    a4.a3 = Bytes(a3_wire.begin(), a3_wire.end());
    a4.pdid = pdid_;
    a4.did_cs = state_->doc.did;
    a4.n_cs = n_cs_;
    a4.lai_cs = state_->lai;
    a4.v2 = d2b(v2);
    stage_ = 2;
    return msg::encode(a4);
}

Bytes CsSession::on_a5(ByteSpan a5_wire) {
    if (stage_ != 2) fail(Err::ProtocolOrder, "key delivery out of order");
    msg::KeyDelivery a5 = msg::decode_key_delivery(a5_wire);

    Digest mask = counted_hash(&counters_, HashClass::Construct, "sk-cs-mask",
                               {to_bytes(state_->doc.did), n_cs_, state_->k_cs});
    Bytes sk = xor_bytes(a5.sk_cs, d2b(mask));
    Digest v3_want = counted_hash(&counters_, HashClass::Check, "v3",
                                  {a5.sk_cs, n_cs_, state_->k_cs});
    if (!equal_bytes(a5.v3, d2b(v3_want)))
        fail(Err::Integrity, "station confirmation mismatch");

    session_key_ = std::move(sk);
    stage_ = 3;
    msg::UserKeyDelivery a6;
    a6.user_env = a5.user_env;
    return msg::encode(a6);
}

const Bytes& CsSession::session_key() const {
    if (stage_ != 3) fail(Err::ProtocolOrder, "session key not established");
    return session_key_;
}

// ------------------------------------------------------------------ provider

Bytes usp_authorize(UspState& usp, ByteSpan a4_wire, Rng& rng, OpCounters* counters,
                    CheckToggles toggles, Bytes* sk_out) {
    msg::AuthRelay a4 = msg::decode_auth_relay(a4_wire);

    // Pseudonym lookup: live value, then already-rotated values, then spares.
    UspUserRecord* rec = nullptr;
    int shadow_idx = -1;
    for (auto& u : usp.users) {
        if (u.pdid_cur == a4.pdid) {
            rec = &u;
            break;
        }
        if (!u.pdid_prev.empty() && u.pdid_prev == a4.pdid)
            fail(Err::Replay, "pseudonym already rotated");
        for (std::size_t i = 0; i < u.shadows.size(); ++i) {
            if (u.shadows[i] == a4.pdid) {
                if (u.shadow_used[i]) fail(Err::Replay, "spare pseudonym already consumed");
                rec = &u;
                shadow_idx = static_cast<int>(i);
                break;
            }
        }
        if (rec) break;
    }
    if (!rec) fail(Err::Identity, "unknown pseudonym");

    msg::CredentialProof a3 = msg::decode_credential_proof(a4.a3);
    if (a3.pdid != a4.pdid)
        fail(Err::Integrity, "pseudonym mismatch between relay and proof");

    UspStationRecord* cs = usp.find_station(a4.did_cs);
    if (!cs) fail(Err::Identity, "unknown station");

    if (toggles.usp_verify_v2) {
        Digest v2 = counted_hash(counters, HashClass::Check, "v2",
                                 {to_bytes(a4.did_cs), a4.n_cs, cs->k_cs, to_bytes(a4.lai_cs)});
        if (!equal_bytes(a4.v2, d2b(v2)))
            fail(Err::Integrity, "station check value mismatch");
    }

    Digest el_key = counted_hash(counters, HashClass::Construct, "el-decode",
                                 {rec->k_user, a3.n_u});
    Bytes lai_user = keystream_wrap(d2b(el_key), "lai", a3.el);
    if (counters) ++counters->wrap_ops;
    if (to_string(lai_user) != a4.lai_cs)
        fail(Err::LocationForgery, "location claims disagree");

    if (toggles.usp_verify_v1) {
        Digest v1 = counted_hash(counters, HashClass::Check, "v1",
                                 {a4.pdid, a3.n_u, rec->k_user, a3.el});
        if (!equal_bytes(a3.v1, d2b(v1)))
            fail(Err::Integrity, "user check value mismatch");
    }

    // On the normal path the user has confirmed the last reissue, so only the
    // current digest is live. On the spare path the last delivery may have
    // been lost, so the digest the user last presented stays acceptable.
    bool hv_ok = a3.hash_value == rec->expected_hash_value ||
                 (shadow_idx >= 0 && !rec->expected_hash_prev.empty() &&
                  a3.hash_value == rec->expected_hash_prev);
    if (!hv_ok) fail(Err::Replay, "stale credential digest");

    // Re-checked here so a proof the station failed to screen still cannot
    // pass, and so every proof byte is covered by a named check.
    Possession p = decode_possession(a3.proof);
    zkp::Statement st = zkp::possession_statement(b2d(a3.hash_value), p.R, usp.doc.pub);
    if (counters) ++counters->proof_check_ops;
    if (!zkp::verify(possession_crs(), st, p.pr))
        fail(Err::UserAuth, "possession proof rejected");

    // All checks passed; build the deliveries and commit the rotation.
    Bytes sk = rng.bytes(32);
    Bytes n_new = rng.bytes(32);
    if (counters) ++counters->construct_hash["hash-value-new"];
    Digest hv_new = identity::credential_digest(rec->vc_body, rec->pub, n_new);
    if (counters) ++counters->sign_ops;
    identity::SignedCredential vc_new;
    vc_new.body = rec->vc_body;
    vc_new.nonce = n_new;
    vc_new.sig = sign_digest(hv_new, usp.priv);

    Digest sk_u_mask = counted_hash(counters, HashClass::Construct, "sk-user-mask",
                                    {a4.pdid, a3.n_u, rec->k_user});
    Bytes sk_user = xor_bytes(sk, d2b(sk_u_mask));
    Digest sk_cs_mask = counted_hash(counters, HashClass::Construct, "sk-cs-mask",
                                     {to_bytes(a4.did_cs), a4.n_cs, cs->k_cs});
    Bytes sk_cs = xor_bytes(sk, d2b(sk_cs_mask));

    Digest v3 = counted_hash(counters, HashClass::Construct, "v3", {sk_cs, a4.n_cs, cs->k_cs});
    Digest v4 = counted_hash(counters, HashClass::Construct, "v4", {sk_user, a3.n_u, rec->k_user});

    Digest rotated = counted_hash(counters, HashClass::Construct, "pdid-rotate",
                                  {a4.pdid, rec->k_user});

    Bytes n_star = keystream_wrap(rec->k_user, "n-new", n_new);
    Bytes vc_star = keystream_wrap(rec->k_user, "vc-new", identity::encode_credential(vc_new));
    if (counters) counters->wrap_ops += 2;

    FieldWriter env;
    env.field(sk_user).field(d2b(v4)).field(n_star).field(vc_star);
    if (counters) ++counters->seal_ops;
    Bytes sealed = hybrid_encrypt(rec->pub, env.take(), rng);

    rec->pdid_prev = a4.pdid;
    rec->pdid_cur = d2b(rotated);
    if (shadow_idx >= 0) rec->shadow_used[shadow_idx] = 1;
    rec->expected_hash_prev = a3.hash_value;
    rec->expected_hash_value = d2b(hv_new);

    if (sk_out) *sk_out = sk;

    msg::KeyDelivery a5;
    a5.sk_cs = std::move(sk_cs);
    a5.v3 = d2b(v3);
    a5.user_env = std::move(sealed);
    return msg::encode(a5);
}

// ---------------------------------------------------------------- key backup

std::vector<Bytes> key_backup(const UserWallet& w, std::uint32_t k, std::uint32_t n,
                              std::string_view passphrase, Rng& rng) {
    auto shares = shamir::split(Scalar{w.priv}, k, n, rng);
    std::vector<Bytes> files;
    files.reserve(shares.size());
    for (const auto& s : shares) files.push_back(shamir::encode_share(s, w.doc.did, passphrase));
    return files;
}

Scalar key_recover(const UserWallet& w, const std::vector<Bytes>& share_files,
                   std::string_view passphrase, std::uint32_t k) {
    std::vector<shamir::Share> shares;
    std::string label;
    for (const Bytes& f : share_files) {
        shamir::OpenedShare o = shamir::open_share(f, passphrase);
        if (shares.empty()) {
            label = o.label;
        } else if (o.label != label) {
            fail(Err::Input, "shares come from different backups");
        }
        shares.push_back(o.share);
    }
    Scalar secret = shamir::reconstruct(shares, k);
    if (!(mul_base(secret) == w.doc.pub))
        fail(Err::CorruptShare, "recovered key does not match the wallet");
    return secret;
}

// --------------------------------------------------------------- persistence

Bytes UserWallet::serialize() const {
    FieldWriter w;
    w.field(identity::encode_document(doc)).field(s_bytes(priv)).field(encode_point(usp_pub));
    w.field(delta_check).field(k_star).field(pdid);
    put_shadows(w, shadows, shadow_used);
    w.field_u32(pdid_uncertain ? 1 : 0);
    w.field(vc);
    return w.take();
}

UserWallet UserWallet::deserialize(ByteSpan payload) {
    FieldReader r(payload);
    UserWallet w;
    w.doc = identity::decode_document(r.field());
    w.priv = s_from_bytes(r.field());
    auto pub = decode_point(r.field());
    if (!pub || pub->inf) fail(Err::Decode, "bad provider key");
    w.usp_pub = *pub;
    w.delta_check = r.field();
    w.k_star = r.field();
    w.pdid = r.field();
    get_shadows(r, w.shadows, w.shadow_used);
    w.pdid_uncertain = r.field_u32() != 0;
    w.vc = r.field();
    r.done();
    return w;
}

Bytes CsState::serialize() const {
    FieldWriter w;
    w.field(identity::encode_document(doc)).field(s_bytes(priv)).field(encode_point(usp_pub));
    w.field(k_cs).field(to_bytes(lai)).field(vc);
    return w.take();
}

CsState CsState::deserialize(ByteSpan payload) {
    FieldReader r(payload);
    CsState s;
    s.doc = identity::decode_document(r.field());
    s.priv = s_from_bytes(r.field());
    auto pub = decode_point(r.field());
    if (!pub || pub->inf) fail(Err::Decode, "bad provider key");
    s.usp_pub = *pub;
    s.k_cs = r.field();
    s.lai = to_string(r.field());
    s.vc = r.field();
    r.done();
    return s;
}

Bytes UspState::serialize() const {
    FieldWriter w;
    w.field(identity::encode_document(doc)).field(s_bytes(priv));
    w.field_u32(static_cast<std::uint32_t>(users.size()));
    for (const auto& u : users) {
        w.field(to_bytes(u.did)).field(encode_point(u.pub)).field(u.k_user);
        w.field(u.pdid_prev).field(u.pdid_cur);
        put_shadows(w, u.shadows, u.shadow_used);
        w.field(u.expected_hash_value).field(u.expected_hash_prev);
        w.field(identity::encode_body(u.vc_body));
    }
    w.field_u32(static_cast<std::uint32_t>(stations.size()));
    for (const auto& s : stations) {
        w.field(to_bytes(s.did)).field(encode_point(s.pub)).field(s.k_cs).field(to_bytes(s.lai));
    }
    return w.take();
}

UspState UspState::deserialize(ByteSpan payload) {
    FieldReader r(payload);
    UspState st;
    st.doc = identity::decode_document(r.field());
    st.priv = s_from_bytes(r.field());
    std::uint32_t nu = r.field_u32();
    if (nu > 100000) fail(Err::Decode, "implausible record count");
    for (std::uint32_t i = 0; i < nu; ++i) {
        UspUserRecord u;
        u.did = to_string(r.field());
        auto pub = decode_point(r.field());
        if (!pub || pub->inf) fail(Err::Decode, "bad user key");
        u.pub = *pub;
        u.k_user = r.field();
        u.pdid_prev = r.field();
        u.pdid_cur = r.field();
        get_shadows(r, u.shadows, u.shadow_used);
        u.expected_hash_value = r.field();
        u.expected_hash_prev = r.field();
        u.vc_body = identity::decode_body(r.field());
        st.users.push_back(std::move(u));
    }
    std::uint32_t ns = r.field_u32();
    if (ns > 100000) fail(Err::Decode, "implausible record count");
    for (std::uint32_t i = 0; i < ns; ++i) {
        UspStationRecord s;
        s.did = to_string(r.field());
        auto pub = decode_point(r.field());
        if (!pub || pub->inf) fail(Err::Decode, "bad station key");
        s.pub = *pub;
        s.k_cs = r.field();
        s.lai = to_string(r.field());
        st.stations.push_back(std::move(s));
    }
    r.done();
    return st;
}

void save_wallet(const std::filesystem::path& p, const UserWallet& w) {
    write_file_atomic(p, wrap_state(kWalletMagic, 1, w.serialize()));
}
UserWallet load_wallet(const std::filesystem::path& p) {
    return UserWallet::deserialize(unwrap_state(kWalletMagic, 1, read_file(p)));
}
void save_cs(const std::filesystem::path& p, const CsState& s) {
    write_file_atomic(p, wrap_state(kCsMagic, 1, s.serialize()));
}
CsState load_cs(const std::filesystem::path& p) {
    return CsState::deserialize(unwrap_state(kCsMagic, 1, read_file(p)));
}
void save_usp(const std::filesystem::path& p, const UspState& s) {
    write_file_atomic(p, wrap_state(kUspMagic, 1, s.serialize()));
}
UspState load_usp(const std::filesystem::path& p) {
    return UspState::deserialize(unwrap_state(kUspMagic, 1, read_file(p)));
}
void save_registry(const std::filesystem::path& p, const identity::Registry& r) {
    write_file_atomic(p, wrap_state(kRegistryMagic, 1, r.serialize()));
}
identity::Registry load_registry(const std::filesystem::path& p) {
    return identity::Registry::deserialize(unwrap_state(kRegistryMagic, 1, read_file(p)));
}

} // namespace protocol
} // namespace evauth
