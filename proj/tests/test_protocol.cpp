#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "evauth/protocol.hpp"

#include "evauth/codec.hpp"
#include "evauth/errors.hpp"
#include "evauth/storage.hpp"

#include <filesystem>
#include <functional>
#include <optional>

using namespace evauth;
using namespace evauth::curve;
namespace proto = evauth::protocol;
namespace id = evauth::identity;

namespace {

std::optional<Err> thrown_code(const std::function<void()>& f) {
    try {
        f();
    } catch (const ProtocolError& e) {
        return e.code();
    }
    return std::nullopt;
}

constexpr const char* kBio = "thumbprint-blue";
constexpr const char* kPw = "hunter2";
constexpr const char* kLai = "lai-0042";

struct Net {
    Rng rng = Rng::from_u64(0);
    id::Registry reg;
    proto::UspState usp;
    proto::UserWallet wallet;
    proto::CsState cs;

    explicit Net(std::uint64_t seed) : rng(Rng::from_u64(seed)) {
        usp = proto::usp_init(rng, reg);

        KeyPair uk = keygen(rng);
        msg::RegisterRequest ur;
        ur.role = std::string(msg::kRoleUser);
        ur.pub = uk.pub;
        ur.delta = proto::user_delta(kBio, kPw);
        wallet = proto::user_enroll(proto::usp_register(usp, reg, ur, rng), uk, kBio, kPw);

        KeyPair ck = keygen(rng);
        msg::RegisterRequest cr;
        cr.role = std::string(msg::kRoleStation);
        cr.pub = ck.pub;
        cr.lai = kLai;
        cs = proto::station_enroll(proto::usp_register(usp, reg, cr, rng), ck, kLai);
    }
};

struct Flow {
    Bytes a1, a2, a3, a4, a5, a6;
    OpCounters user_c, cs_c, usp_c;
    Bytes user_sk, cs_sk, usp_sk;
};

Flow run_flow(Net& net, const std::string& user_lai = kLai) {
    Flow f;
    auto us = proto::UserSession::begin(net.wallet, user_lai, kBio, kPw, net.rng);
    auto ss = proto::CsSession::begin(net.cs, net.rng);
    f.a1 = us.a1();
    f.a2 = ss.on_a1(f.a1);
    f.a3 = us.on_a2(f.a2);
    f.a4 = ss.on_a3(f.a3);
    f.a5 = proto::usp_authorize(net.usp, f.a4, net.rng, &f.usp_c, {}, &f.usp_sk);
    f.a6 = ss.on_a5(f.a5);
    us.finish(f.a6);
    f.user_sk = us.session_key();
    f.cs_sk = ss.session_key();
    f.user_c = us.counters();
    f.cs_c = ss.counters();
    return f;
}

bool contains(ByteSpan hay, ByteSpan needle) {
    if (needle.empty() || hay.size() < needle.size()) return false;
    for (std::size_t i = 0; i + needle.size() <= hay.size(); ++i)
        if (equal_bytes(hay.subspan(i, needle.size()), needle)) return true;
    return false;
}

} // namespace

TEST_CASE("full authentication establishes one key at both ends") {
    Net net(100);
    Bytes pdid0 = net.wallet.pdid;
    Bytes vc0 = net.wallet.vc;

    Flow f = run_flow(net);
    CHECK(f.user_sk.size() == 32);
    CHECK(f.user_sk == f.cs_sk);
    CHECK(f.user_sk == f.usp_sk);

    // wallet rotated and reissued
    CHECK(net.wallet.pdid != pdid0);
    CHECK(net.wallet.vc != vc0);
    CHECK(!net.wallet.pdid_uncertain);

    // provider followed the same rotation
    CHECK(net.usp.users[0].pdid_prev == pdid0);
    CHECK(net.usp.users[0].pdid_cur == net.wallet.pdid);

    // back-to-back sessions keep working and keys differ per session
    Flow g = run_flow(net);
    CHECK(g.user_sk == g.cs_sk);
    CHECK(g.user_sk != f.user_sk);
}

TEST_CASE("pseudonymity on the wire") {
    Net net(101);
    Bytes did_bytes = to_bytes(net.wallet.doc.did);
    Bytes key_bytes = encode_point(net.wallet.doc.pub);

    Flow f = run_flow(net);
    Flow g = run_flow(net);

    // station-facing messages never carry the stable identity
    for (const Bytes* m : {&f.a1, &f.a3, &f.a4, &g.a1, &g.a3, &g.a4}) {
        CHECK(!contains(*m, did_bytes));
        CHECK(!contains(*m, key_bytes));
    }
    // and per-session values do not repeat across sessions
    msg::ChargeRequest m1 = msg::decode_charge_request(f.a1);
    msg::ChargeRequest m2 = msg::decode_charge_request(g.a1);
    CHECK(m1.pdid != m2.pdid);
    msg::CredentialProof p1 = msg::decode_credential_proof(f.a3);
    msg::CredentialProof p2 = msg::decode_credential_proof(g.a3);
    CHECK(p1.hash_value != p2.hash_value);
    CHECK(p1.proof != p2.proof);
}

TEST_CASE("operation accounting") {
    Net net(102);
    Flow f = run_flow(net);

    // user side: six constructive hashes, one signature verification, no
    // signing, one possession proof
    CHECK(f.user_c.construct_total() == 6);
    std::map<std::string, int> want_user{{"delta", 1},        {"cred-digest", 1},
                                         {"el-key", 1},       {"v1", 1},
                                         {"sk-user-mask", 1}, {"pdid-rotate", 1}};
    CHECK(f.user_c.construct_hash == want_user);
    CHECK(f.user_c.sign_ops == 0);
    CHECK(f.user_c.verify_ops == 1);
    CHECK(f.user_c.prove_ops == 1);
    CHECK(f.user_c.seal_ops == 1);

    // server side, station and provider together: nine constructive hashes,
    // one signature, proof checks at both hops
    OpCounters server = f.cs_c;
    server.merge(f.usp_c);
    CHECK(server.construct_total() == 9);
    std::map<std::string, int> want_server{{"v2", 1},           {"sk-cs-mask", 2},
                                           {"el-decode", 1},    {"hash-value-new", 1},
                                           {"sk-user-mask", 1}, {"v3", 1},
                                           {"v4", 1},           {"pdid-rotate", 1}};
    CHECK(server.construct_hash == want_server);
    CHECK(server.sign_ops == 1);
    CHECK(f.cs_c.proof_check_ops == 1);
    CHECK(f.usp_c.proof_check_ops == 1);
    CHECK(f.usp_c.seal_ops == 1);

    // check-class hashes exist but stay out of the constructive totals
    CHECK(f.user_c.check_total() >= 3);
    CHECK(f.usp_c.check_total() >= 2);
    CHECK(f.cs_c.check_total() >= 1);
}

TEST_CASE("wrong local secrets never reach the wire") {
    Net net(103);
    Bytes pdid0 = net.wallet.pdid;
    CHECK(thrown_code([&] {
        proto::UserSession::begin(net.wallet, kLai, kBio, "wrong-pw", net.rng);
    }) == Err::LocalAuth);
    CHECK(thrown_code([&] {
        proto::UserSession::begin(net.wallet, kLai, "other-thumb", kPw, net.rng);
    }) == Err::LocalAuth);
    // wallet untouched
    CHECK(net.wallet.pdid == pdid0);
    CHECK(!net.wallet.pdid_uncertain);
}

TEST_CASE("interrupted session recovers through a spare pseudonym") {
    Net net(104);

    // session 1: user sends A3, the rest of the exchange is lost
    {
        auto us = proto::UserSession::begin(net.wallet, kLai, kBio, kPw, net.rng);
        auto ss = proto::CsSession::begin(net.cs, net.rng);
        Bytes a2 = ss.on_a1(us.a1());
        Bytes a3 = us.on_a2(a2);
        Bytes a4 = ss.on_a3(a3);
        (void)proto::usp_authorize(net.usp, a4, net.rng); // provider committed
        // A5/A6 never arrive
    }
    CHECK(net.wallet.pdid_uncertain);

    // session 2 switches to a spare pseudonym and completes
    Bytes shadow0 = net.wallet.shadows[0];
    CHECK(net.wallet.shadow_used[0] == 0);
    {
        auto us = proto::UserSession::begin(net.wallet, kLai, kBio, kPw, net.rng);
        CHECK(us.pdid_used() == shadow0);
        auto ss = proto::CsSession::begin(net.cs, net.rng);
        Bytes a3 = us.on_a2(ss.on_a1(us.a1()));
        CHECK(net.wallet.shadow_used[0] == 1); // burned at emission
        Bytes a4 = ss.on_a3(a3);
        Bytes a5 = proto::usp_authorize(net.usp, a4, net.rng);
        us.finish(ss.on_a5(a5));
        CHECK(us.session_key() == ss.session_key());
    }
    CHECK(!net.wallet.pdid_uncertain);
    CHECK(net.usp.users[0].shadow_used[0] == 1);
    CHECK(net.usp.users[0].pdid_prev == shadow0);
    CHECK(net.usp.users[0].pdid_cur == net.wallet.pdid);

    // session 3 is plain again
    Flow f = run_flow(net);
    CHECK(f.user_sk == f.cs_sk);
}

TEST_CASE("two lost deliveries in a row still recover") {
    Net net(117);
    for (int i = 0; i < 2; ++i) {
        auto us = proto::UserSession::begin(net.wallet, kLai, kBio, kPw, net.rng);
        auto ss = proto::CsSession::begin(net.cs, net.rng);
        Bytes a4 = ss.on_a3(us.on_a2(ss.on_a1(us.a1())));
        (void)proto::usp_authorize(net.usp, a4, net.rng); // commits, delivery lost
    }
    // the wallet still holds its original credential; the third attempt runs
    // on the last spare and completes
    CHECK(net.wallet.shadow_used[0] == 1);
    Flow f = run_flow(net);
    CHECK(f.user_sk == f.cs_sk);
    CHECK(!net.wallet.pdid_uncertain);
}

TEST_CASE("spare pseudonyms run out") {
    Net net(105);
    for (std::size_t i = 0; i <= net.wallet.shadows.size(); ++i) {
        auto us = proto::UserSession::begin(net.wallet, kLai, kBio, kPw, net.rng);
        auto ss = proto::CsSession::begin(net.cs, net.rng);
        (void)us.on_a2(ss.on_a1(us.a1())); // A3 emitted, session dies here
    }
    CHECK(thrown_code([&] {
        proto::UserSession::begin(net.wallet, kLai, kBio, kPw, net.rng);
    }) == Err::ReRegistrationRequired);
}

TEST_CASE("replayed messages are rejected with distinct names") {
    Net net(106);
    Flow f1 = run_flow(net);

    // whole A4 from the finished session: rotated pseudonym
    CHECK(thrown_code([&] { proto::usp_authorize(net.usp, f1.a4, net.rng); }) == Err::Replay);

    // A3 spliced into a fresh exchange: relay disagrees with the proof
    {
        auto us = proto::UserSession::begin(net.wallet, kLai, kBio, kPw, net.rng);
        auto ss = proto::CsSession::begin(net.cs, net.rng);
        (void)ss.on_a1(us.a1());
        Bytes a4 = ss.on_a3(f1.a3); // the station cannot tell, the proof verifies
        CHECK(thrown_code([&] { proto::usp_authorize(net.usp, a4, net.rng); }) ==
              Err::Integrity);
    }

    // A5 replayed to a new station session: confirmation mismatch
    {
        auto us = proto::UserSession::begin(net.wallet, kLai, kBio, kPw, net.rng);
        auto ss = proto::CsSession::begin(net.cs, net.rng);
        Bytes a2 = ss.on_a1(us.a1());
        (void)ss.on_a3(us.on_a2(a2));
        CHECK(thrown_code([&] { ss.on_a5(f1.a5); }) == Err::Integrity);
        net.wallet.pdid_uncertain = false; // that exchange never finished
    }

    // A6 replayed to a new user session: user confirmation mismatch
    {
        auto us = proto::UserSession::begin(net.wallet, kLai, kBio, kPw, net.rng);
        auto ss = proto::CsSession::begin(net.cs, net.rng);
        (void)us.on_a2(ss.on_a1(us.a1()));
        CHECK(thrown_code([&] { us.finish(f1.a6); }) == Err::Integrity);
        net.wallet.pdid_uncertain = false;
    }
}

TEST_CASE("key delivery for one user is opaque to another") {
    Net net(118);

    // second user enrolled with the same provider
    KeyPair uk2 = keygen(net.rng);
    msg::RegisterRequest ur2;
    ur2.role = std::string(msg::kRoleUser);
    ur2.pub = uk2.pub;
    ur2.delta = proto::user_delta(kBio, kPw);
    proto::UserWallet wallet2 =
        proto::user_enroll(proto::usp_register(net.usp, net.reg, ur2, net.rng), uk2, kBio, kPw);

    Flow f1 = run_flow(net); // user 1 finishes; f1.a6 is addressed to user 1

    auto us2 = proto::UserSession::begin(wallet2, kLai, kBio, kPw, net.rng);
    auto ss2 = proto::CsSession::begin(net.cs, net.rng);
    (void)us2.on_a2(ss2.on_a1(us2.a1()));
    CHECK(thrown_code([&] { us2.finish(f1.a6); }) == Err::Confidentiality);
}

TEST_CASE("tampered relay fields map to named errors") {
    Net net(107);
    // one clean rotation first, so the previous-pseudonym slot is populated
    run_flow(net);

    auto make_a4 = [&]() {
        auto us = proto::UserSession::begin(net.wallet, kLai, kBio, kPw, net.rng);
        auto ss = proto::CsSession::begin(net.cs, net.rng);
        Bytes a4 = ss.on_a3(us.on_a2(ss.on_a1(us.a1())));
        net.wallet.pdid_uncertain = false; // the exchange below never finishes
        return a4;
    };

    // locate fields through a decode; mutate, re-encode
    auto mutate = [&](auto&& f) {
        Bytes a4w = make_a4();
        msg::AuthRelay a4 = msg::decode_auth_relay(a4w);
        msg::CredentialProof a3 = msg::decode_credential_proof(a4.a3);
        f(a4, a3);
        a4.a3 = msg::encode(a3);
        return msg::encode(a4);
    };

    // response scalar of the proof: caught by the provider-side re-check
    Bytes bad = mutate([](msg::AuthRelay&, msg::CredentialProof& a3) { a3.proof[97] ^= 1; });
    CHECK(thrown_code([&] { proto::usp_authorize(net.usp, bad, net.rng); }) == Err::UserAuth);

    // masked location: claims disagree
    bad = mutate([](msg::AuthRelay&, msg::CredentialProof& a3) { a3.el[0] ^= 1; });
    CHECK(thrown_code([&] { proto::usp_authorize(net.usp, bad, net.rng); }) ==
          Err::LocationForgery);

    // user check value
    bad = mutate([](msg::AuthRelay&, msg::CredentialProof& a3) { a3.v1[0] ^= 1; });
    CHECK(thrown_code([&] { proto::usp_authorize(net.usp, bad, net.rng); }) == Err::Integrity);

    // user nonce feeds the location key before anything else consumes it
    bad = mutate([](msg::AuthRelay&, msg::CredentialProof& a3) { a3.n_u[0] ^= 1; });
    CHECK(thrown_code([&] { proto::usp_authorize(net.usp, bad, net.rng); }) ==
          Err::LocationForgery);

    // credential digest: no longer the one on file
    bad = mutate([](msg::AuthRelay&, msg::CredentialProof& a3) { a3.hash_value[0] ^= 1; });
    CHECK(thrown_code([&] { proto::usp_authorize(net.usp, bad, net.rng); }) == Err::Replay);

    // station check value
    bad = mutate([](msg::AuthRelay& a4, msg::CredentialProof&) { a4.v2[0] ^= 1; });
    CHECK(thrown_code([&] { proto::usp_authorize(net.usp, bad, net.rng); }) == Err::Integrity);

    // station nonce breaks the station check value
    bad = mutate([](msg::AuthRelay& a4, msg::CredentialProof&) { a4.n_cs[0] ^= 1; });
    CHECK(thrown_code([&] { proto::usp_authorize(net.usp, bad, net.rng); }) == Err::Integrity);

    // relay pseudonym: unknown
    bad = mutate([](msg::AuthRelay& a4, msg::CredentialProof&) { a4.pdid[0] ^= 1; });
    CHECK(thrown_code([&] { proto::usp_authorize(net.usp, bad, net.rng); }) == Err::Identity);

    // proof pseudonym: relay and proof disagree
    bad = mutate([](msg::AuthRelay&, msg::CredentialProof& a3) { a3.pdid[0] ^= 1; });
    CHECK(thrown_code([&] { proto::usp_authorize(net.usp, bad, net.rng); }) == Err::Integrity);

    // unknown station
    bad = mutate([](msg::AuthRelay& a4, msg::CredentialProof&) {
        a4.did_cs[12] = (a4.did_cs[12] == 'f') ? '0' : 'f';
    });
    CHECK(thrown_code([&] { proto::usp_authorize(net.usp, bad, net.rng); }) == Err::Identity);

    // a clean relay still authorizes after all those rejections
    Bytes ok = make_a4();
    CHECK(peek_tag(proto::usp_authorize(net.usp, ok, net.rng)) == msg::kTagA5);
}

TEST_CASE("location forgery from either side") {
    // user claims a different location than the station
    Net net(108);
    auto us = proto::UserSession::begin(net.wallet, "lai-9999", kBio, kPw, net.rng);
    auto ss = proto::CsSession::begin(net.cs, net.rng);
    Bytes a4 = ss.on_a3(us.on_a2(ss.on_a1(us.a1())));
    CHECK(thrown_code([&] { proto::usp_authorize(net.usp, a4, net.rng); }) ==
          Err::LocationForgery);

    // station claims a different location than the one on file
    Net net2(109);
    net2.cs.lai = "lai-7777"; // the station lies but owns its key, so V2 holds
    auto us2 = proto::UserSession::begin(net2.wallet, kLai, kBio, kPw, net2.rng);
    auto ss2 = proto::CsSession::begin(net2.cs, net2.rng);
    Bytes a42 = ss2.on_a3(us2.on_a2(ss2.on_a1(us2.a1())));
    CHECK(thrown_code([&] { proto::usp_authorize(net2.usp, a42, net2.rng); }) ==
          Err::LocationForgery);
}

TEST_CASE("impersonation attempts") {
    Net net(110);
    Rng adv = Rng::from_u64(666);

    // forged user check value built from a guessed long-term key
    auto us = proto::UserSession::begin(net.wallet, kLai, kBio, kPw, net.rng);
    auto ss = proto::CsSession::begin(net.cs, net.rng);
    Bytes a3w = us.on_a2(ss.on_a1(us.a1()));
    msg::CredentialProof a3 = msg::decode_credential_proof(a3w);
    Bytes guessed_k = adv.bytes(32);
    Digest forged_v1 = hash_parts(a3.pdid, a3.n_u, guessed_k, a3.el);
    a3.v1.assign(forged_v1.begin(), forged_v1.end());
    Bytes a4 = ss.on_a3(msg::encode(a3)); // the proof itself still verifies
    CHECK(thrown_code([&] { proto::usp_authorize(net.usp, a4, net.rng); }) == Err::Integrity);
    net.wallet.pdid_uncertain = false;

    // station impersonation without the station's shared key
    msg::AuthRelay relay = msg::decode_auth_relay(a4);
    relay.a3 = a3w;
    relay.n_cs = adv.bytes(32);
    relay.v2 = adv.bytes(32); // cannot be computed without k_cs
    CHECK(thrown_code([&] { proto::usp_authorize(net.usp, msg::encode(relay), net.rng); }) ==
          Err::Integrity);

    // proof bytes from someone without the credential fail at the station
    auto us2 = proto::UserSession::begin(net.wallet, kLai, kBio, kPw, net.rng);
    auto ss2 = proto::CsSession::begin(net.cs, net.rng);
    msg::CredentialProof a32 = msg::decode_credential_proof(us2.on_a2(ss2.on_a1(us2.a1())));
    a32.proof[97] ^= 1;
    CHECK(thrown_code([&] { (void)ss2.on_a3(msg::encode(a32)); }) == Err::UserAuth);
    net.wallet.pdid_uncertain = false;
}

TEST_CASE("check toggles change outcomes") {
    // with the station-side proof check off the provider still catches a
    // forged proof, so the error moves instead of disappearing
    Net net(111);
    proto::CheckToggles lax;
    lax.cs_verify_proof = false;

    auto us = proto::UserSession::begin(net.wallet, kLai, kBio, kPw, net.rng);
    auto ss = proto::CsSession::begin(net.cs, net.rng, lax);
    msg::CredentialProof a3 = msg::decode_credential_proof(us.on_a2(ss.on_a1(us.a1())));
    a3.proof[97] ^= 1;
    Bytes a4 = ss.on_a3(msg::encode(a3)); // no rejection here with the toggle off
    CHECK(thrown_code([&] { proto::usp_authorize(net.usp, a4, net.rng); }) == Err::UserAuth);

    // with the provider check off, a forged user check value sails through
    Net net2(112);
    proto::CheckToggles lax2;
    lax2.usp_verify_v1 = false;
    auto us2 = proto::UserSession::begin(net2.wallet, kLai, kBio, kPw, net2.rng);
    auto ss2 = proto::CsSession::begin(net2.cs, net2.rng);
    msg::CredentialProof a32 = msg::decode_credential_proof(us2.on_a2(ss2.on_a1(us2.a1())));
    a32.v1[0] ^= 1;
    Bytes a42 = ss2.on_a3(msg::encode(a32));
    Bytes a52 = proto::usp_authorize(net2.usp, a42, net2.rng, nullptr, lax2);
    CHECK(peek_tag(a52) == msg::kTagA5); // the forgery was accepted
}

TEST_CASE("protocol order is enforced") {
    Net net(113);
    auto us = proto::UserSession::begin(net.wallet, kLai, kBio, kPw, net.rng);
    auto ss = proto::CsSession::begin(net.cs, net.rng);

    CHECK(thrown_code([&] { (void)us.session_key(); }) == Err::ProtocolOrder);
    CHECK(thrown_code([&] { (void)ss.on_a3(Bytes{}); }) == Err::ProtocolOrder);
    Bytes a1 = us.a1();
    CHECK(thrown_code([&] { (void)us.a1(); }) == Err::ProtocolOrder);
    Bytes a2 = ss.on_a1(a1);
    CHECK(thrown_code([&] { (void)ss.on_a1(a1); }) == Err::ProtocolOrder);
    CHECK(thrown_code([&] { us.finish(Bytes{}); }) == Err::ProtocolOrder);

    CHECK(thrown_code([&] {
        proto::UserSession::begin(net.wallet, "", kBio, kPw, net.rng);
    }) == Err::Input);
}

TEST_CASE("state files round trip and reject corruption") {
    Net net(114);
    run_flow(net);

    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "evauth-test-state";
    fs::create_directories(dir);

    proto::save_wallet(dir / "w", net.wallet);
    proto::save_cs(dir / "c", net.cs);
    proto::save_usp(dir / "u", net.usp);
    proto::save_registry(dir / "r", net.reg);

    proto::UserWallet w2 = proto::load_wallet(dir / "w");
    CHECK(w2.pdid == net.wallet.pdid);
    CHECK(w2.vc == net.wallet.vc);
    CHECK(w2.shadows == net.wallet.shadows);
    proto::CsState c2 = proto::load_cs(dir / "c");
    CHECK(c2.k_cs == net.cs.k_cs);
    CHECK(c2.lai == net.cs.lai);
    proto::UspState u2 = proto::load_usp(dir / "u");
    CHECK(u2.users.size() == 1);
    CHECK(u2.users[0].pdid_cur == net.usp.users[0].pdid_cur);
    CHECK(u2.stations.size() == 1);
    id::Registry r2 = proto::load_registry(dir / "r");
    CHECK(r2.chain() == net.reg.chain());

    // a reloaded world keeps authenticating
    Net reloaded(114);
    reloaded.wallet = w2;
    reloaded.cs = c2;
    reloaded.usp = u2;
    Flow f = run_flow(reloaded);
    CHECK(f.user_sk == f.cs_sk);

    // flip one byte anywhere: the checksum catches it
    Bytes raw = read_file(dir / "w");
    raw[raw.size() / 2] ^= 1;
    write_file_atomic(dir / "w", raw);
    CHECK(thrown_code([&] { proto::load_wallet(dir / "w"); }) == Err::Storage);

    // wrong kind of file, missing file
    CHECK(thrown_code([&] { proto::load_cs(dir / "u"); }) == Err::Storage);
    CHECK(thrown_code([&] { proto::load_wallet(dir / "missing"); }) == Err::NotFound);

    fs::remove_all(dir);
}

TEST_CASE("key backup and recovery") {
    Net net(115);
    Rng rng = Rng::from_u64(42);
    auto files = proto::key_backup(net.wallet, 3, 5, "open sesame", rng);
    REQUIRE(files.size() == 5);

    // any three shares recover the signing key
    Scalar rec = proto::key_recover(net.wallet, {files[4], files[0], files[2]}, "open sesame", 3);
    CHECK(rec == net.wallet.priv);

    // two shares are below the threshold
    CHECK(thrown_code([&] {
        proto::key_recover(net.wallet, {files[0], files[1]}, "open sesame", 3);
    }) == Err::Threshold);

    // wrong passphrase is named before any reconstruction happens
    CHECK(thrown_code([&] {
        proto::key_recover(net.wallet, {files[0], files[1], files[2]}, "wrong", 3);
    }) == Err::ShareDecrypt);

    // a flipped ciphertext byte decrypts to garbage: corrupt share
    Bytes evil = files[1];
    evil[evil.size() - 5] ^= 1;
    CHECK(thrown_code([&] {
        proto::key_recover(net.wallet, {files[0], evil, files[2]}, "open sesame", 3);
    }) == Err::CorruptShare);

    // shares from two different backups do not mix
    Net other(116);
    auto alien = proto::key_backup(other.wallet, 3, 5, "open sesame", rng);
    CHECK(thrown_code([&] {
        proto::key_recover(net.wallet, {files[0], alien[1], files[2]}, "open sesame", 3);
    }) == Err::Input);
}
