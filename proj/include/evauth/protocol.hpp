#pragma once
#include "evauth/counters.hpp"
#include "evauth/identity.hpp"
#include "evauth/messages.hpp"
#include "evauth/shamir.hpp"
#include "evauth/zkp.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace evauth {
namespace protocol {

inline constexpr std::string_view kPossessionRelation = "evauth-possession-v1";
inline constexpr std::uint64_t kDefaultIssuedAt = 1723600000;
inline constexpr std::uint32_t kDefaultShadowCount = 3;

// Per-check kill switches for mutation tests. Production paths always run
// with everything on.
struct CheckToggles {
    bool user_verify_station_vc = true;
    bool cs_verify_proof = true;
    bool usp_verify_v1 = true;
    bool usp_verify_v2 = true;
};

struct UserWallet {
    identity::DidDocument doc;
    Scalar priv{};
    Point usp_pub{};
    Bytes delta_check;              // gate digest for the local secrets
    Bytes k_star;                   // delta-wrapped long-term key K
    Bytes pdid;                     // current pseudonym
    std::vector<Bytes> shadows;     // spare pseudonyms
    std::vector<std::uint8_t> shadow_used;
    bool pdid_uncertain = false;    // set once A3 leaves, cleared on finish
    Bytes vc;                       // encoded current credential

    Bytes serialize() const;
    static UserWallet deserialize(ByteSpan payload);
};

struct CsState {
    identity::DidDocument doc;
    Scalar priv{};
    Point usp_pub{};
    Bytes k_cs; // long-term key shared with the provider
    std::string lai;
    Bytes vc; // encoded station credential

    Bytes serialize() const;
    static CsState deserialize(ByteSpan payload);
};

struct UspUserRecord {
    std::string did;
    Point pub{};
    Bytes k_user;
    Bytes pdid_prev; // empty until the first rotation
    Bytes pdid_cur;
    std::vector<Bytes> shadows;
    std::vector<std::uint8_t> shadow_used;
    Bytes expected_hash_value; // freshness anchor for the current credential
    Bytes expected_hash_prev;  // digest the user last presented; acceptable
                               // only on the spare-pseudonym path, where the
                               // reissued credential may never have arrived
    identity::CredentialBody vc_body;
};

struct UspStationRecord {
    std::string did;
    Point pub{};
    Bytes k_cs;
    std::string lai;
};

struct UspState {
    identity::DidDocument doc;
    Scalar priv{};
    std::vector<UspUserRecord> users;
    std::vector<UspStationRecord> stations;

    Point pub() const;
    UspUserRecord* find_user_did(std::string_view did);
    UspStationRecord* find_station(std::string_view did);

    Bytes serialize() const;
    static UspState deserialize(ByteSpan payload);
};

UspState usp_init(Rng& rng, identity::Registry& reg);

// Enrollment runs over a trusted channel; these are direct calls, not
// network messages for the adversary to play with.
msg::RegisterResponse usp_register(UspState& usp, identity::Registry& reg,
                                   const msg::RegisterRequest& req, Rng& rng,
                                   std::uint64_t issued_at = kDefaultIssuedAt,
                                   std::uint32_t shadow_count = kDefaultShadowCount);

Bytes user_delta(std::string_view biometric, std::string_view password, OpCounters* c = nullptr);

UserWallet user_enroll(const msg::RegisterResponse& resp, const KeyPair& keys,
                       std::string_view biometric, std::string_view password);
CsState station_enroll(const msg::RegisterResponse& resp, const KeyPair& keys,
                       std::string_view lai);

// User side of one authentication. Throws protocol errors; the wallet is
// mutated exactly when the live protocol would commit (pseudonym burn at A3,
// rotation at finish).
class UserSession {
public:
    static UserSession begin(UserWallet& w, std::string lai, std::string_view biometric,
                             std::string_view password, Rng& rng, CheckToggles toggles = {});

    Bytes a1();
    Bytes on_a2(ByteSpan a2_wire); // returns A3
    void finish(ByteSpan a6_wire); // rotates pseudonym, installs new credential

    const Bytes& session_key() const;
    const OpCounters& counters() const { return counters_; }
    const Bytes& pdid_used() const { return pdid_used_; }

private:
    UserSession(UserWallet& w, Rng& rng) : wallet_(&w), rng_(&rng) {}

    UserWallet* wallet_;
    Rng* rng_;
    CheckToggles toggles_;
    OpCounters counters_;
    int stage_ = 0;
    std::string lai_;
    Bytes k_;      // unwrapped long-term key
    Bytes n_u_;
    Bytes pdid_used_;
    int shadow_idx_ = -1;
    Bytes session_key_;
};

// Station side of one authentication.
class CsSession {
public:
    static CsSession begin(CsState& s, Rng& rng, CheckToggles toggles = {});

    Bytes on_a1(ByteSpan a1_wire); // returns A2
    Bytes on_a3(ByteSpan a3_wire); // verifies the proof, returns A4
    Bytes on_a5(ByteSpan a5_wire); // returns A6

    const Bytes& session_key() const;
    const OpCounters& counters() const { return counters_; }

private:
    CsSession(CsState& s, Rng& rng) : state_(&s), rng_(&rng) {}

    CsState* state_;
    Rng* rng_;
    CheckToggles toggles_;
    OpCounters counters_;
    int stage_ = 0;
    Bytes pdid_;
    Bytes n_cs_;
    Bytes session_key_;
};

// Provider side: single round, A4 in, A5 out. Commits record changes only
// after every check has passed. sk_out, when given, receives the session key
// the provider generated, so tests can compare all three ends.
Bytes usp_authorize(UspState& usp, ByteSpan a4_wire, Rng& rng, OpCounters* counters = nullptr,
                    CheckToggles toggles = {}, Bytes* sk_out = nullptr);

// Threshold backup of the wallet's signing key.
std::vector<Bytes> key_backup(const UserWallet& w, std::uint32_t k, std::uint32_t n,
                              std::string_view passphrase, Rng& rng);
// Rebuilds the key from share files; corrupt-share-error when the result does
// not match the wallet's public key.
Scalar key_recover(const UserWallet& w, const std::vector<Bytes>& share_files,
                   std::string_view passphrase, std::uint32_t k);

// State files.
void save_wallet(const std::filesystem::path& p, const UserWallet& w);
UserWallet load_wallet(const std::filesystem::path& p);
void save_cs(const std::filesystem::path& p, const CsState& s);
CsState load_cs(const std::filesystem::path& p);
void save_usp(const std::filesystem::path& p, const UspState& s);
UspState load_usp(const std::filesystem::path& p);
void save_registry(const std::filesystem::path& p, const identity::Registry& r);
identity::Registry load_registry(const std::filesystem::path& p);

} // namespace protocol
} // namespace evauth
