#pragma once
#include "evauth/bytes.hpp"
#include "evauth/curve.hpp"

#include <string>
#include <vector>

namespace evauth {
namespace msg {

// One byte of tag, then every field as be32 length + bytes, in declaration
// order. Decoding rejects wrong tags, short buffers and trailing bytes.
enum Tag : std::uint8_t {
    kTagRev1 = 0x01,
    kTagRev2 = 0x02,
    kTagA1 = 0x11,
    kTagA2 = 0x12,
    kTagA3 = 0x13,
    kTagA4 = 0x14,
    kTagA5 = 0x15,
    kTagA6 = 0x16,
};

// Short names used by transcripts and scenario scripts.
const char* tag_name(std::uint8_t tag); // "REV1".."A6", "?" when unknown

inline constexpr std::string_view kChargeRequestLiteral = "ev-charging-request";
inline constexpr std::string_view kStationProofRequest = "station-vc-proof";
inline constexpr std::string_view kUserProofRequest = "user-possession-proof";

inline constexpr std::string_view kRoleUser = "user";
inline constexpr std::string_view kRoleStation = "station";

// Registration request, sent over the physical enrollment channel.
struct RegisterRequest {
    std::string role;  // kRoleUser or kRoleStation
    Point pub{};       // long-term key
    Bytes delta;       // users: 32-byte secret digest; stations: empty
    std::string lai;   // stations: fixed location; users: empty
    bool operator==(const RegisterRequest&) const = default;
};

struct RegisterResponse {
    Bytes doc;                  // encoded DidDocument
    Bytes vc;                   // encoded SignedCredential
    Bytes secret;               // users: delta-wrapped K; stations: raw K_cs
    Bytes pdid;                 // users: 32 bytes; stations: empty
    std::vector<Bytes> shadows; // users: spare pseudonyms; stations: empty
    Point usp_pub{};
    bool operator==(const RegisterResponse&) const = default;
};

// A1, user to station: open a session under a pseudonym.
struct ChargeRequest {
    Bytes pdid;                // 32
    std::string request;       // kChargeRequestLiteral
    std::string proof_request; // kStationProofRequest
    bool operator==(const ChargeRequest&) const = default;
};

// A2, station to user: certification material plus the counter-request.
struct StationCredential {
    Bytes station_doc;         // encoded DidDocument
    Bytes station_vc;          // encoded SignedCredential
    std::string proof_request; // kUserProofRequest
    bool operator==(const StationCredential&) const = default;
};

// A3, user to station: possession proof and the user-to-provider material.
struct CredentialProof {
    Bytes pdid;       // 32
    Bytes hash_value; // 32-byte credential digest
    Bytes proof;      // 98 = R(33) || t(33) || z(32)
    Bytes n_u;        // 32
    Bytes el;         // masked location, same length as the location text
    Bytes v1;         // 32
    bool operator==(const CredentialProof&) const = default;
};

// A4, station to provider: the station's own claim wrapped around the raw A3.
// pdid is copied from the A1 that opened the session, so a spliced-in A3
// from another session disagrees with it.
struct AuthRelay {
    Bytes a3;            // complete A3 wire bytes
    Bytes pdid;          // 32, from session state
    std::string did_cs;
    Bytes n_cs;          // 32
    std::string lai_cs;
    Bytes v2;            // 32
    bool operator==(const AuthRelay&) const = default;
};

// A5, provider to station: masked session key for the station plus the
// sealed envelope the station forwards blindly.
struct KeyDelivery {
    Bytes sk_cs;    // 32 masked
    Bytes v3;       // 32
    Bytes user_env; // hybrid ciphertext, opaque to the station
    bool operator==(const KeyDelivery&) const = default;
};

// A6, station to user.
struct UserKeyDelivery {
    Bytes user_env;
    bool operator==(const UserKeyDelivery&) const = default;
};

Bytes encode(const RegisterRequest&);
Bytes encode(const RegisterResponse&);
Bytes encode(const ChargeRequest&);
Bytes encode(const StationCredential&);
Bytes encode(const CredentialProof&);
Bytes encode(const AuthRelay&);
Bytes encode(const KeyDelivery&);
Bytes encode(const UserKeyDelivery&);

RegisterRequest decode_register_request(ByteSpan);
RegisterResponse decode_register_response(ByteSpan);
ChargeRequest decode_charge_request(ByteSpan);
StationCredential decode_station_credential(ByteSpan);
CredentialProof decode_credential_proof(ByteSpan);
AuthRelay decode_auth_relay(ByteSpan);
KeyDelivery decode_key_delivery(ByteSpan);
UserKeyDelivery decode_user_key_delivery(ByteSpan);

} // namespace msg
} // namespace evauth
