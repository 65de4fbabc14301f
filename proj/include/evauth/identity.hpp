#pragma once
#include "evauth/bytes.hpp"
#include "evauth/curve.hpp"
#include "evauth/ecdsa.hpp"
#include "evauth/rng.hpp"
#include "evauth/zkp.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace evauth {
namespace identity {

// did:evauth:<64 hex>, the hex being hash(compressed key, salt). The salt
// keeps equal keys from producing linkable identifiers across registrations.
std::string make_did(const Point& pub, ByteSpan salt);
bool looks_like_did(std::string_view s);

struct DidDocument {
    std::string did;
    Point pub{};
    Bytes salt;
    bool operator==(const DidDocument&) const = default;
};

DidDocument make_document(const Point& pub, Rng& rng);

Bytes encode_document(const DidDocument& doc);
DidDocument decode_document(ByteSpan b); // decode-error on malformed input

// One link of the append-only log: chain' = hash(chain, record).
Digest chain_step(const Digest& prev, ByteSpan record);

// Append-only resolver backed by a hash-chained record log. Tampering with
// any serialized record breaks the chain on load.
class Registry {
public:
    void add(const DidDocument& doc); // input-error on duplicate did
    std::optional<DidDocument> resolve(std::string_view did) const;
    const Digest& chain() const { return chain_; }
    std::size_t size() const { return records_.size(); }

    Bytes serialize() const;
    static Registry deserialize(ByteSpan payload); // storage-error on chain break

private:
    std::vector<Bytes> records_;
    std::map<std::string, DidDocument, std::less<>> by_did_;
    Digest chain_{}; // genesis: all zero
};

struct CredentialBody {
    std::string issuer_did;
    std::string subject_did;
    std::uint64_t issued_at = 0;
    std::vector<std::pair<std::string, std::string>> attrs;
    bool operator==(const CredentialBody&) const = default;
};

// Canonical text form; attrs sorted by key. Input-error on newline in any
// field, '=' in a key, or duplicate keys.
std::string canonical_body(const CredentialBody& body);

Bytes encode_body(const CredentialBody& body);
CredentialBody decode_body(ByteSpan b);

// The digest that gets signed. Binds body text, holder key and a fresh nonce.
Digest credential_digest(const CredentialBody& body, const Point& subject_pub, ByteSpan nonce);

struct SignedCredential {
    CredentialBody body;
    Bytes nonce; // 32 bytes
    Signature sig;
    bool operator==(const SignedCredential&) const = default;
};

SignedCredential issue_credential(const CredentialBody& body, const Point& subject_pub,
                                  const Scalar& issuer_priv, Rng& rng);
bool verify_credential(const SignedCredential& vc, const Point& subject_pub,
                       const Point& issuer_pub);
Digest credential_hash_value(const SignedCredential& vc, const Point& subject_pub);

Bytes encode_credential(const SignedCredential& vc);
SignedCredential decode_credential(ByteSpan b);

// Possession-proof bridge: the statement any verifier can derive from public
// data plus the signature point, and the witness only the holder can form.
zkp::Statement credential_statement(const SignedCredential& vc, const Point& subject_pub,
                                    const Point& issuer_pub);
zkp::Witness credential_witness(const SignedCredential& vc, const Point& subject_pub);

} // namespace identity
} // namespace evauth
