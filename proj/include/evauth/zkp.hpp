#pragma once
#include "evauth/bytes.hpp"
#include "evauth/curve.hpp"
#include "evauth/ecdsa.hpp"
#include "evauth/rng.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>

namespace evauth {
namespace zkp {

// Programmable challenge table. A CRS created in test mode carries one and
// consults it before falling back to the hash; production CRS never does.
class ChallengeOracle {
public:
    void program(const Bytes& key, const Scalar& c);
    std::optional<Scalar> lookup(const Bytes& key) const;
    std::size_t size() const { return entries_.size(); }

private:
    std::map<Bytes, Scalar> entries_;
};

struct Crs {
    Bytes tag;
    std::shared_ptr<ChallengeOracle> oracle; // non-null only in test mode
    bool test_mode() const { return oracle != nullptr; }
};

struct Trapdoor {
    std::shared_ptr<ChallengeOracle> oracle;
};

struct SetupResult {
    Crs crs;
    Trapdoor trapdoor; // oracle is null unless test mode was requested
};

SetupResult setup(const std::string& relation_id, bool test_mode = false);

// Claim: the prover knows a with a*B = R, where B is derived from a signed
// credential digest and the issuer key. Proving knowledge of a is equivalent
// to holding a valid issuer signature on that digest.
struct Statement {
    Point B;
    Point R;
};

struct Witness {
    Scalar a;
};

struct Proof {
    Point t;
    Scalar z;
};

// B = G + (r / e) * Q where e is the credential digest value, r = R.x mod n
// and Q is the issuer public key.
Statement possession_statement(const Digest& digest, const Point& R,
                               const Point& issuer_pub);
Witness possession_witness(const Digest& digest, const Signature& sig);

Bytes statement_bytes(const Statement& st);
Scalar challenge(const Crs& crs, const Statement& st, const Point& t);

Proof prove(const Crs& crs, const Statement& st, const Witness& w, Rng& rng);
bool verify(const Crs& crs, const Statement& st, const Proof& pr);

// Produces an accepting proof with no witness by programming the challenge
// table. Requires a test-mode CRS.
Proof simulate(const Crs& crs, const Trapdoor& td, const Statement& st, Rng& rng);

// Interactive form of the same sigma protocol. Lets a caller reuse one
// commitment across two challenges, which is exactly what the extractor needs.
class SigmaProver {
public:
    SigmaProver(const Statement& st, const Witness& w, Rng& rng);
    const Point& commitment() const { return t_; }
    Scalar respond(const Scalar& c) const;

private:
    Witness w_;
    Scalar omega_;
    Point t_;
};

// Witness from two accepting transcripts sharing a commitment:
// a = (z1 - z2) / (c1 - c2).
Scalar extract(const Scalar& c1, const Scalar& z1,
                      const Scalar& c2, const Scalar& z2);

// Wire form: t (33 bytes compressed) then z (32 bytes big endian).
Bytes encode_proof(const Proof& pr);
std::optional<Proof> decode_proof(ByteSpan wire);

} // namespace zkp
} // namespace evauth
