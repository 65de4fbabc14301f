#include "evauth/zkp.hpp"

#include "evauth/errors.hpp"
#include "evauth/hash.hpp"

namespace evauth {
namespace zkp {

using namespace curve;

void ChallengeOracle::program(const Bytes& key, const Scalar& c) {
    entries_[key] = c;
}

std::optional<Scalar> ChallengeOracle::lookup(const Bytes& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

SetupResult setup(const std::string& relation_id, bool test_mode) {
    SetupResult out;
    out.crs.tag = digest_bytes(hash_parts(to_bytes("zkp-crs"), to_bytes(relation_id)));
    if (test_mode) {
        auto oracle = std::make_shared<ChallengeOracle>();
        out.crs.oracle = oracle;
        out.trapdoor.oracle = oracle;
    }
    return out;
}

Statement possession_statement(const Digest& digest, const Point& R,
                               const Point& issuer_pub) {
    if (R.inf || issuer_pub.inf) fail(Err::Precondition, "possession statement needs affine points");
    if (!on_curve(R) || !on_curve(issuer_pub)) fail(Err::Precondition, "possession statement point off curve");
    Scalar e = s_from_digest(digest);
    Scalar r = s_reduce(R.x);
    Scalar coeff = s_mul(r, s_inv(e));
    Statement st;
    st.B = add(group().generator, mul(coeff, issuer_pub));
    st.R = R;
    return st;
}

Witness possession_witness(const Digest& digest, const Signature& sig) {
    Scalar e = s_from_digest(digest);
    return Witness{s_mul(e, s_inv(sig.s))};
}

Bytes statement_bytes(const Statement& st) {
    return concat({encode_point(st.B), encode_point(st.R)});
}

namespace {

Bytes challenge_key(const Crs& crs, const Statement& st, const Point& t) {
    return concat({crs.tag, statement_bytes(st), encode_point(t)});
}

} // namespace

Scalar challenge(const Crs& crs, const Statement& st, const Point& t) {
    if (crs.oracle) {
        if (auto programmed = crs.oracle->lookup(challenge_key(crs, st, t)))
            return *programmed;
    }
    return s_from_digest(hash_parts(crs.tag, statement_bytes(st), encode_point(t)));
}

Proof prove(const Crs& crs, const Statement& st, const Witness& w, Rng& rng) {
    if (st.B.inf) fail(Err::Precondition, "degenerate proof base");
    Scalar omega = s_random_nonzero(rng);
    Proof pr;
    pr.t = mul(omega, st.B);
    Scalar c = challenge(crs, st, pr.t);
    pr.z = s_add(omega, s_mul(c, w.a));
    return pr;
}

bool verify(const Crs& crs, const Statement& st, const Proof& pr) {
    if (st.B.inf || st.R.inf) return false;
    if (!pr.t.inf && !on_curve(pr.t)) return false;
    Scalar c = challenge(crs, st, pr.t);
    Point lhs = mul(pr.z, st.B);
    Point rhs = add(pr.t, mul(c, st.R));
    return lhs == rhs;
}

Proof simulate(const Crs& crs, const Trapdoor& td, const Statement& st, Rng& rng) {
    if (!crs.test_mode() || td.oracle != crs.oracle)
        fail(Err::Capability, "simulation needs a matching test-mode setup");
    Proof pr;
    Scalar c = s_random_nonzero(rng);
    pr.z = s_random(rng);
    // t = z*B - c*R makes the verification equation hold for challenge c.
    pr.t = mul_add(pr.z, st.B, s_neg(c), st.R);
    td.oracle->program(challenge_key(crs, st, pr.t), c);
    return pr;
}

SigmaProver::SigmaProver(const Statement& st, const Witness& w, Rng& rng) : w_(w) {
    if (st.B.inf) fail(Err::Precondition, "degenerate proof base");
    omega_ = s_random_nonzero(rng);
    t_ = mul(omega_, st.B);
}

Scalar SigmaProver::respond(const Scalar& c) const {
    return s_add(omega_, s_mul(c, w_.a));
}

Scalar extract(const Scalar& c1, const Scalar& z1, const Scalar& c2, const Scalar& z2) {
    Scalar dc = s_sub(c1, c2);
    if (dc.v.is_zero()) fail(Err::Precondition, "extraction needs distinct challenges");
    return s_mul(s_sub(z1, z2), s_inv(dc));
}

Bytes encode_proof(const Proof& pr) {
    if (pr.t.inf) fail(Err::Precondition, "cannot encode identity commitment");
    return concat({encode_point(pr.t), s_bytes(pr.z)});
}

std::optional<Proof> decode_proof(ByteSpan wire) {
    if (wire.size() != 65) return std::nullopt;
    auto t = decode_point(wire.first(33));
    if (!t || t->inf) return std::nullopt;
    U256 z = U256::from_be_bytes(wire.subspan(33));
    if (!u256_less(z, group().order)) return std::nullopt;
    return Proof{*t, Scalar{z}};
}

} // namespace zkp
} // namespace evauth
