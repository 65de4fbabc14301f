#pragma once
#include "evauth/hash.hpp"

#include <initializer_list>
#include <map>
#include <string>

namespace evauth {

// Whether a hash builds a value the protocol sends or keeps (Construct) or
// recomputes something only to compare it (Check). Cost accounting sums the
// two classes separately.
enum class HashClass { Construct, Check };

struct OpCounters {
    std::map<std::string, int> construct_hash; // label -> count
    std::map<std::string, int> check_hash;

    int sign_ops = 0;        // ECDSA signatures created
    int verify_ops = 0;      // ECDSA signatures checked
    int prove_ops = 0;       // possession proofs generated
    int proof_check_ops = 0; // possession proofs verified
    int wrap_ops = 0;        // keystream masks applied or removed
    int seal_ops = 0;        // hybrid envelopes built or opened

    int construct_total() const {
        int n = 0;
        for (const auto& [k, v] : construct_hash) n += v;
        return n;
    }
    int check_total() const {
        int n = 0;
        for (const auto& [k, v] : check_hash) n += v;
        return n;
    }

    void merge(const OpCounters& o) {
        for (const auto& [k, v] : o.construct_hash) construct_hash[k] += v;
        for (const auto& [k, v] : o.check_hash) check_hash[k] += v;
        sign_ops += o.sign_ops;
        verify_ops += o.verify_ops;
        prove_ops += o.prove_ops;
        proof_check_ops += o.proof_check_ops;
        wrap_ops += o.wrap_ops;
        seal_ops += o.seal_ops;
    }
};

// hash_parts with attribution. Hashes performed inside lower layers
// (credential digests, proof challenges, envelope internals) are attributed
// by incrementing the matching counter next to the call instead.
inline Digest counted_hash(OpCounters* c, HashClass cls, const std::string& label,
                           std::initializer_list<ByteSpan> parts) {
    if (c) {
        auto& m = (cls == HashClass::Construct) ? c->construct_hash : c->check_hash;
        ++m[label];
    }
    return hash_parts(parts);
}

} // namespace evauth
