#include "evauth/shamir.hpp"

#include "evauth/errors.hpp"
#include "evauth/hash.hpp"

#include <algorithm>
#include <set>

namespace evauth {
namespace shamir {

using namespace curve;

namespace {

constexpr char kMagic[8] = {'E', 'V', 'A', 'U', 'T', 'H', 'S', 'H'};
constexpr std::uint8_t kVersion = 1;

Scalar eval_poly(const Scalar& secret, const std::vector<Scalar>& coeffs, std::uint32_t x) {
    // Horner from the top coefficient down to the constant term.
    Scalar xs = s_from_u64(x);
    Scalar acc{};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = s_add(s_mul(acc, xs), *it);
    return s_add(s_mul(acc, xs), secret);
}

Bytes share_key(std::string_view passphrase, std::string_view label) {
    return digest_bytes(hash_parts(to_bytes(passphrase), to_bytes(label), to_bytes("share-key")));
}

} // namespace

std::vector<Share> split_with_coeffs(const Scalar& secret,
                                     const std::vector<Scalar>& coeffs,
                                     std::uint32_t n) {
    std::uint32_t k = static_cast<std::uint32_t>(coeffs.size()) + 1;
    if (k < 1 || k > n) fail(Err::Input, "threshold must satisfy 1 <= k <= n");
    if (n > 4096) fail(Err::Input, "too many shares");
    std::vector<Share> out;
    out.reserve(n);
    for (std::uint32_t i = 1; i <= n; ++i)
        out.push_back(Share{i, eval_poly(secret, coeffs, i)});
    return out;
}

std::vector<Share> split(const Scalar& secret, std::uint32_t k, std::uint32_t n, Rng& rng) {
    if (k < 1 || k > n) fail(Err::Input, "threshold must satisfy 1 <= k <= n");
    std::vector<Scalar> coeffs;
    coeffs.reserve(k - 1);
    for (std::uint32_t i = 1; i < k; ++i) coeffs.push_back(s_random(rng));
    return split_with_coeffs(secret, coeffs, n);
}

Scalar reconstruct(const std::vector<Share>& shares, std::uint32_t k) {
    if (k < 1) fail(Err::Input, "threshold must be positive");
    // Take the first k distinct indices.
    std::vector<Share> pts;
    std::set<std::uint32_t> seen;
    for (const Share& s : shares) {
        if (s.x == 0) fail(Err::Input, "share index zero is reserved");
        if (!seen.insert(s.x).second) continue;
        pts.push_back(s);
        if (pts.size() == k) break;
    }
    if (pts.size() < k) fail(Err::Threshold, "not enough distinct shares");

    Scalar acc{};
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Scalar num = s_from_u64(1);
        Scalar den = s_from_u64(1);
        Scalar xi = s_from_u64(pts[i].x);
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j == i) continue;
            Scalar xj = s_from_u64(pts[j].x);
            num = s_mul(num, xj);
            den = s_mul(den, s_sub(xj, xi));
        }
        acc = s_add(acc, s_mul(pts[i].y, s_mul(num, s_inv(den))));
    }
    return acc;
}

Share complete(const std::vector<Share>& partial, const Scalar& candidate, std::uint32_t x) {
    if (x == 0) fail(Err::Input, "share index zero is reserved");
    std::set<std::uint32_t> seen{0};
    for (const Share& s : partial) {
        if (s.x == 0) fail(Err::Input, "share index zero is reserved");
        if (!seen.insert(s.x).second) fail(Err::Input, "duplicate share index");
        if (s.x == x) fail(Err::Input, "target index already present");
    }
    // Lagrange basis through (0, candidate) and the partial points, at x.
    std::vector<std::pair<std::uint32_t, Scalar>> pts;
    pts.emplace_back(0, candidate);
    for (const Share& s : partial) pts.emplace_back(s.x, s.y);

    Scalar xt = s_from_u64(x);
    Scalar acc{};
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Scalar num = s_from_u64(1);
        Scalar den = s_from_u64(1);
        Scalar xi = s_from_u64(pts[i].first);
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j == i) continue;
            Scalar xj = s_from_u64(pts[j].first);
            num = s_mul(num, s_sub(xt, xj));
            den = s_mul(den, s_sub(xi, xj));
        }
        acc = s_add(acc, s_mul(pts[i].second, s_mul(num, s_inv(den))));
    }
    return Share{x, acc};
}

Bytes encode_share(const Share& s, std::string_view label, std::string_view passphrase) {
    if (s.x == 0) fail(Err::Input, "share index zero is reserved");
    Bytes key = share_key(passphrase, label);
    Bytes out(kMagic, kMagic + sizeof(kMagic));
    out.push_back(kVersion);
    put_be32(out, s.x);
    Bytes lbl = to_bytes(label);
    put_be32(out, static_cast<std::uint32_t>(lbl.size()));
    append(out, lbl);
    append(out, digest_bytes(hash_parts(key, lbl, to_bytes("chk"))));
    append(out, keystream_wrap(key, "share", s_bytes(s.y)));
    return out;
}

OpenedShare open_share(ByteSpan file, std::string_view passphrase) {
    if (file.size() < 8 + 1 + 4 + 4 || !equal_bytes(file.first(8), ByteSpan(reinterpret_cast<const std::uint8_t*>(kMagic), 8)))
        fail(Err::Decode, "not a share file");
    if (file[8] != kVersion) fail(Err::Decode, "unsupported share file version");
    std::uint32_t x = read_be32(file.data() + 9);
    std::uint32_t lbl_len = read_be32(file.data() + 13);
    std::size_t need = 17 + std::size_t(lbl_len) + 32 + 32;
    if (file.size() != need) fail(Err::Decode, "share file truncated");
    ByteSpan lbl = file.subspan(17, lbl_len);
    ByteSpan chk = file.subspan(17 + lbl_len, 32);
    ByteSpan ct = file.subspan(17 + lbl_len + 32, 32);

    Bytes key = share_key(passphrase, to_string(lbl));
    Digest want = hash_parts(key, lbl, to_bytes("chk"));
    if (!equal_bytes(chk, digest_span(want)))
        fail(Err::ShareDecrypt, "passphrase or label mismatch");

    Bytes y = keystream_wrap(key, "share", ct);
    U256 v = U256::from_be_bytes(y);
    if (!u256_less(v, group().order)) {
        // Tampered ciphertext can land outside the field; still surface it as
        // a share rather than a decode problem so recovery names it.
        v = order_ctx().reduce(v);
    }
    return OpenedShare{Share{x, Scalar{v}}, to_string(lbl)};
}

} // namespace shamir
} // namespace evauth
