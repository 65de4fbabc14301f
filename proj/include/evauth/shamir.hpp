#pragma once
#include "evauth/bytes.hpp"
#include "evauth/curve.hpp"
#include "evauth/rng.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace evauth {
namespace shamir {

// Point on the sharing polynomial. Index 0 is the secret itself and is never
// issued as a share.
struct Share {
    std::uint32_t x = 0;
    Scalar y{};
    bool operator==(const Share&) const = default;
};

// k-of-n split over the scalar field. Coefficients above the constant term
// are drawn from rng.
std::vector<Share> split(const Scalar& secret, std::uint32_t k, std::uint32_t n, Rng& rng);

// Same but with the k-1 non-constant coefficients supplied by the caller.
// Exists so tests can pin the polynomial.
std::vector<Share> split_with_coeffs(const Scalar& secret,
                                     const std::vector<Scalar>& coeffs,
                                     std::uint32_t n);

// Lagrange interpolation at zero. Uses the shares given; requires at least k
// of them with distinct indices (threshold-error / input-error otherwise).
Scalar reconstruct(const std::vector<Share>& shares, std::uint32_t k);

// Value at index x of the unique polynomial through (0, candidate) and all of
// partial. Given k-1 genuine shares this fabricates a share completing them
// to any candidate secret, which is exactly why k-1 shares reveal nothing.
Share complete(const std::vector<Share>& partial, const Scalar& candidate, std::uint32_t x);

// Encrypted share file. The check field binds the passphrase and label, not
// the ciphertext, so passphrase mistakes are named while a flipped ciphertext
// byte surfaces later as a corrupt share.
Bytes encode_share(const Share& s, std::string_view label, std::string_view passphrase);

struct OpenedShare {
    Share share;
    std::string label;
};

// Throws decode-error on malformed bytes, share-decrypt-error on a check
// mismatch.
OpenedShare open_share(ByteSpan file, std::string_view passphrase);

} // namespace shamir
} // namespace evauth
