#pragma once

#include <optional>
#include <string>

#include "evauth/errors.hpp"
#include "evauth/fp.hpp"
#include "evauth/rng.hpp"
#include "evauth/sha256.hpp"

namespace evauth {

// Scalar modulo the group order. Invariant: v < order.
struct Scalar {
    U256 v{};
    bool operator==(const Scalar&) const = default;
    bool is_zero() const { return v.is_zero(); }
};

// Affine point, standard-domain coordinates.
struct Point {
    U256 x{}, y{};
    bool inf = true;
    bool operator==(const Point&) const = default;
};

struct GroupParams {
    std::string name;
    U256 p;      // field prime
    U256 a, b;   // curve coefficients
    U256 order;  // prime group order
    Point generator;
};

namespace curve {

const GroupParams& group(); // NIST P-256
const MontCtx& field_ctx();
const MontCtx& order_ctx();

bool on_curve(const Point& P);
Point add(const Point& P, const Point& Q);
Point dbl(const Point& P);
Point negate(const Point& P);
Point mul(const Scalar& k, const Point& P);
Point mul_base(const Scalar& k);
Point mul_add(const Scalar& u, const Point& P, const Scalar& v, const Point& Q); // uP + vQ

// Compressed SEC1-style encoding: 0x02/0x03 prefix + 32-byte x.
// The identity encodes as the single byte 0x00.
Bytes encode_point(const Point& P);
std::optional<Point> decode_point(ByteSpan b);

Scalar s_from_u64(std::uint64_t v);
Scalar s_reduce(const U256& v);
Scalar s_from_digest(ByteSpan d);   // leftmost 32 bytes, reduced mod order
Scalar s_add(const Scalar& a, const Scalar& b);
Scalar s_sub(const Scalar& a, const Scalar& b);
Scalar s_mul(const Scalar& a, const Scalar& b);
Scalar s_neg(const Scalar& a);
Scalar s_inv(const Scalar& a);      // Precondition error on zero
Scalar s_random(Rng& rng);          // uniform via rejection sampling
Scalar s_random_nonzero(Rng& rng);
Bytes s_bytes(const Scalar& a);     // 32 bytes big endian
Scalar s_from_bytes(ByteSpan b);    // exactly 32 bytes, must be < order

} // namespace curve

} // namespace evauth
