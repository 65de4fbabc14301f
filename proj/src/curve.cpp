#include "evauth/curve.hpp"

namespace evauth {
namespace curve {

namespace {

struct CurveCtx {
    GroupParams params;
    MontCtx fp;   // mod p
    MontCtx fn;   // mod order
    U256 a_m, b_m;        // curve coefficients, Montgomery domain
    U256 gx_m, gy_m;
    U256 sqrt_exp;        // (p+1)/4, p = 3 mod 4

    CurveCtx()
        : params{
              "P-256",
              U256::from_hex("ffffffff00000001000000000000000000000000ffffffffffffffffffffffff"),
              U256::from_hex("ffffffff00000001000000000000000000000000fffffffffffffffffffffffc"),
              U256::from_hex("5ac635d8aa3a93e7b3ebbd55769886bc651d06b0cc53b0f63bce3c3e27d2604b"),
              U256::from_hex("ffffffff00000000ffffffffffffffffbce6faada7179e84f3b9cac2fc632551"),
              Point{U256::from_hex("6b17d1f2e12c4247f8bce6e563a440f277037d812deb33a0f4a13945d898c296"),
                    U256::from_hex("4fe342e2fe1a7f9b8ee7eb4a7c0f9e162bce33576b315ececbb6406837bf51f5"),
                    false}},
          fp(params.p),
          fn(params.order) {
        a_m = fp.to_mont(params.a);
        b_m = fp.to_mont(params.b);
        gx_m = fp.to_mont(params.generator.x);
        gy_m = fp.to_mont(params.generator.y);
        U256 e;
        u256_add(e, params.p, U256::from_u64(1));
        // p+1 never overflows 256 bits here (p top limb is 0xffffffff00000001,
        // low limbs all ones, +1 carries into bit 96 region only).
        for (int i = 0; i < 2; ++i) { // shift right by 2
            U256 s{};
            for (int limb = 0; limb < 4; ++limb) {
                s.w[limb] = e.w[limb] >> 1;
                if (limb < 3) s.w[limb] |= e.w[limb + 1] << 63;
            }
            e = s;
        }
        sqrt_exp = e;
    }
};

const CurveCtx& ctx() {
    static const CurveCtx c;
    return c;
}

// Jacobian point, Montgomery-domain coordinates. Z == 0 marks the identity.
struct Jac {
    U256 X{}, Y{}, Z{};
    bool is_inf() const { return Z.is_zero(); }
};

Jac jac_infinity() {
    return Jac{};
}

Jac to_jac(const Point& P) {
    if (P.inf) return jac_infinity();
    const auto& c = ctx();
    return Jac{c.fp.to_mont(P.x), c.fp.to_mont(P.y), c.fp.one_mont()};
}

Point to_affine(const Jac& J) {
    if (J.is_inf()) return Point{};
    const auto& f = ctx().fp;
    U256 zi = f.inv(J.Z);
    U256 zi2 = f.sqr(zi);
    U256 x = f.mul(J.X, zi2);
    U256 y = f.mul(J.Y, f.mul(zi2, zi));
    return Point{f.from_mont(x), f.from_mont(y), false};
}

// dbl-2001-b, a = -3.
Jac jac_dbl(const Jac& P) {
    if (P.is_inf()) return P;
    const auto& f = ctx().fp;
    U256 delta = f.sqr(P.Z);
    U256 gamma = f.sqr(P.Y);
    U256 beta = f.mul(P.X, gamma);
    U256 t0 = f.sub(P.X, delta);
    U256 t1 = f.add(P.X, delta);
    U256 prod = f.mul(t0, t1);
    U256 alpha = f.add(f.add(prod, prod), prod);
    U256 beta4 = f.add(beta, beta);
    beta4 = f.add(beta4, beta4);
    U256 beta8 = f.add(beta4, beta4);
    U256 x3 = f.sub(f.sqr(alpha), beta8);
    U256 yz = f.add(P.Y, P.Z);
    U256 z3 = f.sub(f.sub(f.sqr(yz), gamma), delta);
    U256 g2 = f.sqr(gamma);
    U256 g8 = f.add(g2, g2);
    g8 = f.add(g8, g8);
    g8 = f.add(g8, g8);
    U256 y3 = f.sub(f.mul(alpha, f.sub(beta4, x3)), g8);
    return Jac{x3, y3, z3};
}

// add-2007-bl with identity/doubling handling.
Jac jac_add(const Jac& P, const Jac& Q) {
    if (P.is_inf()) return Q;
    if (Q.is_inf()) return P;
    const auto& f = ctx().fp;
    U256 z1z1 = f.sqr(P.Z);
    U256 z2z2 = f.sqr(Q.Z);
    U256 u1 = f.mul(P.X, z2z2);
    U256 u2 = f.mul(Q.X, z1z1);
    U256 s1 = f.mul(P.Y, f.mul(Q.Z, z2z2));
    U256 s2 = f.mul(Q.Y, f.mul(P.Z, z1z1));
    if (u1 == u2) {
        if (s1 == s2) return jac_dbl(P);
        return jac_infinity();
    }
    U256 h = f.sub(u2, u1);
    U256 h2 = f.add(h, h);
    U256 i = f.sqr(h2);
    U256 j = f.mul(h, i);
    U256 r = f.sub(s2, s1);
    r = f.add(r, r);
    U256 v = f.mul(u1, i);
    U256 x3 = f.sub(f.sub(f.sqr(r), j), f.add(v, v));
    U256 s1j = f.mul(s1, j);
    U256 y3 = f.sub(f.mul(r, f.sub(v, x3)), f.add(s1j, s1j));
    U256 zz = f.add(P.Z, Q.Z);
    U256 z3 = f.mul(f.sub(f.sub(f.sqr(zz), z1z1), z2z2), h);
    return Jac{x3, y3, z3};
}

// 4-bit fixed-window ladder.
Jac jac_mul(const U256& k, const Jac& P) {
    if (k.is_zero() || P.is_inf()) return jac_infinity();
    Jac table[16];
    table[1] = P;
    for (int i = 2; i < 16; ++i) table[i] = jac_add(table[i - 1], P);
    Jac acc = jac_infinity();
    for (int w = 63; w >= 0; --w) {
        acc = jac_dbl(jac_dbl(jac_dbl(jac_dbl(acc))));
        unsigned limb = w / 16;
        unsigned shift = (w % 16) * 4;
        unsigned nib = static_cast<unsigned>((k.w[limb] >> shift) & 0xf);
        if (nib != 0) acc = jac_add(acc, table[nib]);
    }
    return acc;
}

} // namespace

const GroupParams& group() {
    return ctx().params;
}

const MontCtx& field_ctx() {
    return ctx().fp;
}

const MontCtx& order_ctx() {
    return ctx().fn;
}

bool on_curve(const Point& P) {
    if (P.inf) return true;
    const auto& c = ctx();
    if (!u256_less(P.x, c.params.p) || !u256_less(P.y, c.params.p)) return false;
    U256 xm = c.fp.to_mont(P.x);
    U256 ym = c.fp.to_mont(P.y);
    U256 lhs = c.fp.sqr(ym);
    U256 rhs = c.fp.add(c.fp.mul(c.fp.add(c.fp.sqr(xm), c.a_m), xm), c.b_m);
    return lhs == rhs;
}

Point add(const Point& P, const Point& Q) {
    return to_affine(jac_add(to_jac(P), to_jac(Q)));
}

Point dbl(const Point& P) {
    return to_affine(jac_dbl(to_jac(P)));
}

Point negate(const Point& P) {
    if (P.inf) return P;
    U256 y;
    u256_sub(y, ctx().params.p, P.y);
    if (P.y.is_zero()) y = U256{};
    return Point{P.x, y, false};
}

Point mul(const Scalar& k, const Point& P) {
    return to_affine(jac_mul(k.v, to_jac(P)));
}

Point mul_base(const Scalar& k) {
    return mul(k, group().generator);
}

Point mul_add(const Scalar& u, const Point& P, const Scalar& v, const Point& Q) {
    Jac r = jac_add(jac_mul(u.v, to_jac(P)), jac_mul(v.v, to_jac(Q)));
    return to_affine(r);
}

Bytes encode_point(const Point& P) {
    if (P.inf) return Bytes{0x00};
    Bytes out;
    out.reserve(33);
    out.push_back(P.y.bit(0) ? 0x03 : 0x02);
    append(out, P.x.be_bytes());
    return out;
}

std::optional<Point> decode_point(ByteSpan b) {
    if (b.size() == 1 && b[0] == 0x00) return Point{};
    if (b.size() != 33 || (b[0] != 0x02 && b[0] != 0x03)) return std::nullopt;
    const auto& c = ctx();
    U256 x = U256::from_be_bytes(b.subspan(1));
    if (!u256_less(x, c.params.p)) return std::nullopt;
    U256 xm = c.fp.to_mont(x);
    U256 rhs = c.fp.add(c.fp.mul(c.fp.add(c.fp.sqr(xm), c.a_m), xm), c.b_m);
    U256 ym = c.fp.pow(rhs, c.sqrt_exp);
    if (!(c.fp.sqr(ym) == rhs)) return std::nullopt; // non-residue: no such point
    U256 y = c.fp.from_mont(ym);
    bool want_odd = (b[0] == 0x03);
    if (y.bit(0) != want_odd) u256_sub(y, c.params.p, y);
    return Point{x, y, false};
}

Scalar s_from_u64(std::uint64_t v) {
    return Scalar{U256::from_u64(v)};
}

Scalar s_reduce(const U256& v) {
    return Scalar{ctx().fn.reduce(v)};
}

Scalar s_from_digest(ByteSpan d) {
    if (d.size() >= 32) return s_reduce(U256::from_be_bytes(d.first(32)));
    Bytes padded(32 - d.size(), 0);
    append(padded, d);
    return s_reduce(U256::from_be_bytes(padded));
}

Scalar s_add(const Scalar& a, const Scalar& b) {
    return Scalar{ctx().fn.add(a.v, b.v)};
}

Scalar s_sub(const Scalar& a, const Scalar& b) {
    return Scalar{ctx().fn.sub(a.v, b.v)};
}

Scalar s_mul(const Scalar& a, const Scalar& b) {
    return Scalar{ctx().fn.mul_std(a.v, b.v)};
}

Scalar s_neg(const Scalar& a) {
    return Scalar{ctx().fn.neg(a.v)};
}

Scalar s_inv(const Scalar& a) {
    if (a.is_zero()) fail(Err::Precondition, "scalar inverse of zero");
    return Scalar{ctx().fn.inv_std(a.v)};
}

Scalar s_random(Rng& rng) {
    for (;;) {
        U256 v = rng.u256();
        if (u256_less(v, group().order)) return Scalar{v};
    }
}

Scalar s_random_nonzero(Rng& rng) {
    for (;;) {
        Scalar s = s_random(rng);
        if (!s.is_zero()) return s;
    }
}

Bytes s_bytes(const Scalar& a) {
    return a.v.be_bytes();
}

Scalar s_from_bytes(ByteSpan b) {
    if (b.size() != 32) fail(Err::Decode, "scalar must be 32 bytes");
    U256 v = U256::from_be_bytes(b);
    if (!u256_less(v, group().order)) fail(Err::Decode, "scalar out of range");
    return Scalar{v};
}

} // namespace curve
} // namespace evauth
