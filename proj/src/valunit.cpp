#include "supercong/valunit.hpp"

namespace supercong {

PadicCtx::PadicCtx(u64 p) : p_(p) {
    if (p < 3 || p % 2 == 0)
        throw invalid_modulus_error("PadicCtx: p must be an odd prime");
    if (p >= (u64(1) << 21))
        throw invalid_modulus_error("PadicCtx: p^3 must fit 64 bits (p < 2^21)");
    p2_ = p * p;
    p3_ = p2_ * p;
}

ValUnit PadicCtx::from_int(i64 v) const {
    if (v == 0) return ValUnit::zero();
    u64 mag = v < 0 ? u64(-(v + 1)) + 1 : u64(v);
    u32 e = 0;
    while (mag % p_ == 0) { mag /= p_; ++e; }
    u64 u = mag % p3_;
    if (v < 0) u = p3_ - u;
    return {e, u};
}

ValUnit PadicCtx::from_unit(u64 residue) const {
    residue %= p3_;
    if (residue % p_ == 0)
        throw not_invertible_error("PadicCtx::from_unit: residue divisible by p");
    return {0, residue};
}

ValUnit PadicCtx::mul(ValUnit a, ValUnit b) const {
    if (a.is_zero() || b.is_zero()) return ValUnit::zero();
    return {a.e + b.e, mul_mod(a.u, b.u, p3_)};
}

ValUnit PadicCtx::neg(ValUnit a) const {
    if (a.is_zero() || a.u == 0) return a;
    return {a.e, p3_ - a.u};
}

ValUnit PadicCtx::add(ValUnit a, ValUnit b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.e > b.e) std::swap(a, b);
    u64 shifted = b.u;
    for (u32 i = a.e; i < b.e && shifted != 0; ++i)
        shifted = mul_mod(shifted, p_, p3_);
    u64 s = add_mod(a.u, shifted, p3_);
    u32 e = a.e;
    while (s != 0 && s % p_ == 0) { s /= p_; ++e; }
    if (s == 0) return {a.e + 3, 0};  // cancelled past tracked precision
    return {e, s};
}

ValUnit PadicCtx::sub(ValUnit a, ValUnit b) const { return add(a, neg(b)); }

ValUnit PadicCtx::div(ValUnit a, ValUnit b) const {
    if (b.is_zero() || b.u % p_ == 0)
        throw not_invertible_error("PadicCtx::div: divisor unit not invertible");
    if (a.is_zero()) return a;
    if (a.e < b.e)
        throw not_invertible_error("PadicCtx::div: negative valuation");
    if (a.u == 0) return {a.e - b.e, 0};
    return {a.e - b.e, mul_mod(a.u, inv_mod(i64(b.u), p3_), p3_)};
}

u64 PadicCtx::reduce(ValUnit a, u64 m) const {
    if (a.is_zero()) return 0;
    u64 r = a.u % m;
    for (u32 i = 0; i < a.e && r != 0; ++i) r = mul_mod(r, p_, m);
    return r;
}

}  // namespace supercong
