#include "supercong/binomials.hpp"

#include <stdexcept>

namespace supercong {

BinomStream::BinomStream(Kind kind, u64 p) : kind_(kind), ctx_(p) {}

ValUnit BinomStream::next() {
    const u64 k = k_;
    if (k + 1 > ctx_.p() - 1)
        throw index_too_large_error("BinomStream: k+1 exceeds p-1");
    if (kind_ == Kind::central) {
        // C(2k+2,k+1) = C(2k,k) * 2(2k+1) / (k+1)
        ValUnit num = ctx_.from_int(i64(2 * (2 * k + 1)));
        ValUnit den = ctx_.from_int(i64(k + 1));
        cur_ = ctx_.div(ctx_.mul(cur_, num), den);
    } else {
        // C(4k+4,2k+2) = C(4k,2k) * (4k+1)(4k+2)(4k+3)(4k+4) / ((2k+1)(2k+2))^2
        ValUnit num = ctx_.from_int(i64(4 * k + 1));
        num = ctx_.mul(num, ctx_.from_int(i64(4 * k + 2)));
        num = ctx_.mul(num, ctx_.from_int(i64(4 * k + 3)));
        num = ctx_.mul(num, ctx_.from_int(i64(4 * k + 4)));
        ValUnit den = ctx_.mul(ctx_.from_int(i64(2 * k + 1)), ctx_.from_int(i64(2 * k + 2)));
        den = ctx_.mul(den, den);
        cur_ = ctx_.div(ctx_.mul(cur_, num), den);
    }
    ++k_;
    return cur_;
}

namespace {
// Inverse of m lifted mod p^3; throws inapplicable_error when p | num(m).
ValUnit lift_inverse(const PadicCtx& ctx, const PRational& m) {
    if (m.is_zero() || to_residue(m.num, ctx.p()) == 0)
        throw inapplicable_error("sum: p divides the numerator of m");
    return ctx.from_unit(m.inverse().lift(ctx.p3()));
}
}  // namespace

u64 sum_cb3_over_m(u64 p, const PRational& m, SumRange range) {
    PadicCtx ctx(p);
    ValUnit w = lift_inverse(ctx, m);
    const u64 upper = range == SumRange::half ? (p - 1) / 2 : p - 1;
    BinomStream bs(BinomStream::Kind::central, p);
    ValUnit acc = ctx.from_int(1);  // k = 0
    ValUnit wk{0, 1};
    ValUnit c = bs.value();
    for (u64 k = 1; k <= upper; ++k) {
        c = bs.next();
        wk = ctx.mul(wk, w);
        ValUnit cube = ctx.mul(ctx.mul(c, c), c);
        acc = ctx.add(acc, ctx.mul(cube, wk));
    }
    return ctx.reduce_mod_p2(acc);
}

u64 sum_c2k_c4k_over_m(u64 p, const PRational& m, QuarterRange range, Modulus mod) {
    PadicCtx ctx(p);
    ValUnit w = lift_inverse(ctx, m);
    const u64 quarter = p / 4;
    const u64 upper = range == QuarterRange::quarter ? quarter : p - 1;
    BinomStream central(BinomStream::Kind::central, p);
    BinomStream quartic(BinomStream::Kind::quartic, p);
    ValUnit acc = ctx.from_int(1);
    ValUnit wk{0, 1};
    for (u64 k = 1; k <= upper; ++k) {
        ValUnit c = central.next();
        ValUnit q = quartic.next();
        wk = ctx.mul(wk, w);
        ValUnit term = ctx.mul(ctx.mul(c, q), wk);
        if (k > quarter && !term.is_zero() && term.e < 1)
            throw std::logic_error("sum_c2k_c4k_over_m: tail term not divisible by p");
        acc = ctx.add(acc, term);
    }
    return ctx.reduce(acc, mod == Modulus::p ? p : ctx.p2());
}

u64 sum_cb2_c4k_over_m(u64 p, const PRational& m) {
    PadicCtx ctx(p);
    ValUnit w = lift_inverse(ctx, m);
    BinomStream central(BinomStream::Kind::central, p);
    BinomStream quartic(BinomStream::Kind::quartic, p);
    ValUnit acc = ctx.from_int(1);
    ValUnit wk{0, 1};
    for (u64 k = 1; k <= p - 1; ++k) {
        ValUnit c = central.next();
        ValUnit q = quartic.next();
        wk = ctx.mul(wk, w);
        acc = ctx.add(acc, ctx.mul(ctx.mul(ctx.mul(c, c), q), wk));
    }
    return ctx.reduce_mod_p2(acc);
}

u64 a_p_lambda(u64 p, const PRational& lambda) {
    if (p < 3 || p % 2 == 0)
        throw invalid_modulus_error("a_p_lambda: p must be an odd prime");
    const u64 n = (p - 1) / 2;
    const u64 lam = lambda.lift(p);
    const u64 lam_p = pow_mod(lam, p, p);
    u64 b1 = 1;   // C(n, k)
    u64 b2 = 1;   // C(n+k, 2k)
    u64 lpk = 1;  // lambda^{kp}
    u64 acc = 1;  // k = 0 term
    for (u64 k = 0; k < n; ++k) {
        b1 = mul_mod(mul_mod(b1, n - k, p), inv_mod(i64(k + 1), p), p);
        b2 = mul_mod(b2, mul_mod(to_residue(i64(n + k + 1), p), n - k, p), p);
        b2 = mul_mod(b2, inv_mod(i64((2 * k + 1) % p), p), p);
        b2 = mul_mod(b2, inv_mod(i64((2 * k + 2) % p), p), p);
        lpk = mul_mod(lpk, lam_p, p);
        acc = add_mod(acc, mul_mod(mul_mod(b1, b1, p), mul_mod(b2, lpk, p), p), p);
    }
    return acc;
}

u64 full_sum_weighted(u64 p, u64 w_mod_p2, int central_power) {
    if (central_power != 1 && central_power != 2)
        throw std::invalid_argument("full_sum_weighted: central_power must be 1 or 2");
    PadicCtx ctx(p);
    ValUnit w = ctx.from_int(i64(w_mod_p2 % ctx.p2()));
    BinomStream central(BinomStream::Kind::central, p);
    BinomStream quartic(BinomStream::Kind::quartic, p);
    ValUnit acc = ctx.from_int(1);
    ValUnit wk{0, 1};
    for (u64 k = 1; k <= p - 1; ++k) {
        ValUnit c = central.next();
        ValUnit q = quartic.next();
        wk = ctx.mul(wk, w);
        ValUnit term = ctx.mul(c, q);
        if (central_power == 2) term = ctx.mul(term, c);
        acc = ctx.add(acc, ctx.mul(term, wk));
    }
    return ctx.reduce_mod_p2(acc);
}

u64 quarter_sum_weight(u64 p, u64 w, u64 modulus) {
    u64 acc = 1 % modulus;
    u64 c = 1;   // C(4k,2k) C(2k,k) mod modulus
    u64 wk = 1;
    w %= modulus;
    if (p / 4 == 0) return acc;
    std::vector<u64> inv = inverse_table(p / 2 + 2, modulus, p);
    for (u64 k = 0; k < p / 4; ++k) {
        u64 num = to_residue(i64(4 * k + 1), modulus);
        num = mul_mod(num, to_residue(i64(4 * k + 2), modulus), modulus);
        num = mul_mod(num, to_residue(i64(4 * k + 3), modulus), modulus);
        num = mul_mod(num, to_residue(i64(4 * k + 4), modulus), modulus);
        num = mul_mod(num, mul_mod(to_residue(i64(2 * k + 1), modulus), 2, modulus), modulus);
        u64 den = mul_mod(mul_mod(inv[2 * k + 1], inv[2 * k + 2], modulus), inv[k + 1], modulus);
        den = mul_mod(den, mul_mod(inv[2 * k + 1], inv[2 * k + 2], modulus), modulus);
        c = mul_mod(c, mul_mod(num, den, modulus), modulus);
        wk = mul_mod(wk, w, modulus);
        acc = add_mod(acc, mul_mod(c, wk, modulus), modulus);
    }
    return acc;
}

}  // namespace supercong
