#include "supercong/legendre.hpp"

namespace supercong {

FieldElem legendre_p(u64 n, const FieldElem& x) {
    const FieldDesc& d = x.desc();
    if (n >= d.p)
        throw index_too_large_error("legendre_p: n must be below the characteristic");
    FieldElem pm(1, d);
    if (n == 0) return pm;
    std::vector<u64> inv = inverse_table(n, d.p, d.p);
    FieldElem pc = x;
    for (u64 k = 1; k < n; ++k) {
        // (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}
        FieldElem t = x * pc * FieldElem(2 * k + 1, d) - pm * FieldElem(k, d);
        FieldElem nxt = t * FieldElem(inv[k + 1], d);
        pm = pc;
        pc = nxt;
    }
    return pc;
}

u64 legendre_p_mod(u64 n, u64 x, u64 modulus, u64 p) {
    if (n >= p)
        throw index_too_large_error("legendre_p_mod: recurrence divisor hits p");
    x %= modulus;
    u64 pm = 1 % modulus;
    if (n == 0) return pm;
    std::vector<u64> inv = inverse_table(n, modulus, p);
    u64 pc = x;
    for (u64 k = 1; k < n; ++k) {
        u64 t = sub_mod(mul_mod(mul_mod(to_residue(i64(2 * k + 1), modulus), x, modulus), pc, modulus),
                        mul_mod(to_residue(i64(k), modulus), pm, modulus), modulus);
        u64 nxt = mul_mod(t, inv[k + 1], modulus);
        pm = pc;
        pc = nxt;
    }
    return pc;
}

u64 legendre_p_mod_p2(u64 n, const PRational& x, u64 p) {
    const u64 p2 = p * p;
    return legendre_p_mod(n, x.lift(p2), p2, p);
}

namespace {
// c_{k+1}/c_k for C(n,k) C(n+k,k) C(2k,k): (n-k)(n+k+1) 2(2k+1) / (k+1)^3.
u64 s_coeff_step(u64 c, u64 n, u64 k, u64 modulus, const std::vector<u64>& inv) {
    u64 num = mul_mod(to_residue(i64(n - k), modulus), to_residue(i64(n + k + 1), modulus), modulus);
    num = mul_mod(num, to_residue(i64(2 * (2 * k + 1)), modulus), modulus);
    u64 d = inv[k + 1];
    u64 den = mul_mod(mul_mod(d, d, modulus), d, modulus);
    return mul_mod(c, mul_mod(num, den, modulus), modulus);
}
}  // namespace

FieldElem s_poly(u64 n, const FieldElem& x) {
    const FieldDesc& d = x.desc();
    if (n >= d.p) throw index_too_large_error("s_poly: n must be below p");
    FieldElem acc(1, d);
    FieldElem xk(1, d);
    u64 c = 1;
    std::vector<u64> inv = inverse_table(n, d.p, d.p);
    for (u64 k = 0; k < n; ++k) {
        c = s_coeff_step(c, n, k, d.p, inv);
        xk = xk * x;
        acc = acc + xk * FieldElem(c, d);
    }
    return acc;
}

u64 s_poly_mod(u64 n, u64 x, u64 modulus, u64 p) {
    if (n >= p) throw index_too_large_error("s_poly_mod: n must be below p");
    x %= modulus;
    u64 acc = 1 % modulus;
    u64 xk = 1 % modulus;
    u64 c = 1 % modulus;
    std::vector<u64> inv = inverse_table(n, modulus, p);
    for (u64 k = 0; k < n; ++k) {
        c = s_coeff_step(c, n, k, modulus, inv);
        xk = mul_mod(xk, x, modulus);
        acc = add_mod(acc, mul_mod(c, xk, modulus), modulus);
    }
    return acc;
}

FieldElem legendre_p_quarter(const FieldElem& t, u64 p) {
    if (p <= 3) throw invalid_modulus_error("legendre_p_quarter: requires p > 3");
    const FieldDesc& d = t.desc();
    FieldElem by_recurrence = legendre_p(p / 4, t);

    // truncated-sum route: sum_{k<=[p/4]} C(4k,2k) C(2k,k) ((1-t)/128)^k
    FieldElem w = (FieldElem(1, d) - t) * FieldElem(inv_mod(128, p), d);
    FieldElem acc(1, d);
    FieldElem wk(1, d);
    u64 c = 1;
    std::vector<u64> inv = inverse_table(p / 2 + 2, p, p);
    for (u64 k = 0; k < p / 4; ++k) {
        u64 num = to_residue(i64(4 * k + 1), p);
        num = mul_mod(num, to_residue(i64(4 * k + 2), p), p);
        num = mul_mod(num, to_residue(i64(4 * k + 3), p), p);
        num = mul_mod(num, to_residue(i64(4 * k + 4), p), p);
        num = mul_mod(num, mul_mod(to_residue(i64(2 * k + 1), p), 2, p), p);
        u64 den = mul_mod(mul_mod(inv[2 * k + 1], inv[2 * k + 2], p), inv[k + 1], p);
        den = mul_mod(den, mul_mod(inv[2 * k + 1], inv[2 * k + 2], p), p);
        c = mul_mod(c, mul_mod(num, den, p), p);
        wk = wk * w;
        acc = acc + wk * FieldElem(c, d);
    }
    if (!(acc == by_recurrence))
        throw std::logic_error("legendre_p_quarter: recurrence and truncated sum disagree");
    return by_recurrence;
}

}  // namespace supercong
