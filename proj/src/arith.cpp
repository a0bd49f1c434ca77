#include "supercong/arith.hpp"

#include <numeric>

namespace supercong {

u64 pow_mod(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

u64 pow_mod(u64 base, u128 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

u64 inv_mod(i64 a, u64 m) {
    if (m < 2) throw invalid_modulus_error("inv_mod: modulus < 2");
    i64 r0 = i64(m), r1 = i64(to_residue(a, m));
    i64 t0 = 0, t1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    if (r0 != 1)
        throw not_invertible_error("inv_mod: argument shares a factor with the modulus");
    return to_residue(t0, m);
}

int jacobi(i64 a, u64 n) {
    if (n < 3 || n % 2 == 0)
        throw invalid_modulus_error("jacobi: modulus must be odd and >= 3");
    u64 x = to_residue(a, n);
    int sign = 1;
    while (x != 0) {
        while (x % 2 == 0) {
            x /= 2;
            u64 r = n % 8;
            if (r == 3 || r == 5) sign = -sign;
        }
        std::swap(x, n);
        if (x % 4 == 3 && n % 4 == 3) sign = -sign;
        x %= n;
    }
    return n == 1 ? sign : 0;
}

int legendre_symbol(i64 a, u64 p) {
    if (p < 3 || p % 2 == 0)
        throw invalid_modulus_error("legendre_symbol: p must be an odd prime");
    return jacobi(a, p);
}

std::vector<u64> inverse_table(u64 n, u64 modulus, u64 p) {
    if (n >= p) throw index_too_large_error("inverse_table: n must be below p");
    std::vector<u64> inv(n + 1, 0);
    if (n == 0) return inv;
    inv[1] = 1 % modulus;
    for (u64 i = 2; i <= n; ++i)
        inv[i] = mul_mod(p - p / i, inv[p % i], p);  // mod-p recurrence
    if (modulus != p) {
        for (u64 i = 1; i <= n; ++i) {
            // Newton: x' = x (2 - i x) mod p^2
            u64 t = sub_mod(2 % modulus, mul_mod(i % modulus, inv[i], modulus), modulus);
            inv[i] = mul_mod(inv[i], t, modulus);
        }
    }
    return inv;
}

// ---------------------------------------------------------------------------
// PRational

namespace {
i64 checked_i64(i128 v, const char* what) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw std::overflow_error(what);
    return i64(v);
}
PRational make_normalized(i128 num, i128 den, const char* what) {
    if (den == 0) throw std::domain_error("PRational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    u128 a = num < 0 ? u128(-num) : u128(num), b = u128(den);
    while (b) { u128 t = a % b; a = b; b = t; }
    if (a == 0) a = 1;
    num /= i128(a);
    den /= i128(a);
    PRational r;
    r.num = checked_i64(num, what);
    r.den = checked_i64(den, what);
    return r;
}
}  // namespace

PRational::PRational(i64 n, i64 d) {
    PRational r = make_normalized(i128(n), i128(d), "PRational: overflow");
    num = r.num;
    den = r.den;
}

PRational PRational::operator+(const PRational& o) const {
    return make_normalized(i128(num) * o.den + i128(o.num) * den,
                           i128(den) * o.den, "PRational::+ overflow");
}
PRational PRational::operator-(const PRational& o) const {
    return make_normalized(i128(num) * o.den - i128(o.num) * den,
                           i128(den) * o.den, "PRational::- overflow");
}
PRational PRational::operator*(const PRational& o) const {
    return make_normalized(i128(num) * o.num, i128(den) * o.den,
                           "PRational::* overflow");
}
PRational PRational::operator/(const PRational& o) const {
    if (o.num == 0) throw std::domain_error("PRational: division by zero");
    return make_normalized(i128(num) * o.den, i128(den) * o.num,
                           "PRational::/ overflow");
}
PRational PRational::inverse() const {
    if (num == 0) throw std::domain_error("PRational: inverse of zero");
    return make_normalized(i128(den), i128(num), "PRational::inverse");
}

u64 PRational::lift(u64 m) const {
    u64 n = to_residue(num, m);
    return mul_mod(n, inv_mod(den, m), m);
}

// ---------------------------------------------------------------------------
// FieldDesc / FieldElem

u64 least_nonresidue(u64 p) {
    for (u64 d = 2; d < p; ++d)
        if (legendre_symbol(i64(d), p) == -1) return d;
    throw invalid_modulus_error("least_nonresidue: no non-residue found (p prime?)");
}

FieldDesc FieldDesc::base(u64 p) {
    if (p < 3 || p % 2 == 0)
        throw invalid_modulus_error("FieldDesc: p must be an odd prime");
    return FieldDesc{p, std::nullopt};
}
FieldDesc FieldDesc::quadratic(u64 p) { return quadratic(p, least_nonresidue(p)); }
FieldDesc FieldDesc::quadratic(u64 p, u64 delta) {
    FieldDesc d = base(p);
    if (legendre_symbol(i64(delta), p) != -1)
        throw invalid_modulus_error("FieldDesc: delta must be a quadratic non-residue");
    d.ext = delta % p;
    return d;
}

FieldElem::FieldElem(u64 a, FieldDesc d) : a_(a % d.p), b_(0), desc_(d) {}
FieldElem::FieldElem(u64 a, u64 b, FieldDesc d) : a_(a % d.p), b_(b % d.p), desc_(d) {
    if (b_ != 0 && !desc_.ext)
        throw invalid_modulus_error("FieldElem: surd coefficient in a base field");
}
FieldElem FieldElem::from_int(i64 v, const FieldDesc& d) {
    return FieldElem(to_residue(v, d.p), d);
}

namespace {
void require_same(const FieldDesc& x, const FieldDesc& y) {
    if (!(x == y))
        throw invalid_modulus_error("FieldElem: operands from different fields");
}
}  // namespace

FieldElem FieldElem::operator+(const FieldElem& o) const {
    require_same(desc_, o.desc_);
    return {add_mod(a_, o.a_, desc_.p), add_mod(b_, o.b_, desc_.p), desc_};
}
FieldElem FieldElem::operator-(const FieldElem& o) const {
    require_same(desc_, o.desc_);
    return {sub_mod(a_, o.a_, desc_.p), sub_mod(b_, o.b_, desc_.p), desc_};
}
FieldElem FieldElem::operator*(const FieldElem& o) const {
    require_same(desc_, o.desc_);
    const u64 p = desc_.p;
    if (b_ == 0 && o.b_ == 0) return {mul_mod(a_, o.a_, p), 0, desc_};
    const u64 delta = *desc_.ext;
    u64 a = add_mod(mul_mod(a_, o.a_, p), mul_mod(delta, mul_mod(b_, o.b_, p), p), p);
    u64 b = add_mod(mul_mod(a_, o.b_, p), mul_mod(b_, o.a_, p), p);
    return {a, b, desc_};
}
FieldElem FieldElem::operator-() const {
    const u64 p = desc_.p;
    return {a_ ? p - a_ : 0, b_ ? p - b_ : 0, desc_};
}
FieldElem FieldElem::inverse() const {
    const u64 p = desc_.p;
    if (b_ == 0) {
        if (a_ == 0) throw not_invertible_error("FieldElem: inverse of zero");
        return {inv_mod(i64(a_), p), 0, desc_};
    }
    // conjugate over norm: (a - b s) / (a^2 - delta b^2)
    u64 norm = sub_mod(mul_mod(a_, a_, p), mul_mod(*desc_.ext, mul_mod(b_, b_, p), p), p);
    u64 ninv = inv_mod(i64(norm), p);
    return {mul_mod(a_, ninv, p), mul_mod(b_ ? p - b_ : 0, ninv, p), desc_};
}
FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }
bool FieldElem::operator==(const FieldElem& o) const {
    return desc_.p == o.desc_.p && a_ == o.a_ && b_ == o.b_ &&
           (b_ == 0 || desc_.ext == o.desc_.ext);
}
FieldElem FieldElem::pow(u128 e) const {
    FieldElem r(1, desc_), base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}
FieldElem FieldElem::frobenius() const {
    return {a_, b_ ? desc_.p - b_ : 0, desc_};
}
FieldElem FieldElem::in(const FieldDesc& d) const {
    if (d.p != desc_.p)
        throw invalid_modulus_error("FieldElem::in: different characteristic");
    if (b_ != 0 && d.ext != desc_.ext)
        throw invalid_modulus_error("FieldElem::in: incompatible surd");
    return {a_, b_, d};
}
std::string FieldElem::str() const {
    if (b_ == 0) return std::to_string(a_);
    return std::to_string(a_) + "+" + std::to_string(b_) + "√" +
           std::to_string(*desc_.ext);
}

FieldElem lift(const PRational& r, const FieldDesc& d) {
    return FieldElem(r.lift(d.p), d);
}

namespace {
// Tonelli-Shanks root of a QR a mod p; a != 0.
u64 tonelli_shanks(u64 a, u64 p) {
    if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
    u64 q = p - 1;
    u32 s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    u64 z = least_nonresidue(p);
    u64 m = s, c = pow_mod(z, q, p), t = pow_mod(a, q, p),
        r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
        u64 t2 = t;
        u32 i = 0;
        while (t2 != 1) { t2 = mul_mod(t2, t2, p); ++i; }
        u64 b = c;
        for (u32 j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    return r;
}
u64 canonical_root(u64 r, u64 p) { return r <= p - r ? r : p - r; }
}  // namespace

FieldElem sqrt_in_field(u64 a, u64 p) {
    a %= p;
    int sym = legendre_symbol(i64(a), p);
    if (sym >= 0) {
        u64 r = a == 0 ? 0 : canonical_root(tonelli_shanks(a, p), p);
        return FieldElem(r, FieldDesc::base(p));
    }
    FieldDesc ext = FieldDesc::quadratic(p);
    u64 s = mul_mod(a, inv_mod(i64(*ext.ext), p), p);  // a/delta is a QR
    u64 r = canonical_root(tonelli_shanks(s, p), p);
    return FieldElem(0, r, ext);
}

}  // namespace supercong
