#include "supercong/charsum.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "supercong/quadform.hpp"

namespace supercong {

Cubic::Cubic(u64 p_, i64 c3, i64 c2, i64 c1, i64 c0) : p(p_) {
    if (p < 3 || p % 2 == 0)
        throw invalid_modulus_error("Cubic: p must be an odd prime");
    a3 = to_residue(c3, p);
    a2 = to_residue(c2, p);
    a1 = to_residue(c1, p);
    a0 = to_residue(c0, p);
}

bool Cubic::nonsingular() const {
    if (a3 == 0) return false;
    // 18 a b c d - 4 b^3 d + b^2 c^2 - 4 a c^3 - 27 a^2 d^2, (a,b,c,d) = (a3..a0)
    u64 t1 = mul_mod(mul_mod(18, a3, p), mul_mod(a2, mul_mod(a1, a0, p), p), p);
    u64 t2 = mul_mod(4, mul_mod(mul_mod(a2, a2, p), mul_mod(a2, a0, p), p), p);
    u64 t3 = mul_mod(mul_mod(a2, a2, p), mul_mod(a1, a1, p), p);
    u64 t4 = mul_mod(4, mul_mod(a3, mul_mod(a1, mul_mod(a1, a1, p), p), p), p);
    u64 t5 = mul_mod(27, mul_mod(mul_mod(a3, a3, p), mul_mod(a0, a0, p), p), p);
    u64 disc = sub_mod(add_mod(t1, t3, p), add_mod(t2, add_mod(t4, t5, p), p), p);
    return disc != 0;
}

QrTable::QrTable(u64 p) : p_(p), tab_(p, -1) {
    if (p < 3 || p % 2 == 0)
        throw invalid_modulus_error("QrTable: p must be an odd prime");
    tab_[0] = 0;
    for (u64 t = 1; t <= (p - 1) / 2; ++t) tab_[mul_mod(t, t, p)] = 1;
}

namespace {
void weil_check(const Cubic& f, long long s) {
    if (!f.nonsingular()) return;
    if (i128(s) * s > i128(4) * f.p)
        throw std::logic_error("char_sum: Weil bound violated (arithmetic bug)");
}
}  // namespace

long long char_sum(const Cubic& f, const QrTable& qr) {
    if (qr.p() != f.p)
        throw invalid_modulus_error("char_sum: table built for a different prime");
    const u64 p = f.p;
    long long s = 0;
    if (p < 4096) {
        for (u64 x = 0; x < p; ++x) s += qr(f.eval(x));
    } else {
#pragma omp parallel for reduction(+ : s) schedule(static)
        for (u64 x = 0; x < p; ++x) s += qr(f.eval(x));
    }
    weil_check(f, s);
    return s;
}

long long char_sum(const Cubic& f) { return char_sum(f, QrTable(f.p)); }

long long char_sum_serial(const Cubic& f) {
    long long s = 0;
    for (u64 x = 0; x < f.p; ++x) s += legendre_symbol(i64(f.eval(x)), f.p);
    weil_check(f, s);
    return s;
}

std::pair<Cubic, u64> depress(const Cubic& f) {
    const u64 p = f.p;
    if (p == 3) throw inapplicable_error("depress: 3 not invertible");
    if (f.a3 == 0) throw inapplicable_error("depress: not a cubic");
    if (f.a2 == 0) return {f, 0};
    u64 s = mul_mod(f.a2, inv_mod(i64(mul_mod(3, f.a3, p)), p), p);
    u64 s2 = mul_mod(s, s, p), s3 = mul_mod(s2, s, p);
    u64 g1 = add_mod(sub_mod(f.a1, mul_mod(2, mul_mod(f.a2, s, p), p), p),
                     mul_mod(3, mul_mod(f.a3, s2, p), p), p);
    u64 g0 = sub_mod(add_mod(f.a0, mul_mod(f.a2, s2, p), p),
                     add_mod(mul_mod(f.a1, s, p), mul_mod(f.a3, s3, p), p), p);
    return {Cubic(p, i64(f.a3), 0, i64(g1), i64(g0)), s};
}

bool scale_check(const Cubic& f, u64 a, const QrTable& qr) {
    const u64 p = f.p;
    if (p <= 3) throw inapplicable_error("scale_check: requires p > 3");
    if (f.a3 != 1 || f.a2 != 0)
        throw inapplicable_error("scale_check: cubic must be depressed and monic");
    u64 a2 = mul_mod(a, a, p), a3 = mul_mod(a2, a, p);
    Cubic g(p, 1, 0, i64(mul_mod(a2, f.a1, p)), i64(mul_mod(a3, f.a0, p)));
    long long lhs = char_sum(g, qr);
    long long rhs = legendre_symbol(i64(a), p) * char_sum(f, qr);
    return lhs == rhs;
}

bool scale_check(const Cubic& f, u64 a) { return scale_check(f, a, QrTable(f.p)); }

u64 count_points(const Cubic& f) {
    const u64 p = f.p;
    std::vector<u32> cnt(p, 0);
    for (u64 y = 0; y < p; ++y) ++cnt[mul_mod(y, y, p)];
    u64 total = 1;  // point at infinity
    for (u64 x = 0; x < p; ++x) total += cnt[f.eval(x)];
    return total;
}

// ---------------------------------------------------------------------------
// CM curve table

namespace {
using P = PRational;
const std::vector<CmCurve> kCurves = {
    {"thm-5.3", 5, P(4), P(2), P(-1), P(0), P(0), 5, false},
    {"thm-5.4", 3, P(0), P(-120), P(-42), P(448), P(336), 9, true},
    {"thm-5.5", 13, P(4), P(2), P(-5, 9), P(0), P(0), 13, false},
    {"thm-5.6", 37, P(4), P(2), P(-145, 441), P(0), P(0), 37, false},
    {"thm-5.7", 2, P(0), P(-21), P(12), P(-28), P(22), 6, true},
    {"thm-5.8", 5, P(4), P(2), P(-8, 9), P(0), P(0), 10, false},
    {"thm-5.9", 2, P(4), P(2), P(-140, 99), P(0), P(0), 22, false},
    {"thm-5.10", 29, P(4), P(2), P(-3640, 9801), P(0), P(0), 58, false},
    {"thm-5.11", 6, P(4), P(2), P(-40, 49), P(0), P(0), 18, false},
    {"thm-5.12", 5, P(4), P(2), P(-161, 180), P(0), P(0), 25, false},
};

// Theorem hypotheses and split/inert casework, per curve.
bool applicable_5x(const CmCurve& c, u64 p) {
    switch (c.form_d) {
        case 5:  return p % 20 == 1 || p % 20 == 9;
        case 9:  return p % 12 == 1 || p % 12 == 11;
        case 13: return p != 3 && p != 13 && legendre_symbol(13, p) == 1;
        case 37: return p != 3 && p != 7 && p != 37 && legendre_symbol(37, p) == 1;
        case 6:  return p != 3 && (p % 8 == 1 || p % 8 == 7);
        case 10: return p != 3 && (p % 5 == 1 || p % 5 == 4);
        case 22: return p != 3 && p != 11 && (p % 8 == 1 || p % 8 == 7);
        case 58: return p != 3 && p != 11 && p != 29 && legendre_symbol(29, p) == 1;
        case 18: return p != 7 && (p % 24 == 1 || p % 24 == 5 || p % 24 == 19 || p % 24 == 23);
        case 25: return p != 3 && p != 5 && (p % 5 == 1 || p % 5 == 4);
        default: throw std::logic_error("unknown CM form");
    }
}
bool split_5x(const CmCurve& c, u64 p) {
    switch (c.form_d) {
        case 5:  return true;  // the hypothesis already restricts to the split classes
        case 9:  return p % 12 == 1;
        case 13: return p % 4 == 1;
        case 37: return p % 4 == 1;
        case 6:  return p % 24 == 1 || p % 24 == 7;
        case 10: return p % 40 == 1 || p % 40 == 9 || p % 40 == 11 || p % 40 == 19;
        case 22: return legendre_symbol(i64(p), 11) == 1;
        case 58: return p % 8 == 1 || p % 8 == 3;
        case 18: return p % 24 == 1 || p % 24 == 19;
        case 25: return p % 4 == 1;
        default: throw std::logic_error("unknown CM form");
    }
}
}  // namespace

const std::vector<CmCurve>& cm_curves() { return kCurves; }

const CmCurve* find_cm_curve(const char* id) {
    for (const auto& c : kCurves)
        if (std::strcmp(c.id, id) == 0) return &c;
    return nullptr;
}

Cubic cm_instantiate(const CmCurve& c, u64 p, u64 root) {
    u64 c1 = add_mod(c.q1.lift(p), mul_mod(c.r1.lift(p), root, p), p);
    u64 c0 = add_mod(c.q0.lift(p), mul_mod(c.r0.lift(p), root, p), p);
    return Cubic(p, 1, i64(c.c2.lift(p)), i64(c1), i64(c0));
}

std::optional<CmExpectation> cm_trace_expected(const CmCurve& c, u64 p, u64 root) {
    if (legendre_symbol(c.radicand, p) != 1) return std::nullopt;
    if (!applicable_5x(c, p)) return std::nullopt;
    if (!split_5x(c, p)) return CmExpectation{0, true};
    auto rep = represent(p, c.form_d);
    if (!rep)
        throw normalization_error("cm_trace_expected: split prime without representation");
    i64 x = rep->x;
    if (c.form_d == 9) {  // sign fixed: -2x ((1+root)/p) with x = 1 (mod 3)
        if (to_residue(x, 3) != 1) x = -x;
        return CmExpectation{-2 * x * legendre_symbol(i64(add_mod(1, root, p)), p), true};
    }
    if (c.form_d == 6) {  // sign fixed: 2x (2x/3) ((1+root)/p), invariant in x
        long long v = 2 * x * jacobi(2 * x, 3) * legendre_symbol(i64(add_mod(1, root, p)), p);
        return CmExpectation{v, true};
    }
    return CmExpectation{2 * (x < 0 ? -x : x), false};
}

}  // namespace supercong
