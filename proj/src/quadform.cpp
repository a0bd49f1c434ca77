#include "supercong/quadform.hpp"

#include <cmath>

namespace supercong {

namespace {
u64 isqrt_u64(u64 n) {
    if (n == 0) return 0;
    u64 r = u64(std::sqrt(double(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::optional<QuadRep> cornacchia_from_root(u64 p, i64 d, u64 r) {
    u64 a = p, b = r;
    const u64 bound = isqrt_u64(p);
    while (b > bound) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    if (b == 0) return std::nullopt;
    u64 rem = p - b * b;
    if (rem % u64(d) != 0) return std::nullopt;
    u64 y = isqrt_u64(rem / u64(d));
    if (u64(d) * y * y != rem) return std::nullopt;
    return QuadRep{i64(b), i64(y), d, {}};
}
}  // namespace

std::optional<QuadRep> represent_exhaustive(u64 n, i64 d) {
    if (d <= 0) return std::nullopt;
    std::optional<QuadRep> best;
    for (u64 y = 0; u64(d) * y * y <= n; ++y) {
        u64 rem = n - u64(d) * y * y;
        u64 x = isqrt_u64(rem);
        if (x * x == rem) {
            if (!best || i64(x) < best->x) best = QuadRep{i64(x), i64(y), d, {}};
        }
    }
    return best;
}

std::optional<QuadRep> represent(u64 p, i64 d) {
    if (p < 3 || p % 2 == 0)
        throw invalid_modulus_error("represent: p must be an odd prime");
    if (d <= 0 || u64(d) % p == 0)
        throw invalid_modulus_error("represent: need 0 < d with p not dividing d");
    if (u64(d) >= p) return represent_exhaustive(p, d);
    if (legendre_symbol(-d, p) != 1) return std::nullopt;

    FieldElem root = sqrt_in_field(to_residue(-d, p), p);
    u64 r = root.a();
    std::optional<QuadRep> best;
    for (u64 seed : {r, p - r}) {
        auto cand = cornacchia_from_root(p, d, seed);
        if (cand && u64(cand->x) * u64(cand->x) + u64(d) * u64(cand->y) * u64(cand->y) == p)
            if (!best || cand->x < best->x) best = cand;
    }
    if (!best) best = represent_exhaustive(p, d);  // small-p corner cases
    return best;
}

namespace {
const char* cond_name(NormCond c) {
    switch (c) {
        case NormCond::x_mod4_eq_1: return "x=1 mod 4";
        case NormCond::x_mod3_eq_1: return "x=1 mod 3";
        case NormCond::y_mod4_eq_1: return "y=1 mod 4";
        case NormCond::x_odd: return "x odd";
    }
    return "?";
}
}  // namespace

QuadRep normalize(QuadRep rep, NormCond cond) {
    switch (cond) {
        case NormCond::x_odd:
            if (rep.x % 2 == 0) {
                if (rep.d != 1 || rep.y % 2 == 0)
                    throw normalization_error("normalize: cannot make x odd");
                std::swap(rep.x, rep.y);
            }
            break;
        case NormCond::x_mod4_eq_1:
            if (rep.x % 2 == 0) throw normalization_error("normalize: x is even");
            if (to_residue(rep.x, 4) != 1) rep.x = -rep.x;
            break;
        case NormCond::x_mod3_eq_1:
            if (rep.x % 3 == 0) throw normalization_error("normalize: 3 divides x");
            if (to_residue(rep.x, 3) != 1) rep.x = -rep.x;
            break;
        case NormCond::y_mod4_eq_1:
            if (rep.y % 2 == 0) throw normalization_error("normalize: y is even");
            if (to_residue(rep.y, 4) != 1) rep.y = -rep.y;
            break;
    }
    rep.normalized_by.push_back(cond_name(cond));
    return rep;
}

u64 unit_power_predicted(u64 p, int base) {
    if (base == 3) {
        if (p == 3 || p % 3 != 1)
            throw inapplicable_error("unit_power_predicted: needs p = 1 mod 3");
        auto rep = represent(p, 3);
        if (!rep) throw normalization_error("unit_power_predicted: no p = A^2+3B^2");
        if (p % 12 == 1) {
            QuadRep r = normalize(*rep, NormCond::x_mod4_eq_1);
            return to_residue(legendre_symbol(r.x, 3), p);
        }
        QuadRep r = normalize(*rep, NormCond::y_mod4_eq_1);
        u64 v = to_residue(legendre_symbol(r.x, 3) * r.y, p);
        return mul_mod(v, inv_mod(r.x, p), p);
    }
    if (base == 7) {
        if (p == 7 || (p % 7 != 1 && p % 7 != 2 && p % 7 != 4))
            throw inapplicable_error("unit_power_predicted: needs p = 1,2,4 mod 7");
        auto rep = represent(p, 7);
        if (!rep) throw normalization_error("unit_power_predicted: no p = C^2+7D^2");
        if (p % 4 == 1) {
            QuadRep r = normalize(*rep, NormCond::x_mod4_eq_1);
            return to_residue(legendre_symbol(r.x, 7), p);
        }
        QuadRep r = normalize(*rep, NormCond::y_mod4_eq_1);
        u64 v = to_residue(-legendre_symbol(r.x, 7) * r.y, p);
        return mul_mod(v, inv_mod(r.x, p), p);
    }
    throw inapplicable_error("unit_power_predicted: base must be 3 or 7");
}

}  // namespace supercong
