// The P_[p/4] chains (theorems 2.2-2.4) and the P_(p-1)/2 surd evaluations
// (theorems 2.5-2.8).  Surd arguments are resolved once per claim so that
// mixed surds stay coherent (e.g. sqrt(-63) is taken as 3 sqrt(-7)).

#include "claims_common.hpp"

namespace supercong::claims {

namespace {
// P_[p/4](t) (dual-route asserted) vs the two weighted quarter sums; all
// three must also match `rhs` mod p.
void quarter_chain(Eval& e, const PRational& t, const PRational& m1, const PRational& m2,
                   u64 rhs) {
    const u64 p = e.p;
    FieldElem f1 = legendre_p_quarter(e.fe(t), p);
    e.check_true(f1.in_base(), "P_[p/4] value lies in F_p");
    u64 f2 = quarter_sum_weight(p, m1.inverse().lift(p), p);
    u64 f3 = mul_mod(sign_pow(p / 4, p), quarter_sum_weight(p, m2.inverse().lift(p), p), p);
    e.check_mod_p(f1.a(), f2);
    e.check_mod_p(f2, f3);
    e.check_mod_p(f2, rhs);
}
}  // namespace

void eval_thm_2_2(Eval& e) {
    u64 rhs = 0;
    if (e.p % 4 == 3) {
        e.set_case("p=3 mod 4: 0");
    } else {
        e.set_case("p=a^2+b^2, 4|a-1: (-1)^((p-1)/4) (p/3) 2a");
        auto r = rep_with(e.p, 1, {NormCond::x_odd, NormCond::x_mod4_eq_1});
        if (!r) throw normalization_error("thm-2.2: missing p = a^2 + b^2");
        i64 v = 2 * r->x * legendre_symbol(i64(e.p), 3);
        rhs = e.res((e.p - 1) / 4 % 2 == 0 ? v : -v);
    }
    quarter_chain(e, PRational(-7, 9), PRational(72), PRational(576), rhs);
}

void eval_thm_2_3(Eval& e) {
    u64 rhs = 0;
    if (e.p % 3 == 2) {
        e.set_case("p=2 mod 3: 0");
    } else {
        e.set_case("p=A^2+3B^2, 3|A-1: 2A");
        auto r = rep_with(e.p, 3, {NormCond::x_mod3_eq_1});
        if (!r) throw normalization_error("thm-2.3: missing p = A^2 + 3B^2");
        rhs = e.res(2 * r->x);
    }
    quarter_chain(e, PRational(-5, 3), PRational(48), PRational(-192), rhs);
}

void eval_thm_2_4(Eval& e) {
    u64 rhs = 0;
    u64 c = e.p % 7;
    if (c == 3 || c == 5 || c == 6) {
        e.set_case("p=3,5,6 mod 7: 0");
    } else {
        e.set_case("p=C^2+7D^2: 2C(p/3)(C/7)");
        auto r = rep_with(e.p, 7, {});
        if (!r) throw normalization_error("thm-2.4: missing p = C^2 + 7D^2");
        rhs = e.res(2 * r->x * legendre_symbol(i64(e.p), 3) * legendre_symbol(r->x, 7));
    }
    quarter_chain(e, PRational(-65, 63), PRational(63), PRational(-4032), rhs);
}

void eval_thm_2_5(Eval& e) {
    const u64 p = e.p, n = (p - 1) / 2;
    FieldElem r7 = e.sqrt_of(7);
    FieldElem rm7 = e.sqrt_of(-7);
    FieldElem part1 = legendre_p(n, r7 * e.fe(PRational(3, 8)));
    FieldElem part2 = legendre_p(n, rm7 * e.fe(3)) * e.fe(p / 4 % 2 == 0 ? 1 : -1);
    u64 c = p % 7;
    if (c == 3 || c == 5 || c == 6) {
        e.set_case("p=3,5,6 mod 7: 0");
        e.check_field(part1, e.fe(0));
        e.check_field(part2, e.fe(0));
        return;
    }
    auto rep = rep_with(p, 7, {});
    if (!rep) throw normalization_error("thm-2.5: missing p = C^2 + 7D^2");
    if (p % 4 == 1) {
        e.set_case("p=1,9,25 mod 28, 4|C-1: 2C");
        QuadRep r = normalize(*rep, NormCond::x_mod4_eq_1);
        e.check_field(part1, e.fe(2 * r.x));
        e.check_field(part2, e.fe(2 * r.x));
    } else {
        e.set_case("p=11,15,23 mod 28, 4|D-1: -2√7 D / 2D√-7");
        QuadRep r = normalize(*rep, NormCond::y_mod4_eq_1);
        e.check_field(part1, r7 * e.fe(-2 * r.y));
        e.check_field(part2, rm7 * e.fe(2 * r.y));
    }
}

void eval_thm_2_6(Eval& e) {
    const u64 p = e.p, n = (p - 1) / 2;
    FieldElem val = legendre_p(n, e.sqrt_of(2) * e.fe(PRational(3, 4)));
    if (p % 4 == 3) {
        e.set_case("p=3 mod 4: 0");
        e.check_field(val, e.fe(0));
        return;
    }
    auto rep = rep_with(p, 4, {});
    if (!rep) throw normalization_error("thm-2.6: missing p = a^2 + 4b^2");
    if (p % 8 == 1) {
        e.set_case("p=1 mod 8, 4|a-1: (-1)^(b/2) 2a");
        QuadRep r = normalize(*rep, NormCond::x_mod4_eq_1);
        i64 v = 2 * r.x * (r.y / 2 % 2 == 0 ? 1 : -1);
        e.check_field(val, e.fe(v));
    } else {
        e.set_case("p=5 mod 8, 4|b-1: 4b");
        QuadRep r = normalize(*rep, NormCond::y_mod4_eq_1);
        e.check_field(val, e.fe(4 * r.y));
    }
}

void eval_thm_2_7(Eval& e) {
    const u64 p = e.p, n = (p - 1) / 2;
    FieldElem r2 = e.sqrt_of(2);
    FieldElem val = legendre_p(n, r2);
    if (p % 8 == 5 || p % 8 == 7) {
        e.set_case("p=5,7 mod 8: 0");
        e.check_field(val, e.fe(0));
        return;
    }
    auto rep = rep_with(p, 2, {});
    if (!rep) throw normalization_error("thm-2.7: missing p = c^2 + 2d^2");
    if (p % 8 == 1) {
        e.set_case("p=1 mod 8, 4|c-1: (-1)^((p-1)/8+(c-1)/4) 2c");
        QuadRep r = normalize(*rep, NormCond::x_mod4_eq_1);
        i64 exp = i64((p - 1) / 8) + (r.x - 1) / 4;
        i64 v = 2 * r.x * (((exp % 2) + 2) % 2 == 0 ? 1 : -1);
        e.check_field(val, e.fe(v));
    } else {
        e.set_case("p=3 mod 8, 4|d-1: -2√2 d");
        QuadRep r = normalize(*rep, NormCond::y_mod4_eq_1);
        e.check_field(val, r2 * e.fe(-2 * r.y));
    }
}

void eval_thm_2_8(Eval& e) {
    const u64 p = e.p, n = (p - 1) / 2;
    FieldElem rm3 = e.sqrt_of(-3);
    FieldElem r3 = e.sqrt_of(3);
    FieldElem part1 = legendre_p(n, rm3);
    FieldElem part2 = legendre_p(n, r3 * e.fe(PRational(1, 2)));
    if (p % 3 == 2) {
        e.set_case("p=2 mod 3: 0");
        e.check_field(part1, e.fe(0));
        e.check_field(part2, e.fe(0));
        return;
    }
    auto rep = rep_with(p, 3, {});
    if (!rep) throw normalization_error("thm-2.8: missing p = A^2 + 3B^2");
    if (p % 12 == 1) {
        e.set_case("p=1 mod 12, 4|A-1: (-1)^((p-1)/4) 2A");
        QuadRep r = normalize(*rep, NormCond::x_mod4_eq_1);
        i64 v = 2 * r.x * ((p - 1) / 4 % 2 == 0 ? 1 : -1);
        e.check_field(part1, e.fe(v));
        e.check_field(part2, e.fe(2 * r.x));
    } else {
        e.set_case("p=7 mod 12, 4|B-1: (-1)^((p-3)/4) 2B√-3 / -2√3 B");
        QuadRep r = normalize(*rep, NormCond::y_mod4_eq_1);
        i64 v = 2 * r.y * ((p - 3) / 4 % 2 == 0 ? 1 : -1);
        e.check_field(part1, rm3 * e.fe(v));
        e.check_field(part2, r3 * e.fe(-2 * r.y));
    }
}

}  // namespace supercong::claims
