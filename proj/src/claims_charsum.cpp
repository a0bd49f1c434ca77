// Exact character-sum evaluations and the unit-power congruences: the
// claims compare an O(p) sum against the value read off a normalized
// quadratic-form representation, as exact integers.

#include "claims_common.hpp"

namespace supercong::claims {

void eval_eq_2_2(Eval& e) {
    long long cs = char_sum(Cubic(e.p, 1, 0, -4, 0), e.qr());
    if (e.p % 4 == 3) {
        e.set_case("p=3 mod 4: 0");
        e.check_exact(cs, 0);
        return;
    }
    e.set_case("p=a^2+4b^2, 4|a-1: -2a");
    auto r = rep_with(e.p, 4, {NormCond::x_mod4_eq_1});
    if (!r) throw normalization_error("eq-2.2: missing p = a^2 + 4b^2");
    e.check_exact(cs, -2 * r->x);
}

void eval_eq_2_3(Eval& e) {
    long long cs = char_sum(Cubic(e.p, 1, 0, 0, 8), e.qr());
    if (e.p % 3 == 2) {
        e.set_case("p=2 mod 3: 0");
        e.check_exact(cs, 0);
        return;
    }
    e.set_case("p=A^2+3B^2, 3|A-1: -2A(2/p)");
    auto r = rep_with(e.p, 3, {NormCond::x_mod3_eq_1});
    if (!r) throw normalization_error("eq-2.3: missing p = A^2 + 3B^2");
    e.check_exact(cs, -2 * r->x * legendre_symbol(2, e.p));
}

void eval_eq_2_4(Eval& e) {
    long long cs = char_sum(Cubic(e.p, 7, 0, -5, 2), e.qr());
    u64 c = e.p % 7;
    if (c == 3 || c == 5 || c == 6) {
        e.set_case("p=3,5,6 mod 7: 0");
        e.check_exact(cs, 0);
        return;
    }
    e.set_case("p=C^2+7D^2: (-1)^((p+1)/2) 2C(C/7)");
    auto r = rep_with(e.p, 7, {});
    if (!r) throw normalization_error("eq-2.4: missing p = C^2 + 7D^2");
    long long v = 2 * r->x * legendre_symbol(r->x, 7);
    e.check_exact(cs, (e.p + 1) / 2 % 2 == 0 ? v : -v);
}

void eval_eq_2_6(Eval& e) {
    long long cs = char_sum(Cubic(e.p, 1, 0, -30, -56), e.qr());
    if (e.p % 8 == 5 || e.p % 8 == 7) {
        e.set_case("p=5,7 mod 8: 0");
        e.check_exact(cs, 0);
        return;
    }
    auto r = rep_with(e.p, 2, {NormCond::x_mod4_eq_1});
    if (!r) throw normalization_error("eq-2.6: missing p = c^2 + 2d^2");
    long long v = 2 * r->x * legendre_symbol(i64(e.p), 3);
    if (e.p % 8 == 1) {
        e.set_case("p=1 mod 8: (-1)^((p+7)/8) (p/3) 2c");
        e.check_exact(cs, (e.p + 7) / 8 % 2 == 0 ? v : -v);
    } else {
        e.set_case("p=3 mod 8: (-1)^((p-3)/8) (p/3) 2c");
        e.check_exact(cs, (e.p - 3) / 8 % 2 == 0 ? v : -v);
    }
}

void eval_eq_5_1(Eval& e) {
    long long cs = char_sum(Cubic(e.p, 1, 0, -35, -98), e.qr());
    u64 c = e.p % 7;
    if (c == 3 || c == 5 || c == 6) {
        e.set_case("p=3,5,6 mod 7: 0");
        e.check_exact(cs, 0);
        return;
    }
    e.set_case("p=C^2+7D^2: -2C(C/7)");
    auto r = rep_with(e.p, 7, {});
    if (!r) throw normalization_error("eq-5.1: missing p = C^2 + 7D^2");
    e.check_exact(cs, -2 * r->x * legendre_symbol(r->x, 7));
}

void eval_eq_2_5(Eval& e) {
    u64 c = e.p % 7;
    if (c != 1 && c != 2 && c != 4) e.bail("needs p = 1,2,4 mod 7");
    e.set_case(e.p % 4 == 1 ? "p=1,9,25 mod 28, 4|C-1" : "p=11,15,23 mod 28, 4|D-1");
    e.check_mod_p(pow_mod(7, e.p / 4, e.p), unit_power_predicted(e.p, 7));
}

void eval_eq_2_7(Eval& e) {
    if (e.p % 3 != 1) e.bail("needs p = 1 mod 3");
    e.set_case(e.p % 12 == 1 ? "p=1 mod 12, 4|A-1" : "p=7 mod 12, 4|B-1");
    e.check_mod_p(pow_mod(3, e.p / 4, e.p), unit_power_predicted(e.p, 3));
}

}  // namespace supercong::claims
