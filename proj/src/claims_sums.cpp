// Claims whose left side is a truncated binomial sum evaluated through the
// ValUnit pipeline (sections 1 and 3-5 of the registry).

#include "claims_common.hpp"

namespace supercong::claims {

namespace {
// 4x^2 - 2p mod p^2 from a representation p = x^2 + d y^2.
u64 beukers_rhs(const Eval& e, const QuadRep& r) {
    return e.res2(4 * r.x * r.x - 2 * i64(e.p));
}
}  // namespace

void eval_eq_1_3(Eval& e) {
    u64 s = sum_cb3_over_m(e.p, PRational(64), SumRange::half);
    if (e.p % 4 == 3) {
        e.set_case("p=3 mod 4: 0 mod p^2");
        e.check_mod_p2(s, 0);
        return;
    }
    e.set_case("p=x^2+4y^2: 4x^2-2p mod p^2");
    auto r = rep_with(e.p, 4, {});
    if (!r) throw normalization_error("eq-1.3: missing p = x^2 + 4y^2");
    e.check_mod_p2(s, beukers_rhs(e, *r));
}

void eval_conj_1_4(Eval& e) {
    u64 s = sum_cb3_over_m(e.p, PRational(1), SumRange::full);
    u64 c = e.p % 7;
    if (c == 3 || c == 5 || c == 6) {
        e.set_case("p=3,5,6 mod 7: 0 mod p^2");
        e.check_mod_p2(s, 0);
        return;
    }
    e.set_case("p=x^2+7y^2: 4x^2-2p mod p^2");
    auto r = rep_with(e.p, 7, {});
    if (!r) throw normalization_error("conj-1.4: missing p = x^2 + 7y^2");
    e.check_mod_p2(s, beukers_rhs(e, *r));
}

void eval_thm_3_2(Eval& e) {
    u64 s1 = sum_cb3_over_m(e.p, PRational(1), SumRange::half);
    u64 s2 = sum_cb3_over_m(e.p, PRational(4096), SumRange::half);
    u64 s2s = mul_mod(sign_pow((e.p - 1) / 2, e.p2), s2, e.p2);
    u64 c = e.p % 7;
    if (c == 3 || c == 5 || c == 6) {
        e.set_case("p=3,5,6 mod 7: 0 mod p^2");
        e.check_mod_p2(s1, 0);
        e.check_mod_p2(s2s, 0);
        return;
    }
    e.set_case("p=C^2+7D^2: 4C^2 mod p");
    e.check_mod_p(s1, s2s);  // the two left forms agree
    auto r = rep_with(e.p, 7, {});
    if (!r) throw normalization_error("thm-3.2: missing p = C^2 + 7D^2");
    e.check_mod_p(s1, e.res(4 * r->x * r->x));
}

void eval_thm_3_3(Eval& e) {
    u64 s = sum_cb3_over_m(e.p, PRational(-8), SumRange::half);
    if (e.p % 4 == 3) {
        e.set_case("p=3 mod 4: 0 mod p^2");
        e.check_mod_p2(s, 0);
        return;
    }
    e.set_case("p=a^2+4b^2: 4a^2-2p mod p^2");
    auto r = rep_with(e.p, 4, {});
    if (!r) throw normalization_error("thm-3.3: missing p = a^2 + 4b^2");
    e.check_mod_p2(s, beukers_rhs(e, *r));
}

void eval_thm_3_4(Eval& e) {
    std::string parts;
    if (e.p % 4 == 3) {
        parts += "i";
        e.check_mod_p2(sum_cb3_over_m(e.p, PRational(-512), SumRange::half), 0);
    }
    if (e.p % 8 == 5 || e.p % 8 == 7) {
        parts += parts.empty() ? "ii" : "+ii";
        e.check_mod_p2(sum_cb3_over_m(e.p, PRational(-64), SumRange::half), 0);
    }
    if (e.p % 3 == 2) {
        parts += parts.empty() ? "iii" : "+iii";
        e.check_mod_p2(sum_cb3_over_m(e.p, PRational(16), SumRange::half), 0);
        e.check_mod_p2(sum_cb3_over_m(e.p, PRational(256), SumRange::half), 0);
    }
    if (parts.empty()) e.bail("p = 1 mod 24: no zero case applies");
    e.set_case(parts);
}

void eval_thm_4_3(Eval& e) {
    if (e.p % 8 != 1 && e.p % 8 != 3) e.bail("needs p = 1,3 mod 8");
    e.set_case(e.p % 8 == 1 ? "p=1 mod 8" : "p=3 mod 8");
    auto r = rep_with(e.p, 2, {NormCond::x_mod4_eq_1});
    if (!r) throw normalization_error("thm-4.3: missing p = c^2 + 2d^2");
    u64 s = sum_c2k_c4k_over_m(e.p, PRational(128), QuarterRange::full, Modulus::p2);
    u64 inv2c = inv_mod(2 * r->x, e.p2);
    u64 rhs = sub_mod(e.res2(2 * r->x), mul_mod(e.p, inv2c, e.p2), e.p2);
    rhs = mul_mod(rhs, sign_pow(e.p / 8 + (e.p - 1) / 2, e.p2), e.p2);
    e.check_mod_p2(s, rhs);
}

void eval_thm_5_1(Eval& e) {
    std::string parts;
    {
        u64 s = sum_cb2_c4k_over_m(e.p, PRational(648));
        if (e.p % 4 == 3) {
            parts += "m=648 zero";
            e.check_mod_p2(s, 0);
        } else {
            parts += "m=648 split";
            auto r = rep_with(e.p, 4, {});
            if (!r) throw normalization_error("thm-5.1: missing p = a^2 + 4b^2");
            e.check_mod_p(s, e.res(4 * r->x * r->x));
        }
    }
    {
        u64 s = sum_cb2_c4k_over_m(e.p, PRational(-144));
        if (e.p % 3 == 2) {
            parts += "; m=-144 zero";
            e.check_mod_p2(s, 0);
        } else {
            parts += "; m=-144 split";
            auto r = rep_with(e.p, 3, {});
            if (!r) throw normalization_error("thm-5.1: missing p = A^2 + 3B^2");
            e.check_mod_p(s, e.res(4 * r->x * r->x));
        }
    }
    {
        u64 s = sum_cb2_c4k_over_m(e.p, PRational(-3969));
        u64 c = e.p % 7;
        if (c == 3 || c == 5 || c == 6) {
            parts += "; m=-3969 zero";
            e.check_mod_p2(s, 0);
        } else {
            parts += "; m=-3969 split";
            auto r = rep_with(e.p, 7, {});
            if (!r) throw normalization_error("thm-5.1: missing p = C^2 + 7D^2");
            e.check_mod_p(s, e.res(4 * r->x * r->x));
        }
    }
    e.set_case(parts);
}

void eval_thm_5_2(Eval& e) {
    const u64 p = e.p;
    FieldElem rm7 = e.sqrt_of(-7);
    FieldElem parg = rm7 * e.fe(PRational(5, 9));
    FieldElem pval = legendre_p(p / 4, parg);
    u64 s = sum_cb2_c4k_over_m(p, PRational(81));
    u64 c = p % 7;
    if (c == 3 || c == 5 || c == 6) {
        e.set_case("p=3,5,6 mod 7: 0 mod p^2");
        e.check_field(pval, e.fe(0));
        e.check_mod_p2(s, 0);
        return;
    }
    e.set_case("p=C^2+7D^2: 4C^2 mod p");
    auto r = rep_with(p, 7, {});
    if (!r) throw normalization_error("thm-5.2: missing p = C^2 + 7D^2");
    // (3(7 + sqrt(-7))/p) (C/7) 2C; sqrt(-7) is in the base field here
    if (!rm7.in_base()) throw normalization_error("thm-5.2: sqrt(-7) not in F_p on split class");
    int sym = legendre_symbol(i64(mul_mod(3, add_mod(7 % p, rm7.a(), p), p)), p);
    i64 rhs = i64(sym) * legendre_symbol(r->x, 7) * 2 * r->x;
    e.check_field(pval, e.fe(rhs));
    e.check_mod_p(s, e.res(4 * r->x * r->x));
}

void eval_sect5(Eval& e, const char* curve_id, const PRational& m) {
    const CmCurve* c = find_cm_curve(curve_id);
    if (!c) throw std::logic_error("eval_sect5: unknown curve id");
    FieldElem root_e = e.sqrt_of(c->radicand);
    if (!root_e.in_base()) e.bail("radicand is a non-residue");
    u64 root = root_e.a();
    auto expect = cm_trace_expected(*c, e.p, root);
    if (!expect) e.bail("outside the stated residue classes");
    u64 s = sum_cb2_c4k_over_m(e.p, m);
    long long cs = char_sum(cm_instantiate(*c, e.p, root), e.qr());
    if (expect->value == 0) {
        e.set_case("inert: 0 mod p^2");
        e.check_mod_p2(s, 0);
        e.check_exact(cs, 0);
        return;
    }
    e.set_case("split: p=x^2+" + std::to_string(c->form_d) + "y^2, 4x^2 mod p");
    e.check_mod_p(s, e.res(expect->value * expect->value));
    if (expect->signed_known)
        e.check_exact(cs, expect->value);
    else
        e.check_exact(cs * cs, expect->value * expect->value);
}

}  // namespace supercong::claims
