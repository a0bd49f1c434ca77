// Universally-quantified claims: exhaustive over the domain on small
// primes, seeded sampling on large ones, first counterexample recorded as
// a witness.

#include "claims_common.hpp"

namespace supercong::claims {

namespace {
std::string domain_label(const Eval& e) { return e.exhaustive() ? "exhaustive" : "sampled"; }

// sum_x ((c3 x^3 + c1 x + c0)/p) with residues already reduced.
long long cubic_sum(Eval& e, u64 c3, u64 c2, u64 c1, u64 c0) {
    return char_sum(Cubic(e.p, i64(c3), i64(c2), i64(c1), i64(c0)), e.qr());
}

// Samples m as an integer residue class mod p^2 with p not dividing m;
// exhaustive over [1, 3p] on small primes (three lifts of every mod-p
// class), sampled from [1, p^2) otherwise.
template <class Fn>
void for_m_domain(Eval& e, Fn&& fn) {
    if (e.exhaustive()) {
        for (u64 m = 1; m <= 3 * e.p && !e.failed; ++m)
            if (m % e.p != 0) fn(m);
    } else {
        for (int i = 0; i < e.opt.samples && !e.failed; ++i) {
            u64 m = 1 + e.rand_below(e.p2 - 1);
            if (m % e.p != 0) fn(m);
        }
    }
}
}  // namespace

void eval_eq_1_1(Eval& e) {
    e.set_case(domain_label(e));
    const u64 p = e.p, p2 = e.p2, n = (p - 1) / 2;
    PadicCtx ctx(p);
    BinomStream central(BinomStream::Kind::central, p);
    u64 b1 = 1;  // C(n, k) mod p
    u64 b2 = 1;  // C(n+k, 2k) mod p^2
    const u64 w1 = inv_mod(-4, p), w2 = inv_mod(-16, p2);
    u64 w1k = 1, w2k = 1;
    std::vector<u64> inv_p2 = inverse_table(p - 1, p2, p);
    for (u64 k = 0; k <= n && !e.failed; ++k) {
        u64 cb_p2 = ctx.reduce(central.value(), p2);
        e.check_mod_p(b1, mul_mod(cb_p2 % p, w1k, p));
        e.check_mod_p2(b2, mul_mod(cb_p2, w2k, p2));
        e.note_witness("k=" + std::to_string(k));
        if (k == n) break;
        b1 = mul_mod(mul_mod(b1, n - k, p), inv_mod(i64(k + 1), p), p);
        b2 = mul_mod(b2, mul_mod((n + k + 1) % p2, (n - k) % p2, p2), p2);
        b2 = mul_mod(b2, mul_mod(inv_p2[2 * k + 1], inv_p2[2 * k + 2], p2), p2);
        w1k = mul_mod(w1k, w1, p);
        w2k = mul_mod(w2k, w2, p2);
        central.next();
    }
}

void eval_lemma_2_1(Eval& e) {
    e.set_case(domain_label(e));
    const u64 p = e.p, q = p / 4, n = (p - 1) / 2;
    PadicCtx ctx(p);
    BinomStream quartic(BinomStream::Kind::quartic, p);
    // b1 = C([p/4]+k, 2k) mod p; b2 = C(p-1-2k, (p-1)/2) mod p
    u64 b1 = 1;
    u64 b2 = 1;
    for (u64 i = 1; i <= n; ++i)  // C(p-1, n) = prod (p-i) / i
        b2 = mul_mod(mul_mod(b2, p - i, p), inv_mod(i64(i), p), p);
    const u64 w1 = inv_mod(-64, p), w2 = inv_mod(16, p);
    u64 w1k = 1, w2k = 1;
    const u64 sgn = sign_pow(n, p);
    for (u64 k = 0; k <= q && !e.failed; ++k) {
        u64 c4 = ctx.reduce(quartic.value(), p);
        e.check_mod_p(b1, mul_mod(c4, w1k, p));
        e.check_mod_p(b2, mul_mod(sgn, mul_mod(c4, w2k, p), p));
        e.note_witness("k=" + std::to_string(k));
        if (k == q) break;
        b1 = mul_mod(b1, mul_mod((q + k + 1) % p, (q - k) % p, p), p);
        b1 = mul_mod(b1, inv_mod(i64(mul_mod((2 * k + 1) % p, (2 * k + 2) % p, p)), p), p);
        u64 m = p - 1 - 2 * k;  // C(m-2, n) from C(m, n)
        b2 = mul_mod(b2, mul_mod((m - n) % p, (m - n - 1) % p, p), p);
        b2 = mul_mod(b2, inv_mod(i64(mul_mod(m % p, (m - 1) % p, p)), p), p);
        w1k = mul_mod(w1k, w1, p);
        w2k = mul_mod(w2k, w2, p);
        quartic.next();
    }
}

void eval_eq_1_2(Eval& e) {
    e.set_case(domain_label(e));
    for_domain(e, 0, e.p - 1, [&](u64 lam) {
        u64 lhs = a_p_lambda(e.p, PRational(i64(lam)));
        u64 rhs = lam == 0 ? 1
                           : sum_cb3_over_m(e.p, PRational(64) / PRational(i64(lam)),
                                            SumRange::half) % e.p;
        e.check_mod_p(lhs, rhs);
        e.note_witness("lambda=" + std::to_string(lam));
    });
}

void eval_eq_1_7(Eval& e) {
    e.set_case(domain_label(e));
    const u64 p = e.p;
    const i64 sym = -legendre_symbol(-6, p);
    for_domain(e, 0, p - 1, [&](u64 t) {
        FieldElem lhs = legendre_p((p - 1) / 2, e.fe(i64(t)));
        u64 t2 = mul_mod(t, t, p);
        u64 c1 = e.res(-3 * i64(add_mod(t2, 3, p)));
        u64 c0 = mul_mod(mul_mod(2, t, p), sub_mod(t2, 9 % p, p), p);
        long long cs = cubic_sum(e, 1, 0, c1, c0);
        e.check_field(lhs, e.fe(sym * cs));
        e.note_witness("t=" + std::to_string(t));
    });
}

void eval_lemma_2_2(Eval& e) {
    e.set_case(domain_label(e));
    const u64 p = e.p;
    const u64 inv128 = inv_mod(128, p);
    for_domain(e, 0, p - 1, [&](u64 t) {
        FieldElem lhs = legendre_p(p / 4, e.fe(i64(t)));
        u64 rhs = quarter_sum_weight(p, mul_mod(sub_mod(1, t, p), inv128, p), p);
        e.check_field(lhs, e.fe(i64(rhs)));
        e.note_witness("t=" + std::to_string(t));
    });
}

void eval_lemma_2_3(Eval& e) {
    e.set_case(domain_label(e));
    const u64 p = e.p;
    const u64 inv128 = inv_mod(128, p);
    const u64 sgn = sign_pow(p / 4, p);
    for_domain(e, 0, p - 1, [&](u64 t) {
        u64 lhs = quarter_sum_weight(p, mul_mod(sub_mod(1, t, p), inv128, p), p);
        u64 rhs = quarter_sum_weight(p, mul_mod(add_mod(1, t, p), inv128, p), p);
        e.check_mod_p(lhs, mul_mod(sgn, rhs, p));
        e.note_witness("t=" + std::to_string(t));
    });
}

void eval_lemma_2_4(Eval& e) {
    e.set_case(domain_label(e));
    const u64 p = e.p, n = (p - 1) / 2;
    const u64 sgn = sign_pow(p / 4, p);
    const u64 inv64 = inv_mod(64, p);
    std::vector<u64> inv = inverse_table(p / 2 + 2, p, p);
    for_domain(e, 0, p - 1, [&](u64 x) {
        FieldElem sx = e.sqrt_of(i64(x));
        FieldElem lhs = sx.pow(n) * legendre_p(n, sx);
        u64 rhs = 0;
        if (x != 0) {
            u64 c = 1, wk = 1;
            u64 xpow = pow_mod(x, n, p);
            const u64 xinv = inv_mod(i64(x), p);
            for (u64 k = 0; k <= p / 4; ++k) {
                rhs = add_mod(rhs, mul_mod(mul_mod(c, wk, p), xpow, p), p);
                if (k == p / 4) break;
                u64 num = to_residue(i64(4 * k + 1), p);
                num = mul_mod(num, to_residue(i64(4 * k + 2), p), p);
                num = mul_mod(num, to_residue(i64(4 * k + 3), p), p);
                num = mul_mod(num, to_residue(i64(4 * k + 4), p), p);
                num = mul_mod(num, mul_mod(to_residue(i64(2 * k + 1), p), 2, p), p);
                u64 den = mul_mod(mul_mod(inv[2 * k + 1], inv[2 * k + 2], p), inv[k + 1], p);
                den = mul_mod(den, mul_mod(inv[2 * k + 1], inv[2 * k + 2], p), p);
                c = mul_mod(c, mul_mod(num, den, p), p);
                wk = mul_mod(wk, inv64, p);
                xpow = mul_mod(xpow, xinv, p);
            }
            rhs = mul_mod(sgn, rhs, p);
        }
        e.check_field(lhs, e.fe(i64(rhs)));
        e.note_witness("x=" + std::to_string(x));
    });
}

void eval_lemma_2_5(Eval& e) {
    e.set_case(domain_label(e));
    const u64 p = e.p, n = (p - 1) / 2;
    for_domain(e, 2, p - 1, [&](u64 x) {
        u64 ratio = mul_mod(x, inv_mod(i64(x) - 1, p), p);  // x/(x-1)
        FieldElem sr = e.sqrt_of(i64(ratio));
        FieldElem t1 = sr.pow(n) * legendre_p(n, sr) *
                       e.fe(legendre_symbol(2 * (1 - i64(x)), p));
        FieldElem sx = e.sqrt_of(i64(x));
        FieldElem t2 = sx.pow(n) * legendre_p(n, sx);
        u64 arg = sub_mod(mul_mod(2, inv_mod(i64(x), p), p), 1 % p, p);
        FieldElem t3 = legendre_p(p / 4, e.fe(i64(arg))) * e.fe(legendre_symbol(i64(x), p));
        e.check_field(t1, t2);
        e.check_field(t2, t3);
        e.note_witness("x=" + std::to_string(x));
    });
}

void eval_lemma_2_6(Eval& e) {
    e.set_case(domain_label(e));
    const u64 p = e.p, n = (p - 1) / 2;
    const i64 sym = -legendre_symbol(-6, p);
    for_domain(e, 0, p - 1, [&](u64 u) {
        FieldElem su = e.sqrt_of(i64(u));
        FieldElem lhs = su.pow(n) * legendre_p(n, su);
        u64 c1 = e.res(-3 * (i64(u) + 3));
        u64 c0 = e.res(2 * (i64(u) - 9));
        long long cs = cubic_sum(e, u, 0, c1, c0);
        e.check_field(lhs, e.fe(sym * cs));
        e.note_witness("u=" + std::to_string(u));
    });
}

void eval_thm_2_1_i(Eval& e) {
    e.set_case(domain_label(e));
    const u64 p = e.p, n = (p - 1) / 2;
    const u64 inv64 = inv_mod(64, p);
    const u64 sgn = sign_pow(p / 4, p);
    for_domain(e, 1, p - 1, [&](u64 t) {
        const u64 tinv = inv_mod(i64(t), p);
        FieldElem st = e.sqrt_of(i64(t));
        FieldElem f1 = legendre_p(n, st) * st.pow(n).inverse();
        e.check_true(f1.in_base(), "(sqrt t)^{-(p-1)/2} P(sqrt t) lies in F_p");
        u64 f2 = legendre_p(p / 4, e.fe(i64(mul_mod(sub_mod(2 % p, t, p), tinv, p)))).a();
        u64 f3 = quarter_sum_weight(p, mul_mod(sub_mod(t, 1, p), mul_mod(inv64, tinv, p), p), p);
        u64 f4 = mul_mod(sgn, quarter_sum_weight(p, mul_mod(inv64, tinv, p), p), p);
        long long cs = cubic_sum(e, t, 0, e.res(-3 * (i64(t) + 3)), e.res(2 * (i64(t) - 9)));
        u64 f5 = e.res(-legendre_symbol(-6 * i64(t), p) * cs);
        e.check_mod_p(f1.a(), f2);
        e.check_mod_p(f2, f3);
        e.check_mod_p(f3, f4);
        e.check_mod_p(f4, f5);
        e.note_witness("t=" + std::to_string(t));
    });
}

void eval_thm_2_1_ii(Eval& e) {
    e.set_case(domain_label(e));
    const u64 p = e.p;
    const u64 inv128 = inv_mod(128, p);
    const u64 inv2 = inv_mod(2, p);
    const i64 sym = -legendre_symbol(6, p);
    for_domain(e, 0, p - 1, [&](u64 t) {
        FieldElem f1 = legendre_p(p / 4, e.fe(i64(t)));
        u64 f2 = quarter_sum_weight(p, mul_mod(sub_mod(1, t, p), inv128, p), p);
        u64 c1 = mul_mod(e.res(-3 * (3 * i64(t) + 5)), inv2, p);
        long long cs = cubic_sum(e, 1, 0, c1, e.res(9 * i64(t) + 7));
        u64 f3 = e.res(sym * cs);
        e.check_field(f1, e.fe(i64(f2)));
        e.check_mod_p(f2, f3);
        e.note_witness("t=" + std::to_string(t));
    });
}

void eval_cor_2_1(Eval& e) {
    if (e.p < 17) e.bail("stated for p >= 17");
    e.set_case(domain_label(e));
    const u64 p = e.p;
    const u64 inv2 = inv_mod(2, p);
    const int s2 = legendre_symbol(2, p);
    for_domain(e, 0, p - 1, [&](u64 t) {
        u64 cl1 = mul_mod(e.res(-3 * (3 * i64(t) + 5)), inv2, p);
        long long lhs = cubic_sum(e, 1, 0, cl1, e.res(9 * i64(t) + 7));
        u64 cr1 = mul_mod(e.res(3 * (3 * i64(t) - 5)), inv2, p);
        long long rhs = cubic_sum(e, 1, 0, cr1, e.res(9 * i64(t) - 7));
        e.check_exact(lhs, s2 * rhs);
        e.note_witness("t=" + std::to_string(t));
    });
}

void eval_thm_3_1(Eval& e) {
    e.set_case(domain_label(e));
    const u64 p = e.p, p2 = e.p2, n = (p - 1) / 2;
    for_m_domain(e, [&](u64 mval) {
        PRational m{i64(mval)};
        u64 lhs = sum_cb3_over_m(p, m, SumRange::half);
        u64 w = (PRational(-16) / m).lift(p2);
        e.check_mod_p2(lhs, s_poly_mod(n, w, p2, p));
        PRational a_r = PRational(1) - PRational(64) / m;
        u64 A = a_r.lift(p2);
        if (A % p != 0 && e.qr()(A % p) == 1) {
            u64 root = hensel_sqrt(A, p, e.opt.flip_roots);
            u64 v = legendre_p_mod(n, root, p2, p);
            e.check_mod_p2(mul_mod(v, v, p2), lhs);
        }
        e.note_witness("m=" + std::to_string(mval));
    });
}

void eval_thm_4_1(Eval& e) {
    e.set_case(domain_label(e));
    const u64 p = e.p, p2 = e.p2;
    for_domain(e, 0, p - 1, [&](u64 x) {
        u64 w = mul_mod(x, sub_mod(1 % p2, mul_mod(64 % p2, x, p2), p2), p2);
        u64 lhs = full_sum_weighted(p, w, 2);
        u64 s = full_sum_weighted(p, x, 1);
        e.check_mod_p2(lhs, mul_mod(s, s, p2));
        e.note_witness("x=" + std::to_string(x));
    });
}

void eval_cor_4_1(Eval& e) {
    e.set_case(domain_label(e));
    const u64 p = e.p, p2 = e.p2;
    const u64 inv128 = inv_mod(128, p2);
    int admissible = 0;
    for_m_domain(e, [&](u64 mval) {
        PRational m{i64(mval)};
        u64 A = (PRational(1) - PRational(256) / m).lift(p2);
        if (A % p == 0 || e.qr()(A % p) != 1) return;  // surd not liftable
        ++admissible;
        u64 root = hensel_sqrt(A, p, e.opt.flip_roots);
        u64 x0 = mul_mod(sub_mod(1 % p2, root, p2), inv128, p2);
        u64 s = full_sum_weighted(p, x0, 1);
        e.check_mod_p2(sum_cb2_c4k_over_m(p, m), mul_mod(s, s, p2));
        e.note_witness("m=" + std::to_string(mval));
    });
    if (admissible == 0) e.bail("no m with 1-256/m a nonzero QR was sampled");
}

void eval_thm_4_2(Eval& e) {
    e.set_case(domain_label(e));
    const u64 p = e.p, n = (p - 1) / 2;
    for_m_domain(e, [&](u64 mval) {
        PRational m{i64(mval)};
        u64 lhs_p2 = sum_cb2_c4k_over_m(p, m);
        u64 A = (PRational(1) - PRational(256) / m).lift(p);
        FieldElem t = e.sqrt_of(i64(A));
        FieldElem P = legendre_p(p / 4, t);
        FieldElem P2 = P * P;
        e.check_true(P2.in_base(), "P_[p/4](t)^2 lies in F_p");
        FieldElem S(0, t.desc());
        if (t.in_base()) {
            long long cs = cubic_sum(e, 1, 4, sub_mod(2 % p, mul_mod(2, t.a(), p), p), 0);
            S = e.fe(cs);
        } else {
            FieldElem c1 = e.fe(2) - t - t;
            for (u64 x = 0; x < p; ++x) {
                u64 base = mul_mod(mul_mod(x, x, p), x, p);
                base = add_mod(base, mul_mod(4, mul_mod(x, x, p), p), p);
                S = S + (e.fe(i64(base)) + c1 * e.fe(i64(x))).pow(n);
            }
        }
        e.check_mod_p(lhs_p2 % p, P2.a());
        e.check_field(S * S, P2);
        // the zero refinement needs t nonzero mod p (m != 256 mod p)
        if (A % p != 0 && P2.is_zero()) e.check_mod_p2(lhs_p2, 0);
        e.note_witness("m=" + std::to_string(mval));
    });
}

void eval_lemma_4_2(Eval& e) {
    e.set_case(domain_label(e));
    const u64 p = e.p;
    for_domain(e, 0, p - 1, [&](u64 s) {
        FieldElem lhs = legendre_p(p / 4, e.fe(i64(s)));
        long long cs = cubic_sum(e, 1, 4, sub_mod(2 % p, mul_mod(2, s, p), p), 0);
        e.check_field(lhs, e.fe(-cs));
        e.note_witness("s=" + std::to_string(s));
    });
}

void eval_lemma_5_1(Eval& e) {
    e.set_case(domain_label(e));
    const u64 p = e.p;
    auto one = [&](u64 a, u64 m, u64 n) {
        bool ok = scale_check(Cubic(p, 1, 0, i64(m), i64(n)), a, e.qr());
        e.check_true(ok, "scaling identity at a=" + std::to_string(a));
        e.note_witness("(a,m,n)=(" + std::to_string(a) + "," + std::to_string(m) + "," +
                       std::to_string(n) + ")");
    };
    if (e.exhaustive()) {
        for (u64 a = 0; a < p && !e.failed; ++a)
            one(a, e.rand_below(p), e.rand_below(p));
    } else {
        for (int i = 0; i < e.opt.samples && !e.failed; ++i)
            one(e.rand_below(p), e.rand_below(p), e.rand_below(p));
    }
}

}  // namespace supercong::claims
