#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <random>

#include "supercong/binomials.hpp"
#include "supercong/primes.hpp"

using namespace supercong;

namespace {
u64 binom_mod(unsigned long n, unsigned long k, u64 m) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    mpz_class r = b % m;
    return r.get_ui();
}
}  // namespace

TEST_CASE("central stream: textbook values") {
    BinomStream bs(BinomStream::Kind::central, 1021);
    const PadicCtx& ctx = bs.ctx();
    u64 expect[] = {1, 2, 6, 20, 70, 252};
    CHECK(ctx.reduce(bs.value(), 1021) == 1);
    for (int k = 1; k <= 5; ++k)
        CHECK(ctx.reduce(bs.next(), 1021ull * 1021) == expect[k]);
}

TEST_CASE("central stream tracks the valuation: C(12,6) = 11 * 84") {
    BinomStream bs(BinomStream::Kind::central, 11);
    ValUnit v;
    for (int k = 1; k <= 6; ++k) v = bs.next();
    CHECK(v.e == 1);
    CHECK(v.u == 84);
}

TEST_CASE("quartic stream: C(8,4) = 70") {
    BinomStream bs(BinomStream::Kind::quartic, 101);
    bs.next();
    ValUnit v = bs.next();
    CHECK(bs.ctx().reduce(v, 101) == 70);
}

TEST_CASE("streams equal big-integer binomials mod p^3 for k <= 200") {
    for (u64 p : primes_in_range(5, 200)) {
        BinomStream c(BinomStream::Kind::central, p);
        BinomStream q(BinomStream::Kind::quartic, p);
        const PadicCtx& ctx = c.ctx();
        const u64 p3 = ctx.p3();
        u64 kmax = std::min<u64>(200, p - 1);
        for (u64 k = 1; k <= kmax; ++k) {
            ValUnit vc = c.next(), vq = q.next();
            CAPTURE(p);
            CAPTURE(k);
            CHECK(ctx.reduce(vc, p3) == binom_mod(2 * k, k, p3));
            CHECK(ctx.reduce(vq, p3) == binom_mod(4 * k, 2 * k, p3));
        }
        CHECK_THROWS_AS([&] { BinomStream s(BinomStream::Kind::central, 5);
                              for (int i = 0; i < 5; ++i) s.next(); }(),
                        index_too_large_error);
    }
}

TEST_CASE("sum of C(2k,k)^3/m^k") {
    // direct big-integer summation: 1+8+216+8000+343000+16003008 = 16354233
    CHECK(sum_cb3_over_m(11, PRational(1), SumRange::half) == 16354233 % 121);
    CHECK(sum_cb3_over_m(11, PRational(1), SumRange::half) == 115);
    // consistency with the quadratic form 11 = 2^2 + 7: 4*4 - 22 = -6 = 115 mod 121
    CHECK(sum_cb3_over_m(11, PRational(1), SumRange::half) == (121 - 6) % 121);
    CHECK(sum_cb3_over_m(3, PRational(1), SumRange::half) == 0);  // 1 + 8 = 9
    CHECK_THROWS_AS(sum_cb3_over_m(5, PRational(10, 3), SumRange::half), inapplicable_error);
}

TEST_CASE("sum C(2k,k)C(4k,2k)/m^k") {
    CHECK(sum_c2k_c4k_over_m(5, PRational(72), QuarterRange::quarter, Modulus::p) == 2);
    for (i64 m : {5, 7, 11, 13}) {
        // two-term sum for p = 7: 1 + 12/m mod 7
        u64 v = sum_c2k_c4k_over_m(7, PRational(m), QuarterRange::quarter, Modulus::p);
        CHECK(v == add_mod(1, mul_mod(12 % 7, inv_mod(m, 7), 7), 7));
    }
    CHECK(sum_c2k_c4k_over_m(11, PRational(1), QuarterRange::quarter, Modulus::p) ==
          2533 % 11);  // 1 + 12 + 36*70
}

TEST_CASE("full-range sum equals half/quarter behavior") {
    // tail terms of the cube sum carry p^3, so half and full sums agree mod p
    for (u64 p : primes_in_range(5, 60)) {
        for (i64 m : {1, -8, 5}) {
            u64 h = sum_cb3_over_m(p, PRational(m), SumRange::half);
            u64 f = sum_cb3_over_m(p, PRational(m), SumRange::full);
            CAPTURE(p);
            CAPTURE(m);
            CHECK(h % p == f % p);
        }
    }
}

TEST_CASE("sum C(2k,k)^2 C(4k,2k)/m^k") {
    CHECK(sum_cb2_c4k_over_m(3, PRational(256)) == 7);  // 1 + 24*inv(4) mod 9
    // big-integer oracle at p = 5, m = 1
    {
        const u64 p2 = 25;
        mpz_class acc = 0;
        for (unsigned k = 0; k <= 4; ++k) {
            mpz_class c, q;
            mpz_bin_uiui(c.get_mpz_t(), 2 * k, k);
            mpz_bin_uiui(q.get_mpz_t(), 4 * k, 2 * k);
            acc += c * c * q;
        }
        acc %= p2;
        CHECK(sum_cb2_c4k_over_m(5, PRational(1)) == acc.get_ui());
    }
}

TEST_CASE("weighted full sums handle w divisible by p") {
    CHECK(full_sum_weighted(7, 0, 2) == 1);  // only k = 0 survives
    // against the big-integer oracle for small p and several weights
    for (u64 p : {5ull, 11ull, 13ull}) {
        const u64 p2 = p * p;
        for (u64 w : {0ull, 1ull, p, p + 3, 3 * p * p / 2}) {
            mpz_class acc1 = 0, acc2 = 0, wk = 1;
            for (u64 k = 0; k < p; ++k) {
                mpz_class c, q;
                mpz_bin_uiui(c.get_mpz_t(), 2 * k, k);
                mpz_bin_uiui(q.get_mpz_t(), 4 * k, 2 * k);
                acc1 += c * q * wk;
                acc2 += c * c * q * wk;
                wk *= static_cast<unsigned long>(w % p2);
            }
            CAPTURE(p);
            CAPTURE(w);
            CHECK(full_sum_weighted(p, w % p2, 1) == mpz_class(acc1 % p2).get_ui());
            CHECK(full_sum_weighted(p, w % p2, 2) == mpz_class(acc2 % p2).get_ui());
        }
    }
}

TEST_CASE("quarter_sum_weight against direct evaluation") {
    for (u64 p : {11ull, 13ull, 29ull, 97ull}) {
        const u64 p2 = p * p;
        for (u64 w : {1ull, 3ull, p - 1}) {
            mpz_class acc = 0, wk = 1;
            for (u64 k = 0; k <= p / 4; ++k) {
                mpz_class c, q;
                mpz_bin_uiui(c.get_mpz_t(), 2 * k, k);
                mpz_bin_uiui(q.get_mpz_t(), 4 * k, 2 * k);
                acc += c * q * wk;
                wk *= static_cast<unsigned long>(w);
            }
            CHECK(quarter_sum_weight(p, w, p) == mpz_class(acc % p).get_ui());
            CHECK(quarter_sum_weight(p, w, p2) == mpz_class(acc % p2).get_ui());
        }
    }
}

TEST_CASE("A(p, lambda)") {
    CHECK(a_p_lambda(7, PRational(0)) == 1);
    CHECK(a_p_lambda(5, PRational(1)) == 4);  // 1 + 4*3 + 1*1 = 14 = 4 mod 5
    // literal definition at p = 11, lambda = 3
    {
        const u64 p = 11;
        mpz_class acc = 0;
        for (unsigned k = 0; k <= 5; ++k) {
            mpz_class b1, b2, lp;
            mpz_bin_uiui(b1.get_mpz_t(), 5, k);
            mpz_bin_uiui(b2.get_mpz_t(), 5 + k, 2 * k);
            mpz_ui_pow_ui(lp.get_mpz_t(), 3, k * p);
            acc += b1 * b1 * b2 * lp;
        }
        CHECK(a_p_lambda(p, PRational(3)) == mpz_class(acc % p).get_ui());
    }
}

TEST_CASE("ValUnit pipeline spot checks against big integers") {
    std::mt19937_64 rng(2024);
    auto ps = primes_in_range(5, 2000);
    for (int i = 0; i < 400; ++i) {
        u64 p = ps[rng() % ps.size()];
        u64 k = 1 + rng() % std::min<u64>(p - 1, 300);
        BinomStream c(BinomStream::Kind::central, p);
        BinomStream q(BinomStream::Kind::quartic, p);
        for (u64 j = 0; j < k; ++j) {
            c.next();
            q.next();
        }
        const u64 p2 = p * p;
        CAPTURE(p);
        CAPTURE(k);
        CHECK(c.ctx().reduce_mod_p2(c.value()) == binom_mod(2 * k, k, p2));
        CHECK(q.ctx().reduce_mod_p2(q.value()) == binom_mod(4 * k, 2 * k, p2));
    }
}
