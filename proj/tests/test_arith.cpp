#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <random>

#include "supercong/arith.hpp"
#include "supercong/primes.hpp"
#include "supercong/valunit.hpp"

using namespace supercong;

TEST_CASE("legendre symbol basics") {
    CHECK(legendre_symbol(2, 7) == 1);   // 3^2 = 2 mod 7
    CHECK(legendre_symbol(0, 5) == 0);
    CHECK(legendre_symbol(3, 7) == -1);  // squares mod 7 are {1,2,4}
    CHECK(legendre_symbol(-1, 5) == 1);
    CHECK(legendre_symbol(-1, 7) == -1);
    CHECK_THROWS_AS(legendre_symbol(3, 8), invalid_modulus_error);
    CHECK_THROWS_AS(legendre_symbol(3, 2), invalid_modulus_error);
}

TEST_CASE("legendre symbol matches Euler's criterion") {
    for (u64 p : primes_in_range(3, 200)) {
        for (i64 a = -5; a < i64(p) + 5; ++a) {
            int sym = legendre_symbol(a, p);
            u64 eu = pow_mod(to_residue(a, p), (p - 1) / 2, p);
            int eu_sym = eu == 0 ? 0 : (eu == 1 ? 1 : -1);
            CAPTURE(p);
            CAPTURE(a);
            CHECK(sym == eu_sym);
        }
    }
}

TEST_CASE("inv_mod") {
    CHECK(inv_mod(3, 7) == 5);
    CHECK(inv_mod(2, 25) == 13);
    CHECK_THROWS_AS(inv_mod(5, 25), not_invertible_error);
    CHECK(inv_mod(-5, 7) == inv_mod(2, 7));
}

TEST_CASE("inverse_table mod p and p^2") {
    for (u64 p : {5ull, 13ull, 97ull}) {
        auto t1 = inverse_table(p - 1, p, p);
        auto t2 = inverse_table(p - 1, p * p, p);
        for (u64 i = 1; i < p; ++i) {
            CHECK(t1[i] == inv_mod(i64(i), p));
            CHECK(t2[i] == inv_mod(i64(i), p * p));
        }
    }
}

TEST_CASE("sqrt_in_field examples") {
    FieldElem r = sqrt_in_field(4, 7);
    CHECK(r.a() == 2);
    CHECK(r.in_base());
    r = sqrt_in_field(2, 7);
    CHECK(r.a() == 3);  // canonical root: min(3, 4)
    r = sqrt_in_field(2, 5);
    CHECK_FALSE(r.in_base());
    CHECK(r.a() == 0);
    CHECK(r.b() == 1);
    CHECK(*r.desc().ext == 2);  // least non-residue mod 5
}

TEST_CASE("sqrt_in_field squares back everywhere") {
    for (u64 p : primes_in_range(3, 120)) {
        for (u64 a = 0; a < p; ++a) {
            FieldElem r = sqrt_in_field(a, p);
            FieldElem sq = r * r;
            CAPTURE(p);
            CAPTURE(a);
            CHECK(sq.in_base());
            CHECK(sq.a() == a);
        }
    }
}

TEST_CASE("field arithmetic and Frobenius") {
    std::mt19937_64 rng(12345);
    for (u64 p : {5ull, 13ull, 101ull, 65537ull}) {
        FieldDesc ext = FieldDesc::quadratic(p);
        // defining relation
        FieldElem s(0, 1, ext);
        CHECK((s * s).a() == *ext.ext);
        for (int i = 0; i < 50; ++i) {
            FieldElem x(rng() % p, rng() % p, ext);
            if (x.is_zero()) continue;
            CHECK(x.pow(u128(p) * p - 1) == FieldElem(1, ext));
            CHECK(x.pow(p) == x.frobenius());
            CHECK(x * x.inverse() == FieldElem(1, ext));
            FieldElem y(rng() % p, rng() % p, ext);
            if (!y.is_zero()) CHECK((x / y) * y == x);
        }
    }
}

TEST_CASE("PRational and lift") {
    PRational r(-5, 3);
    CHECK(r.lift(7) == 3);  // -5 * inv(3) = -25 = 3 mod 7
    CHECK(PRational(6, 4) == PRational(3, 2));
    CHECK(PRational(1, -2) == PRational(-1, 2));
    CHECK((PRational(1) - PRational(64) / PRational(65)) == PRational(1, 65));
    CHECK_THROWS_AS(PRational(1, 5).lift(25), not_invertible_error);
    FieldElem fe = lift(PRational(-5, 3), FieldDesc::base(7));
    CHECK(fe.a() == 3);
}

TEST_CASE("ValUnit examples") {
    PadicCtx ctx(7);
    ValUnit a{1, 3}, b{1, 5};
    ValUnit prod = ctx.mul(a, b);
    CHECK(prod.e == 2);
    CHECK(prod.u == 15);
    CHECK(ctx.reduce_mod_p2(prod) == 0);  // valuation >= 2

    ValUnit one = ctx.from_int(1), six = ctx.from_int(6);
    ValUnit sum = ctx.add(one, six);  // 1 + 6 = 7: carry into the valuation
    CHECK(sum.e == 1);
    CHECK(sum.u == 1);

    CHECK(ctx.reduce_mod_p2(ValUnit{1, 3}) == 21);
    CHECK(ctx.reduce_mod_p2(ValUnit::zero()) == 0);
}

TEST_CASE("ValUnit arithmetic agrees with big integers mod p^2") {
    std::mt19937_64 rng(99);
    for (u64 p : {5ull, 11ull, 101ull, 1009ull}) {
        PadicCtx ctx(p);
        const u64 p2 = p * p;
        for (int i = 0; i < 10000 / 4; ++i) {
            i64 x = i64(rng() % 2000000) - 1000000;
            i64 y = i64(rng() % 2000000) - 1000000;
            mpz_class gx(static_cast<long>(x)), gy(static_cast<long>(y));
            ValUnit vx = ctx.from_int(x), vy = ctx.from_int(y);
            mpz_class m = (gx * gy) % p2;
            if (m < 0) m += p2;
            CHECK(ctx.reduce_mod_p2(ctx.mul(vx, vy)) == m.get_ui());
            mpz_class s = (gx + gy) % p2;
            if (s < 0) s += p2;
            CHECK(ctx.reduce_mod_p2(ctx.add(vx, vy)) == s.get_ui());
            mpz_class d = (gx - gy) % p2;
            if (d < 0) d += p2;
            CHECK(ctx.reduce_mod_p2(ctx.sub(vx, vy)) == d.get_ui());
        }
    }
}

TEST_CASE("ValUnit cancellation keeps mod-p^2 exactness") {
    PadicCtx ctx(5);
    // (2 + 5^3 * 3) - 2 cancels the unit part entirely; the result must
    // still reduce to 0 mod 25 (true value 375 has valuation 3).
    ValUnit a = ctx.add(ctx.from_int(2), ValUnit{3, 3});
    ValUnit diff = ctx.sub(a, ctx.from_int(2));
    CHECK(ctx.reduce_mod_p2(diff) == 0);
}
