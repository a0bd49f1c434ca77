#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "supercong/legendre.hpp"
#include "supercong/primes.hpp"

using namespace supercong;

TEST_CASE("base cases and small values") {
    FieldDesc d = FieldDesc::base(101);
    for (u64 x : {0ull, 1ull, 7ull, 100ull}) {
        CHECK(legendre_p(0, FieldElem(x, d)) == FieldElem(1, d));
        CHECK(legendre_p(1, FieldElem(x, d)) == FieldElem(x, d));
    }
    CHECK(legendre_p(2, FieldElem(3, d)).a() == 13);  // (3*9 - 1)/2
    // P_4(0) = 3/8
    CHECK(legendre_p(4, FieldElem(0, d)).a() == mul_mod(3, inv_mod(8, 101), 101));
    CHECK_THROWS_AS(legendre_p(7, FieldElem(2, FieldDesc::base(7))), index_too_large_error);
}

TEST_CASE("evaluation mod p^2") {
    CHECK(legendre_p_mod_p2(1, PRational(3), 7) == 3);
    CHECK(legendre_p_mod_p2(2, PRational(3), 11) == 13);  // exact value 13
    CHECK(legendre_p_mod_p2(3, PRational(3), 5) == 63 % 25);  // (5*3*13 - 2*3)/3 = 63
}

TEST_CASE("parity: P_n(-x) = (-1)^n P_n(x)") {
    std::mt19937_64 rng(7);
    for (u64 p : {13ull, 101ull, 997ull}) {
        FieldDesc d = FieldDesc::quadratic(p);
        for (int i = 0; i < 30; ++i) {
            u64 n = rng() % p;
            FieldElem x(rng() % p, rng() % p, d);
            FieldElem lhs = legendre_p(n, -x);
            FieldElem rhs = legendre_p(n, x);
            if (n % 2 == 1) rhs = -rhs;
            CAPTURE(p);
            CAPTURE(n);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("recurrence route equals the C(n,k)C(n+k,k) sum route") {
    std::mt19937_64 rng(11);
    int done = 0;
    auto ps = primes_in_range(5, 400);
    while (done < 100) {
        u64 p = ps[rng() % ps.size()];
        u64 n = rng() % std::min<u64>(p, 60);
        u64 x = rng() % p;
        FieldDesc d = FieldDesc::base(p);
        // P_n(t) = sum C(n,k) C(n+k,k) ((t-1)/2)^k
        u64 w = mul_mod(sub_mod(x, 1 % p, p), inv_mod(2, p), p);
        u64 acc = 0, c = 1, wk = 1;
        for (u64 k = 0; k <= n; ++k) {
            acc = add_mod(acc, mul_mod(c, wk, p), p);
            if (k == n) break;
            u64 num = mul_mod(to_residue(i64(n - k), p), to_residue(i64(n + k + 1), p), p);
            c = mul_mod(c, mul_mod(num, inv_mod(i64(mul_mod((k + 1) % p, (k + 1) % p, p)), p), p), p);
            wk = mul_mod(wk, w, p);
        }
        CAPTURE(p);
        CAPTURE(n);
        CAPTURE(x);
        CHECK(legendre_p(n, FieldElem(x, d)).a() == acc);
        ++done;
    }
}

TEST_CASE("S_n values and the square identity") {
    FieldDesc d = FieldDesc::base(97);
    for (u64 x : {0ull, 1ull, 5ull, 60ull}) {
        CHECK(s_poly(0, FieldElem(x, d)) == FieldElem(1, d));
        CHECK(s_poly(1, FieldElem(x, d)).a() == add_mod(1, mul_mod(4, x, 97), 97));
    }
    // S_1((x^2-1)/4) = x^2 = P_1(x)^2, and the general S_n identity at n <= 8
    std::mt19937_64 rng(3);
    for (u64 p : {13ull, 97ull, 499ull}) {
        FieldDesc dp = FieldDesc::base(p);
        for (u64 n = 0; n <= 8; ++n) {
            u64 x = rng() % p;
            u64 arg = mul_mod(sub_mod(mul_mod(x, x, p), 1 % p, p), inv_mod(4, p), p);
            FieldElem s = s_poly(n, FieldElem(arg, dp));
            FieldElem ps = legendre_p(n, FieldElem(x, dp));
            CHECK(s == ps * ps);
        }
    }
}

TEST_CASE("s_poly_mod matches s_poly mod p") {
    for (u64 p : {11ull, 101ull}) {
        FieldDesc d = FieldDesc::base(p);
        for (u64 x = 0; x < p; x += 3) {
            u64 n = (p - 1) / 2;
            CHECK(s_poly_mod(n, x, p, p) == s_poly(n, FieldElem(x, d)).a());
        }
    }
}

TEST_CASE("P_[p/4] dual route") {
    for (u64 p : primes_in_range(5, 300)) {
        FieldDesc d = FieldDesc::base(p);
        // t = -1: (-1)^[p/4]; t = 1: 1
        FieldElem at1 = legendre_p_quarter(FieldElem(1, d), p);
        CHECK(at1 == FieldElem(1, d));
        FieldElem atm1 = legendre_p_quarter(FieldElem(p - 1, d), p);
        u64 want = p / 4 % 2 == 0 ? 1 : p - 1;
        CHECK(atm1.a() == want);
    }
    // p = 11, t = 0: [p/4] = 2, P_2(0) = -1/2 = 5 mod 11
    CHECK(legendre_p_quarter(FieldElem(0, FieldDesc::base(11)), 11).a() == 5);
}

TEST_CASE("quarter evaluation works in the extension too") {
    for (u64 p : {13ull, 29ull, 149ull}) {
        FieldDesc d = FieldDesc::quadratic(p);
        std::mt19937_64 rng(p);
        for (int i = 0; i < 10; ++i) {
            FieldElem t(rng() % p, rng() % p, d);
            CHECK_NOTHROW(legendre_p_quarter(t, p));
        }
    }
}
