#pragma once

// Legendre polynomial evaluation over F_p, F_p(sqrt(delta)) and Z/p^2Z,
// plus the companion polynomial S_n(x) = sum C(n,k) C(n+k,k) C(2k,k) x^k.

#include "supercong/arith.hpp"

namespace supercong {

// P_n(x) by the three-term recurrence; requires n < char(x).
FieldElem legendre_p(u64 n, const FieldElem& x);

// P_n over Z/modulus with modulus = p or p^2; all recurrence divisors k+1
// must be coprime to p, so n < p (throws index_too_large_error otherwise).
u64 legendre_p_mod(u64 n, u64 x, u64 modulus, u64 p);
u64 legendre_p_mod_p2(u64 n, const PRational& x, u64 p);

// S_n by direct summation with streamed coefficient updates; n < p.
FieldElem s_poly(u64 n, const FieldElem& x);
u64 s_poly_mod(u64 n, u64 x, u64 modulus, u64 p);

// P_[p/4](t), computed both by the recurrence and by the truncated sum
// sum_{k<=[p/4]} C(4k,2k) C(2k,k) ((1-t)/128)^k; the two routes must agree
// (internal consistency check).  p > 3.
FieldElem legendre_p_quarter(const FieldElem& t, u64 p);

}  // namespace supercong
