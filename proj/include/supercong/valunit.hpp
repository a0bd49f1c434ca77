#pragma once

// Valuation-tracked residues u * p^e with p coprime to u, the workhorse for
// exact mod-p^2 sums of binomial products that are themselves divisible by
// powers of p.
//
// Units are stored mod p^3.  Every represented value is then known exactly
// mod p^(e+3), so reduction mod p^2 stays exact through any sequence of
// multiplications and additions, including additions that cancel: a sum
// whose unit part vanishes mod p^3 is kept as (e+3, 0), i.e. "zero to the
// tracked precision", which still reduces correctly mod p^2 because
// e + 3 >= 3.  One division by p inside a stream recurrence is likewise
// harmless: the quotient's unit is still exact mod p^3.

#include "supercong/arith.hpp"

namespace supercong {

struct ValUnit {
    static constexpr u32 kInf = 0xffffffffu;

    u32 e = kInf;  // p-adic valuation; kInf marks the canonical zero
    u64 u = 0;     // unit residue mod p^3 (p coprime to u when nonzero)

    static ValUnit zero() { return {}; }
    bool is_zero() const { return e == kInf; }
    bool operator==(const ValUnit& o) const = default;
};

// Per-prime context carrying p, p^2, p^3.  Requires p odd prime < 2^21 so
// that p^3 fits a 64-bit word and unit products fit 128 bits.
class PadicCtx {
public:
    explicit PadicCtx(u64 p);

    u64 p() const { return p_; }
    u64 p2() const { return p2_; }
    u64 p3() const { return p3_; }

    ValUnit from_int(i64 v) const;
    ValUnit from_unit(u64 residue_mod_p3) const;  // requires p coprime to residue

    ValUnit mul(ValUnit a, ValUnit b) const;
    ValUnit add(ValUnit a, ValUnit b) const;
    ValUnit sub(ValUnit a, ValUnit b) const;
    ValUnit neg(ValUnit a) const;

    // Exact division; the divisor's valuation must not exceed the
    // dividend's (binomial streams only divide values they know divide).
    ValUnit div(ValUnit a, ValUnit b) const;

    u64 reduce_mod_p2(ValUnit a) const { return reduce(a, p2_); }
    u64 reduce(ValUnit a, u64 m) const;

private:
    u64 p_, p2_, p3_;
};

}  // namespace supercong
