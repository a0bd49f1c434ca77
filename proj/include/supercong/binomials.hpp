#pragma once

// Streaming, valuation-tracked central and quartic binomial coefficients
// C(2k,k) and C(4k,2k), and the truncated sums built from them.  Streams
// advance by multiplicative recurrences with all divisions performed in
// ValUnit space, so results are exact mod p^2 without big integers.

#include "supercong/valunit.hpp"

namespace supercong {

class BinomStream {
public:
    enum class Kind { central, quartic };

    BinomStream(Kind kind, u64 p);

    Kind kind() const { return kind_; }
    u64 k() const { return k_; }
    const ValUnit& value() const { return cur_; }
    const PadicCtx& ctx() const { return ctx_; }

    // Advance to k+1 and return the new coefficient.  k+1 must stay <= p-1.
    ValUnit next();

private:
    Kind kind_;
    PadicCtx ctx_;
    u64 k_ = 0;
    ValUnit cur_{0, 1};
};

enum class SumRange { half, full };            // (p-1)/2 vs p-1
enum class QuarterRange { quarter, full };     // [p/4] vs p-1
enum class Modulus { p, p2 };

// sum_{k=0}^{range} C(2k,k)^3 / m^k mod p^2.
u64 sum_cb3_over_m(u64 p, const PRational& m, SumRange range);

// sum_{k=0}^{range} C(2k,k) C(4k,2k) / m^k, mod p or p^2.  Terms with
// [p/4] < k < p are each divisible by p (asserted).
u64 sum_c2k_c4k_over_m(u64 p, const PRational& m, QuarterRange range, Modulus mod);

// sum_{k=0}^{p-1} C(2k,k)^2 C(4k,2k) / m^k mod p^2.
u64 sum_cb2_c4k_over_m(u64 p, const PRational& m);

// A(p, lambda) = sum_{k=0}^{(p-1)/2} C((p-1)/2, k)^2 C((p-1)/2+k, 2k)
// lambda^{kp} mod p, from literal binomials of (p-1)/2.
u64 a_p_lambda(u64 p, const PRational& lambda);

// Kernel shared by the quarter-range claims: sum_{k=0}^{[p/4]}
// C(4k,2k) C(2k,k) w^k mod `modulus` (modulus = p or p^2, divisor factors
// stay below p on this range).
u64 quarter_sum_weight(u64 p, u64 w, u64 modulus);

// sum_{k=0}^{p-1} C(2k,k)^central_power C(4k,2k) w^k mod p^2 for an
// arbitrary integer weight w (may be divisible by p); central_power is 1
// or 2.
u64 full_sum_weighted(u64 p, u64 w_mod_p2, int central_power);

}  // namespace supercong
