#pragma once

// Character sums sum_x ((f(x))/p) for cubics f, cubic depression and
// scaling transforms, elliptic-curve point counts, and the table of CM
// curves whose Frobenius traces the registry checks against.
//
// char_sum() is the OpenMP kernel (Horner evaluation against a precomputed
// residuosity table); char_sum_serial() is an independent serial reference
// that classifies every point through the Jacobi chain instead, kept for
// testing and benchmarking.

#include <optional>
#include <utility>
#include <vector>

#include "supercong/arith.hpp"

namespace supercong {

struct Cubic {
    u64 p;
    u64 a3, a2, a1, a0;  // reduced mod p

    Cubic(u64 p, i64 c3, i64 c2, i64 c1, i64 c0);

    u64 eval(u64 x) const {
        u64 v = mul_mod(a3, x, p);
        v = mul_mod(add_mod(v, a2, p), x, p);
        v = mul_mod(add_mod(v, a1, p), x, p);
        return add_mod(v, a0, p);
    }
    bool depressed() const { return a2 == 0; }
    // True cubic (a3 != 0) with nonzero discriminant.
    bool nonsingular() const;
};

// Quadratic-residuosity table: one byte per residue, built by squaring
// enumeration.  tab(v) in {-1, 0, +1}.
class QrTable {
public:
    explicit QrTable(u64 p);
    u64 p() const { return p_; }
    int operator()(u64 v) const { return tab_[v]; }

private:
    u64 p_;
    std::vector<signed char> tab_;
};

// sum_{x=0}^{p-1} ((f(x))/p), exact.  The nonsingular-cubic result is
// checked against the Weil bound |S| <= 2 sqrt(p) on every call.
long long char_sum(const Cubic& f, const QrTable& qr);
long long char_sum(const Cubic& f);

// Serial reference: same value, no table, no OpenMP.
long long char_sum_serial(const Cubic& f);

// g(y) = f(y - shift) with the y^2 term eliminated; char sums are invariant
// under the shift.  Requires 3*a3 invertible, so p > 3 (and a3 != 0).
std::pair<Cubic, u64> depress(const Cubic& f);

// Checks sum ((x^3 + a^2 m x + a^3 n)/p) == (a/p) * sum ((x^3 + m x + n)/p)
// by computing both sides; f must be depressed and monic.
bool scale_check(const Cubic& f, u64 a);
bool scale_check(const Cubic& f, u64 a, const QrTable& qr);

// #E_p(f) = 1 + #{(x,y) : y^2 = f(x)} by independent enumeration of the
// y-values; equals p + 1 + char_sum(f).
u64 count_points(const Cubic& f);

// A CM curve y^2 = x^3 + c2 x^2 + (q1 + r1 sqrt(rad)) x + (q0 + r0 sqrt(rad))
// whose trace is read off p = x^2 + form_d y^2.
struct CmCurve {
    const char* id;        // registry claim that uses it
    i64 radicand;          // surd under the coefficients
    PRational c2, q1, r1, q0, r0;
    i64 form_d;            // p = x^2 + form_d y^2 in the split case
    bool sign_known;       // paper states the sign of the trace
};

const std::vector<CmCurve>& cm_curves();
const CmCurve* find_cm_curve(const char* id);

// Curve coefficients over F_p for a chosen base-field root of the radicand.
Cubic cm_instantiate(const CmCurve& c, u64 p, u64 root);

// Expected character sum of the instantiated curve: 0 in the inert case,
// else +-2x from the quadratic form (value is |2x| unless sign_known).
struct CmExpectation {
    long long value;
    bool signed_known;
};
std::optional<CmExpectation> cm_trace_expected(const CmCurve& c, u64 p, u64 root);

}  // namespace supercong
