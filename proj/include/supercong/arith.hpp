#pragma once

// Exact arithmetic foundations: prime fields F_p, quadratic extensions
// F_p(sqrt(delta)), rational p-integers, Legendre/Jacobi symbols and
// modular square roots.  Everything here is a value type; all operations
// are pure and safe to call from any number of threads.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace supercong {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

struct invalid_modulus_error : std::domain_error {
    using std::domain_error::domain_error;
};
struct not_invertible_error : std::domain_error {
    using std::domain_error::domain_error;
};
struct index_too_large_error : std::domain_error {
    using std::domain_error::domain_error;
};
struct inapplicable_error : std::domain_error {
    using std::domain_error::domain_error;
};
struct normalization_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline u64 add_mod(u64 a, u64 b, u64 m) {
    a += b;
    return a >= m || a < b ? a - m : a;
}
inline u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }
inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m);
u64 pow_mod(u64 base, u128 exp, u64 m);

// Residue of a signed integer in [0, m).
inline u64 to_residue(i64 a, u64 m) {
    i64 r = a % i64(m);
    return r < 0 ? u64(r + i64(m)) : u64(r);
}

u64 gcd(u64 a, u64 b);

// Modular inverse by extended Euclid; throws not_invertible_error when
// gcd(a, m) > 1.
u64 inv_mod(i64 a, u64 m);

// inv[i] for 1 <= i <= n, modulo `modulus` which is p or p^2 (the mod-p
// table comes from the usual linear recurrence, the mod-p^2 one from one
// Newton lift).  Requires n < p.
std::vector<u64> inverse_table(u64 n, u64 modulus, u64 p);

// Jacobi symbol (a/n) for odd n >= 3; equals the Legendre symbol when n is
// prime.  Computed by the reciprocity chain, not by exponentiation.
int jacobi(i64 a, u64 n);

// Legendre symbol (a/p) for an odd prime p: 0 if p | a, else +-1 per
// quadratic residuosity.  Throws invalid_modulus_error for even or tiny p.
int legendre_symbol(i64 a, u64 p);

// A rational a/b with positive denominator and gcd(|a|, b) = 1.  Usable as
// a p-integer whenever gcd(b, p) = 1; lift() performs the embedding.
struct PRational {
    i64 num = 0;
    i64 den = 1;

    PRational() = default;
    PRational(i64 n, i64 d = 1);

    PRational operator+(const PRational& o) const;
    PRational operator-(const PRational& o) const;
    PRational operator*(const PRational& o) const;
    PRational operator/(const PRational& o) const;
    PRational operator-() const { return {-num, den}; }
    bool operator==(const PRational& o) const = default;

    bool is_zero() const { return num == 0; }
    PRational inverse() const;

    // num * den^-1 mod m; throws not_invertible_error when gcd(den, m) > 1.
    u64 lift(u64 m) const;
};

// Field descriptor: F_p, or F_p(sqrt(delta)) when ext holds a quadratic
// non-residue delta.
struct FieldDesc {
    u64 p = 0;
    std::optional<u64> ext;

    static FieldDesc base(u64 p);
    static FieldDesc quadratic(u64 p);            // delta = least non-residue
    static FieldDesc quadratic(u64 p, u64 delta);
    bool operator==(const FieldDesc& o) const = default;
};

// Least positive quadratic non-residue mod p.
u64 least_nonresidue(u64 p);

// a + b*sqrt(delta) with 0 <= a, b < p; b = 0 in a base-field descriptor.
class FieldElem {
public:
    FieldElem(u64 a, FieldDesc d);
    FieldElem(u64 a, u64 b, FieldDesc d);
    static FieldElem from_int(i64 v, const FieldDesc& d);

    u64 a() const { return a_; }
    u64 b() const { return b_; }
    const FieldDesc& desc() const { return desc_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool in_base() const { return b_ == 0; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const;
    bool operator==(const FieldElem& o) const;

    FieldElem inverse() const;
    FieldElem pow(u128 e) const;
    FieldElem frobenius() const;           // a - b*sqrt(delta)

    // Same value viewed in a wider (or equal) descriptor over the same p.
    FieldElem in(const FieldDesc& d) const;

    // "a" for base values, "a+b√δ" with the numeric delta otherwise.
    std::string str() const;

private:
    u64 a_, b_;
    FieldDesc desc_;
};

FieldElem lift(const PRational& r, const FieldDesc& d);

// Square root of the residue a.  Quadratic residues (and 0) yield the
// canonical base-field root r with r <= p - r; non-residues yield
// sqrt(delta)*s in F_p(sqrt(delta)) with delta the least non-residue and
// s canonical.  Total on 0 <= a < p.
FieldElem sqrt_in_field(u64 a, u64 p);

}  // namespace supercong
