#pragma once

// Representations p = x^2 + d y^2 (Cornacchia), the sign/congruence
// normalizations the registry applies to them, and the predicted values of
// 3^[p/4] and 7^[p/4] mod p.

#include <optional>
#include <string>
#include <vector>

#include "supercong/arith.hpp"

namespace supercong {

struct QuadRep {
    i64 x = 0;
    i64 y = 0;
    i64 d = 1;
    std::vector<std::string> normalized_by;
};

// Some (x, y) >= 0 with p = x^2 + d y^2, smallest |x| first when several
// essentially different representations exist; empty when none does.
// Cornacchia seeded with sqrt(-d) mod p, validated by re-multiplication.
std::optional<QuadRep> represent(u64 p, i64 d);

// Exhaustive search over y <= sqrt(n/d); the test oracle, also usable for
// scaled targets like 2p = x^2 + d y^2.
std::optional<QuadRep> represent_exhaustive(u64 n, i64 d);

enum class NormCond {
    x_mod4_eq_1,  // flip the sign of x so 4 | x-1 (x must be odd)
    x_mod3_eq_1,  // flip the sign of x so 3 | x-1 (3 must not divide x)
    y_mod4_eq_1,  // flip the sign of y so 4 | y-1 (y must be odd)
    x_odd,        // swap coordinates if needed (d = 1 only)
};

// Applies the condition by sign flips (and a swap for x_odd); throws
// normalization_error when the condition is unsatisfiable, which signals a
// registry encoding bug rather than a math failure.
QuadRep normalize(QuadRep rep, NormCond cond);

// Predicted residue of base^[p/4] mod p for base in {3, 7}, read off the
// normalized representation p = A^2 + 3B^2 resp. p = C^2 + 7D^2.  Throws
// inapplicable_error outside the covered residue classes.
u64 unit_power_predicted(u64 p, int base);

}  // namespace supercong
