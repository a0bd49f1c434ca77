#pragma once

#include <vector>

#include "supercong/arith.hpp"

namespace supercong {

// Primes in [lo, hi] by sieve of Eratosthenes.
std::vector<u64> primes_in_range(u64 lo, u64 hi);

}  // namespace supercong
