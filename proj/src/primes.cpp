#include "supercong/primes.hpp"

namespace supercong {

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
    std::vector<u64> out;
    if (hi < 2 || hi < lo) return out;
    std::vector<bool> composite(hi + 1, false);
    for (u64 i = 2; i * i <= hi; ++i)
        if (!composite[i])
            for (u64 j = i * i; j <= hi; j += i) composite[j] = true;
    for (u64 i = std::max<u64>(lo, 2); i <= hi; ++i)
        if (!composite[i]) out.push_back(i);
    return out;
}

}  // namespace supercong
