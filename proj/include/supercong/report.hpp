#pragma once

// Report serialization.  CSV columns are fixed:
// claim,p,case,lhs,rhs,modulus,verdict,micros; JSON mirrors them.  The
// micros column is written as 0 unless timing output is requested, so that
// identical (ids, primes, seed) runs produce byte-identical files.

#include <string>
#include <vector>

#include "supercong/claims.hpp"

namespace supercong {

std::string to_csv(const std::vector<ClaimReport>& reports, bool with_timing = false);
std::string to_json(const std::vector<ClaimReport>& reports, bool with_timing = false);
std::string to_table(const std::vector<ClaimReport>& reports);
std::string summary_text(const SweepSummary& s);

}  // namespace supercong
