#pragma once

// The theorem registry: every congruence the library asserts, encoded as an
// executable claim and evaluated per prime.  Proved claims failing anywhere
// is by definition an implementation bug; conjectural claims are verified
// empirically and reported under their own status.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "supercong/arith.hpp"

namespace supercong {

enum class Verdict { pass, fail, inapplicable };
enum class ClaimStatus { proved, conjectural };
enum class ClaimKind { congruence, property };

const char* verdict_name(Verdict v);
const char* status_name(ClaimStatus s);

struct ClaimReport {
    std::string claim;
    u64 p = 0;
    std::string case_label;
    std::string lhs;
    std::string rhs;
    std::string modulus;
    Verdict verdict = Verdict::inapplicable;
    long long micros = 0;
};

struct EvalOptions {
    int samples = 100;   // draws per property claim on large primes
    u64 seed = 0;        // fixes all pseudo-random draws
    bool flip_roots = false;  // take the other square root everywhere
};

struct Claim {
    std::string id;
    ClaimStatus status;
    ClaimKind kind;
    std::vector<u64> excluded_primes;
    std::string location;                  // e.g. "§3"
    std::vector<std::string> case_labels;  // every label the claim can emit
    bool hidden = false;                   // not part of "all" (test fixtures)
    std::function<ClaimReport(u64 p, const EvalOptions&)> eval;
};

const std::vector<Claim>& claim_registry();
const Claim* find_claim(std::string_view id);

// Evaluates one claim at one prime (inapplicable for excluded primes).
ClaimReport verify(std::string_view id, u64 p, const EvalOptions& opt = {});

// Deterministic (claim, prime) sweep: work is distributed across OpenMP
// workers, results always come back in registry-then-prime order.
std::vector<ClaimReport> sweep(const std::vector<std::string>& ids,
                               const std::vector<u64>& primes, int threads = 0,
                               const EvalOptions& opt = {});

struct SweepSummary {
    struct PerClaim {
        std::string id;
        ClaimStatus status;
        int pass = 0, fail = 0, inapplicable = 0;
    };
    std::vector<PerClaim> per_claim;
    int proved_failures = 0;
    int conjectural_failures = 0;
};
SweepSummary summarize(const std::vector<ClaimReport>& reports);

}  // namespace supercong
