#pragma once

// Exact big-integer verification of the combinatorial identities, their
// three-term recurrences, and the telescoping (WZ) certificates.  All
// equality checks here are exact over arbitrary-precision integers or
// rationals, never modular.

#include <optional>
#include <tuple>

#include "supercong/arith.hpp"

namespace supercong {

// sum_k C(2k,k)^2 C(n+k,2k) C(k,m-k)
//   == sum_k C(2k,k) C(n+k,2k) C(2m-2k,m-k) C(n+m-k,2m-2k)
bool check_lemma_3_1(unsigned m, unsigned n);

// sum_k C(2k,k)^2 C(4k,2k) C(k,m-k) (-64)^(m-k)
//   == sum_k C(2k,k) C(4k,2k) C(2(m-k),m-k) C(4(m-k),2(m-k))
bool check_lemma_4_1(unsigned m);

// (m+1)(m+2n+2)(m-2n) f(m) + (2m+3)(m^2-2n^2+3m-2n+2) f(m+1)
//   + (m+2)^3 f(m+2) == 0 for all m <= m_max.
bool check_recurrence_3_1(unsigned n, unsigned m_max);

// 1024(m+1)(2m+1)(2m+3) S(m) - 8(2m+3)(8m^2+24m+19) S(m+1)
//   + (m+2)^3 S(m+2) == 0 for all m <= m_max.
bool check_recurrence_4_1(unsigned m_max);

// Coefficient-exact S_n(x) == P_n(sqrt(1+4x))^2 over rationals.
bool check_lemma_3_2(unsigned n);

enum class Certificate { lemma31_left, lemma31_right, lemma41_left, lemma41_right };

struct CertReport {
    bool ok = true;
    unsigned checked = 0;
    unsigned skipped_poles = 0;
    // (m, k, n) of the first failing cell, if any.
    std::optional<std::tuple<unsigned, unsigned, unsigned>> first_failure;
};

// Verifies term-wise that G(m,k) = R(m,k) * F(m,k) telescopes the stated
// recurrence: a0(m) F(m,k) + a1(m) F(m+1,k) + a2(m) F(m+2,k)
// == G(m,k+1) - G(m,k).  Cells where R has a vanishing denominator are
// skipped and counted.  `n` is the free parameter of the 3.1 certificates
// and is ignored for 4.1.
CertReport check_certificate(Certificate which, unsigned m_max, unsigned k_max,
                             unsigned n = 0);

}  // namespace supercong
