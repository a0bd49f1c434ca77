#include "supercong/identities.hpp"

#include <gmpxx.h>

#include <vector>

namespace supercong {

namespace {

mpz_class binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class pow_i(long base, unsigned e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), e);
    if (base < 0 && e % 2 == 1) r = -r;
    return r;
}

// Left/right summands of the two identities.
mpz_class f31_left(long n, long m, long k) {
    return binom(2 * k, k) * binom(2 * k, k) * binom(n + k, 2 * k) * binom(k, m - k);
}
mpz_class f31_right(long n, long m, long k) {
    return binom(2 * k, k) * binom(n + k, 2 * k) * binom(2 * (m - k), m - k) *
           binom(n + m - k, 2 * (m - k));
}
mpz_class f41_left(long, long m, long k) {
    if (k < 0 || m - k < 0 || m - k > k) return 0;
    return binom(2 * k, k) * binom(2 * k, k) * binom(4 * k, 2 * k) * binom(k, m - k) *
           pow_i(-64, unsigned(m - k));
}
mpz_class f41_right(long, long m, long k) {
    return binom(2 * k, k) * binom(4 * k, 2 * k) * binom(2 * (m - k), m - k) *
           binom(4 * (m - k), 2 * (m - k));
}

mpz_class sum31_left(long n, long m) {
    mpz_class s = 0;
    for (long k = 0; k <= m; ++k) s += f31_left(n, m, k);
    return s;
}
mpz_class sum31_right(long n, long m) {
    mpz_class s = 0;
    for (long k = 0; k <= m; ++k) s += f31_right(n, m, k);
    return s;
}
mpz_class sum41(long m) {
    mpz_class s = 0;
    for (long k = 0; k <= m; ++k) s += f41_right(0, m, k);
    return s;
}

// Recurrence coefficients (a0, a1, a2) at m.
void coeffs31(long n, long m, mpz_class& a0, mpz_class& a1, mpz_class& a2) {
    a0 = mpz_class(m + 1) * (m + 2 * n + 2) * (m - 2 * n);
    a1 = mpz_class(2 * m + 3) * (mpz_class(m) * m - 2 * mpz_class(n) * n + 3 * m - 2 * n + 2);
    a2 = mpz_class(m + 2) * (m + 2) * (m + 2);
}
void coeffs41(long m, mpz_class& a0, mpz_class& a1, mpz_class& a2) {
    a0 = mpz_class(1024) * (m + 1) * (2 * m + 1) * (2 * m + 3);
    a1 = mpz_class(-8) * (2 * m + 3) * (8 * mpz_class(m) * m + 24 * m + 19);
    a2 = mpz_class(m + 2) * (m + 2) * (m + 2);
}

// Certificates R(m,k) as exact rationals; nullopt at denominator poles.
std::optional<mpq_class> cert31_left(long, long m, long k) {
    mpz_class den = mpz_class(m - k + 1) * (m + 2 - k);
    if (den == 0) return std::nullopt;
    mpq_class r(mpz_class(-1) * k * k * (2 * k - m - 1) * (2 * k - m) * (m + 2), den);
    r.canonicalize();
    return r;
}
std::optional<mpq_class> cert31_right(long n, long m, long k) {
    mpz_class den = mpz_class(m - k + 1) * (m - k + 1) * (m - k + 2) * (m - k + 2);
    if (den == 0) return std::nullopt;
    mpz_class P = mpz_class(3) * m * n * n - 2 * mpz_class(n) * n * k + mpz_class(m) * m +
                  3 * mpz_class(m) * n - mpz_class(m) * k + 6 * mpz_class(n) * n -
                  2 * mpz_class(n) * k + 4 * m + 6 * n - 2 * k + 4;
    mpq_class r(mpz_class(k) * k * (m - n - k) * (m + n - k + 1) * P, den);
    r.canonicalize();
    return r;
}
std::optional<mpq_class> cert41_left(long, long m, long k) {
    mpz_class den = mpz_class(m - k + 1) * (m - k + 2);
    if (den == 0) return std::nullopt;
    mpq_class r(mpz_class(-4096) * k * k * (m + 2) * (m - 2 * k) * (m - 2 * k + 1), den);
    r.canonicalize();
    return r;
}
std::optional<mpq_class> cert41_right(long, long m, long k) {
    mpz_class den = mpz_class(m - k + 1) * (m - k + 1) * (m - k + 2) * (m - k + 2);
    if (den == 0) return std::nullopt;
    mpz_class poly = mpz_class(16) * m * m - 16 * mpz_class(m) * k + 55 * m - 26 * k + 46;
    mpq_class r(mpz_class(16) * k * k * (4 * m - 4 * k + 1) * (4 * m - 4 * k + 3) * poly, den);
    r.canonicalize();
    return r;
}

}  // namespace

bool check_lemma_3_1(unsigned m, unsigned n) {
    return sum31_left(long(n), long(m)) == sum31_right(long(n), long(m));
}

bool check_lemma_4_1(unsigned m) {
    mpz_class lhs = 0;
    for (long k = 0; k <= long(m); ++k) lhs += f41_left(0, long(m), k);
    return lhs == sum41(long(m));
}

bool check_recurrence_3_1(unsigned n, unsigned m_max) {
    for (long m = 0; m + 2 <= long(m_max); ++m) {
        mpz_class a0, a1, a2;
        coeffs31(long(n), m, a0, a1, a2);
        mpz_class v = a0 * sum31_left(long(n), m) + a1 * sum31_left(long(n), m + 1) +
                      a2 * sum31_left(long(n), m + 2);
        if (v != 0) return false;
    }
    return true;
}

bool check_recurrence_4_1(unsigned m_max) {
    for (long m = 0; m + 2 <= long(m_max); ++m) {
        mpz_class a0, a1, a2;
        coeffs41(m, a0, a1, a2);
        mpz_class v = a0 * sum41(m) + a1 * sum41(m + 1) + a2 * sum41(m + 2);
        if (v != 0) return false;
    }
    return true;
}

bool check_lemma_3_2(unsigned n) {
    // P_n as exact rational coefficients in y, by the three-term recurrence.
    using Poly = std::vector<mpq_class>;
    Poly pm{1}, pc{0, 1};
    if (n == 0) pc = pm;
    for (unsigned k = 1; k < n; ++k) {
        Poly nxt(k + 2, mpq_class(0));
        for (unsigned i = 0; i < pc.size(); ++i)
            nxt[i + 1] += mpq_class(2 * k + 1) * pc[i];
        for (unsigned i = 0; i < pm.size(); ++i)
            nxt[i] -= mpq_class(long(k)) * pm[i];
        for (auto& c : nxt) c /= mpq_class(long(k) + 1);
        pm = pc;
        pc = nxt;
    }
    // Square, then substitute y^2 = 1 + 4x (only even powers survive by parity).
    Poly sq(2 * pc.size() - 1, mpq_class(0));
    for (unsigned i = 0; i < pc.size(); ++i)
        for (unsigned j = 0; j < pc.size(); ++j) sq[i + j] += pc[i] * pc[j];
    Poly in_x(n + 1, mpq_class(0));
    for (unsigned e = 0; e < sq.size(); ++e) {
        if (sq[e] == 0) continue;
        if (e % 2 != 0) return false;
        unsigned j = e / 2;  // (1+4x)^j
        for (unsigned i = 0; i <= j; ++i)
            in_x[i] += sq[e] * mpq_class(binom(long(j), long(i)) * pow_i(4, i));
    }
    for (unsigned k = 0; k <= n; ++k) {
        mpq_class sk(binom(long(n), long(k)) * binom(long(n + k), long(k)) *
                     binom(2 * long(k), long(k)));
        if (in_x[k] != sk) return false;
    }
    return true;
}

CertReport check_certificate(Certificate which, unsigned m_max, unsigned k_max, unsigned n) {
    mpz_class (*F)(long, long, long) = nullptr;
    std::optional<mpq_class> (*R)(long, long, long) = nullptr;
    bool is31 = false;
    switch (which) {
        case Certificate::lemma31_left:  F = f31_left;  R = cert31_left;  is31 = true; break;
        case Certificate::lemma31_right: F = f31_right; R = cert31_right; is31 = true; break;
        case Certificate::lemma41_left:  F = f41_left;  R = cert41_left;  break;
        case Certificate::lemma41_right: F = f41_right; R = cert41_right; break;
    }
    CertReport rep;
    const long ln = long(n);
    for (long m = 0; m <= long(m_max); ++m) {
        mpz_class a0, a1, a2;
        if (is31) coeffs31(ln, m, a0, a1, a2);
        else coeffs41(m, a0, a1, a2);
        for (long k = 0; k <= long(k_max); ++k) {
            auto rk = R(ln, m, k);
            auto rk1 = R(ln, m, k + 1);
            if (!rk || !rk1) {
                ++rep.skipped_poles;
                continue;
            }
            mpq_class lhs = mpq_class(a0 * F(ln, m, k) + a1 * F(ln, m + 1, k) +
                                      a2 * F(ln, m + 2, k));
            mpq_class rhs = *rk1 * mpq_class(F(ln, m, k + 1)) - *rk * mpq_class(F(ln, m, k));
            ++rep.checked;
            if (lhs != rhs) {
                rep.ok = false;
                if (!rep.first_failure)
                    rep.first_failure = std::make_tuple(unsigned(m), unsigned(k), n);
            }
        }
    }
    return rep;
}

}  // namespace supercong
