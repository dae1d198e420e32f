#pragma once

#include <sierp/certificate.hpp>
#include <sierp/covering.hpp>
#include <sierp/lucas.hpp>
#include <sierp/modarith.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sierp {

// Exact value of the n-th term, k^e * (U_n + D) + 1. May be negative for
// nonreal pairs. Exact evaluation; use verify_certificate for long ranges.
inline Int term(const SierpinskiCertificate& cert, std::uint64_t n) {
    Int ke;
    mpz_pow_ui(ke.get_mpz_t(), cert.k.get_mpz_t(), static_cast<unsigned long>(cert.exponent));
    return ke * (u_exact(cert.params(), n) + cert.D) + 1;
}

struct VerificationFailure {
    std::int64_t n;
    std::string reason;
};

struct VerificationReport {
    std::int64_t n_max = 0;
    std::int64_t checked = 0;
    std::vector<VerificationFailure> failures;
    std::map<std::size_t, std::int64_t> witness_histogram;  // class index -> count
    bool passed() const { return failures.empty(); }
};

// Checks, for every n in [1, n_max], that the witness prime of n's first
// covering class divides term(n), working mod p_i throughout, and that
// |term(n)| > p_i so divisibility implies compositeness. The size check uses
// bounds: when k^e >= p_i + 2 and U_n + D != 0, |term| >= k^e - 1 > p_i;
// U_n + D != 0 is settled modulo auxiliary primes, with exact evaluation as
// the fallback for the rare undecided n.
inline VerificationReport verify_certificate(const SierpinskiCertificate& cert,
                                             std::int64_t n_max) {
    VerificationReport report;
    report.n_max = n_max;
    LucasParams lp = cert.params();
    const auto& classes = cert.covering.classes;

    Int ke;
    mpz_pow_ui(ke.get_mpz_t(), cert.k.get_mpz_t(), static_cast<unsigned long>(cert.exponent));
    Int max_p = 0;
    std::vector<Int> ke_mod(classes.size()), d_mod(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const Int& p = *classes[i].prime;
        ke_mod[i] = mod_floor(ke, p);
        d_mod[i] = mod_floor(cert.D, p);
        max_p = std::max(max_p, p);
    }
    bool size_by_bound = ke >= max_p + 2;
    std::vector<Int> aux;
    if (size_by_bound) {
        Int q = max_p;
        while (aux.size() < 3) {
            mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
            if (mod_floor(lp.Q, q) != 0) aux.push_back(q);
        }
    }

    for (std::int64_t n = 1; n <= n_max; ++n) {
        std::size_t idx;
        try {
            idx = class_for(cert.covering, n);
        } catch (const NotCoveredError&) {
            report.failures.push_back({n, "not covered by any class"});
            continue;
        }
        ++report.witness_histogram[idx];
        const Int& p = *classes[idx].prime;
        Int t = mod_floor(ke_mod[idx] * mod_floor(u_mod(lp, n, p) + d_mod[idx], p) + 1, p);
        if (t != 0) {
            report.failures.push_back({n, "term not divisible by " + to_string(p)});
            continue;
        }
        bool big = false;
        if (size_by_bound)
            for (const Int& q : aux)
                if (mod_floor(u_mod(lp, n, q) + cert.D, q) != 0) {
                    big = true;  // U_n + D != 0, so |term| >= k^e - 1 > p
                    break;
                }
        if (!big && abs(term(cert, static_cast<std::uint64_t>(n))) <= p) {
            report.failures.push_back({n, "term not larger than its witness prime"});
            continue;
        }
    }
    report.checked = n_max;
    return report;
}

struct FactorRow {
    std::int64_t n;
    Int term;
    int sign;  // +1 or -1
    std::vector<std::pair<Int, unsigned>> known_factors;
    Int bold_prime;  // the witness prime of n's covering class
    Int cofactor;    // unfactored remainder; may be prime or composite
};

// The partial factorizations shown in the source tables: each term is
// trial-divided by the certificate primes and by all primes below
// small_bound; the witness prime is marked. rows should stay small, the
// terms grow at a doubly exponential clip.
inline std::vector<FactorRow> factor_rows(const SierpinskiCertificate& cert, std::int64_t rows,
                                          std::uint32_t small_bound = 1'000'000) {
    std::vector<Int> divisors;
    for (std::uint32_t p : detail::primes_below(small_bound)) divisors.push_back(p);
    for (const auto& cls : cert.covering.classes) divisors.push_back(*cls.prime);
    std::sort(divisors.begin(), divisors.end());
    divisors.erase(std::unique(divisors.begin(), divisors.end()), divisors.end());

    std::vector<FactorRow> out;
    for (std::int64_t n = 1; n <= rows; ++n) {
        FactorRow row;
        row.n = n;
        row.term = term(cert, static_cast<std::uint64_t>(n));
        row.sign = row.term < 0 ? -1 : 1;
        row.bold_prime = *cert.covering.classes[class_for(cert.covering, n)].prime;
        Int rem = abs(row.term);
        for (const Int& p : divisors) {
            if (rem == 1) break;
            unsigned e = 0;
            while (mpz_divisible_p(rem.get_mpz_t(), p.get_mpz_t())) {
                mpz_divexact(rem.get_mpz_t(), rem.get_mpz_t(), p.get_mpz_t());
                ++e;
            }
            if (e > 0) row.known_factors.emplace_back(p, e);
        }
        row.cofactor = rem;
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace sierp
