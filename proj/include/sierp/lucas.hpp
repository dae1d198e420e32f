#pragma once

#include <sierp/integer.hpp>
#include <sierp/modarith.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace sierp {

struct ParityViolationError : Error {
    ParityViolationError(const Int& a, const Int& b)
        : Error("a^2 - b not divisible by 4 for a=" + to_string(a) + ", b=" + to_string(b)) {}
};

struct ZeroProductError : Error {
    ZeroProductError() : Error("lucas parameters: alpha*beta must be nonzero") {}
};

struct PairNotCoprimeError : Error {
    PairNotCoprimeError(const Int& p, const Int& q)
        : Error("lucas parameters: gcd(" + to_string(p) + ", " + to_string(q) + ") != 1") {}
};

struct DegenerateError : Error {
    DegenerateError() : Error("lucas parameters: alpha/beta is a root of unity") {}
};

struct BadModulusError : Error {
    explicit BadModulusError(const Int& p)
        : Error("period undefined: " + to_string(p) + " divides Q") {}
};

struct CapExceededError : Error {
    CapExceededError(const Int& p, std::int64_t cap)
        : Error("no period of U mod " + to_string(p) + " within cap " + std::to_string(cap)) {}
};

// Integer data of a Lucas pair: alpha, beta are the roots of x^2 - Px + Q,
// P = alpha + beta, Q = alpha*beta, D = P^2 - 4Q = (alpha - beta)^2.
// U_n = (alpha^n - beta^n) / (alpha - beta).
struct LucasParams {
    Int P, Q, D;

    LucasParams(Int p, Int q) : P(std::move(p)), Q(std::move(q)), D(P * P - 4 * Q) {
        if (Q == 0) throw ZeroProductError();
        Int g;
        mpz_gcd(g.get_mpz_t(), P.get_mpz_t(), Q.get_mpz_t());
        if (g != 1) throw PairNotCoprimeError(P, Q);
        // alpha/beta is a root of unity exactly when P^2 is 0, Q, 2Q, 3Q or 4Q
        Int p2 = P * P;
        if (p2 == 0 || p2 == Q || p2 == 2 * Q || p2 == 3 * Q || p2 == 4 * Q)
            throw DegenerateError();
    }
};

// Parameters for alpha = (a + sqrt(b))/2, beta = (a - sqrt(b))/2:
// P = a, Q = (a^2 - b)/4, D = b. Needs a^2 = b (mod 4).
inline LucasParams params_from_ab(const Int& a, const Int& b) {
    Int num = a * a - b;
    if (mod_floor(num, 4) != 0) throw ParityViolationError(a, b);
    return LucasParams(a, num / 4);
}

inline LucasParams fibonacci_params() { return LucasParams(1, -1); }

// U_n by the plain recurrence; exact integer, so only for moderate n.
inline Int u_exact(const LucasParams& lp, std::uint64_t n) {
    Int u = 0, v = 1;  // U_0, U_1
    for (std::uint64_t i = 0; i < n; ++i) {
        Int w = lp.P * v - lp.Q * u;
        u = v;
        v = w;
    }
    return u;
}

// (U_n, U_{n+1}) mod m by fast doubling over the bits of n.
inline std::pair<Int, Int> u_pair_mod(const LucasParams& lp, const Int& n, const Int& m) {
    if (n < 0) throw std::invalid_argument("u_pair_mod: negative index");
    if (m < 1) throw std::invalid_argument("u_pair_mod: modulus must be >= 1");
    Int P = mod_floor(lp.P, m), Q = mod_floor(lp.Q, m);
    Int u = 0, v = mod_floor(1, m);
    std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        // U_{2k} = U_k (2 U_{k+1} - P U_k),  U_{2k+1} = U_{k+1}^2 - Q U_k^2
        Int t = mod_floor(2 * v - P * u, m);
        Int u2 = u * t % m;
        Int v2 = mod_floor(v * v - Q * u * u, m);
        if (mpz_tstbit(n.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) {
            u = v2;
            v = mod_floor(P * v2 - Q * u2, m);
        } else {
            u = u2;
            v = v2;
        }
    }
    return {mod_floor(u, m), v};
}

inline Int u_mod(const LucasParams& lp, const Int& n, const Int& m) {
    return u_pair_mod(lp, n, m).first;
}

struct PeriodInfo {
    std::int64_t period;  // least t >= 1 with (U_t, U_{t+1}) = (0, 1) mod p
    std::int64_t rank;    // least t >= 1 with U_t = 0 mod p (rank of apparition)
};

inline std::int64_t default_period_cap(const Int& p) {
    return 6 * static_cast<std::int64_t>(mpz_get_ui(p.get_mpz_t()));
}

// Stepwise scan of U mod p for the full period of the pair sequence.
// cap = 0 means the default 6p, which is never exceeded for prime p not
// dividing Q (the period divides p-1, p+1, p(p-1) or 2(p+1) by cases on D).
inline PeriodInfo period_mod(const LucasParams& lp, const Int& p, std::int64_t cap = 0) {
    if (is_prime(p) == Primality::composite) throw NotPrimeError(p);
    if (mod_floor(lp.Q, p) == 0) throw BadModulusError(p);
    if (cap <= 0) {
        if (!fits_u64(p) || to_u64(p) > (1ull << 60))
            throw std::invalid_argument("period_mod: explicit cap required for p >= 2^60");
        cap = default_period_cap(p);
    }
    std::int64_t rank = 0;
    if (fits_u64(p) && to_u64(p) < (1u << 31)) {
        std::uint64_t pp = to_u64(p);
        std::uint64_t P = to_u64(mod_floor(lp.P, p)), nQ = pp - to_u64(mod_floor(lp.Q, p));
        std::uint64_t u = 0, v = 1 % pp;
        for (std::int64_t t = 1; t <= cap; ++t) {
            std::uint64_t w = (P * v + nQ % pp * u) % pp;
            u = v;
            v = w;
            if (u == 0 && rank == 0) rank = t;
            if (u == 0 && v == 1 % pp) return {t, rank};
        }
    } else {
        Int P = mod_floor(lp.P, p), Q = mod_floor(lp.Q, p);
        Int u = 0, v = 1;
        for (std::int64_t t = 1; t <= cap; ++t) {
            Int w = mod_floor(P * v - Q * u, p);
            u = v;
            v = w;
            if (u == 0 && rank == 0) rank = t;
            if (u == 0 && v == 1) return {t, rank};
        }
    }
    throw CapExceededError(p, cap);
}

// True when the pair sequence mod p has period exactly m: the pair returns
// to (0,1) at m but at no m/q for prime q | m. Avoids any scan past m.
inline bool is_exact_period(const LucasParams& lp, const Int& p, const Int& m) {
    if (m < 1 || !fits_u64(m)) throw std::invalid_argument("is_exact_period: need 1 <= m < 2^64");
    if (mod_floor(lp.Q, p) == 0) throw BadModulusError(p);
    auto at = [&](const Int& idx) {
        auto [u, v] = u_pair_mod(lp, idx, p);
        return u == 0 && v == mod_floor(1, p);
    };
    if (!at(m)) return false;
    Factorization f = factor(m);
    if (!f.complete()) throw FactorizationIncompleteError(f.cofactor);
    for (const auto& [q, e] : f.factors)
        if (at(m / q)) return false;
    return true;
}

// Periods of U mod p for all primes p < prime_bound with p not dividing Q,
// grouped as period -> ascending primes attaining it.
inline std::map<std::int64_t, std::vector<Int>> period_scan(const LucasParams& lp,
                                                            std::uint32_t prime_bound,
                                                            std::int64_t cap = 0) {
    std::map<std::int64_t, std::vector<Int>> groups;
    // copy: the shared sieve may regrow under period_mod's primality check
    auto span = detail::primes_below(prime_bound);
    std::vector<std::uint32_t> ps(span.begin(), span.end());
    for (std::uint32_t p : ps) {
        Int pi(p);
        if (mod_floor(lp.Q, pi) == 0) continue;
        PeriodInfo info = period_mod(lp, pi, cap);
        groups[info.period].push_back(pi);
    }
    return groups;
}

}  // namespace sierp
