#pragma once

#include <sierp/integer.hpp>
#include <sierp/lucas.hpp>
#include <sierp/modarith.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace sierp {

struct PreconditionError : Error {
    using Error::Error;
};

namespace detail {

// p when m is a prime power p^k, otherwise 1. This is phi_m(1) for m >= 2.
inline Int cyclotomic_at_one(std::uint64_t m) {
    Factorization f = factor(from_u64(m));
    if (f.factors.size() == 1) return f.factors.begin()->first;
    return 1;
}

}  // namespace detail

// Exact value of the n-th cyclotomic polynomial at an integer point, by the
// Moebius product over squarefree divisors: prod (x^(n/d) - 1)^mu(d).
inline Int cyclotomic_eval(std::uint64_t n, const Int& x) {
    if (n == 0) throw std::invalid_argument("cyclotomic_eval: index must be >= 1");
    if (n == 1) return x - 1;
    if (x == 1) return detail::cyclotomic_at_one(n);
    if (x == -1) {
        if (n == 2) return 0;
        if (n % 2 == 1) return 1;
        return detail::cyclotomic_at_one(n / 2);
    }
    Factorization f = factor(from_u64(n));
    std::vector<std::uint64_t> primes;
    for (const auto& [p, e] : f.factors) primes.push_back(to_u64(p));
    Int num = 1, den = 1;
    for (std::uint32_t mask = 0; mask < (1u << primes.size()); ++mask) {
        std::uint64_t d = 1;
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (mask >> i & 1) d *= primes[i];
        Int term;
        mpz_pow_ui(term.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(n / d));
        term -= 1;
        if (__builtin_popcount(mask) % 2 == 0)
            num *= term;
        else
            den *= term;
    }
    Int out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

enum class DivisorStatus {
    primitive,              // q | U_n, q does not divide D, and q divides no U_m for 0 < m < n
    not_a_divisor,          // q does not divide U_n
    divides_discriminant,   // q | D
    lower_rank,             // q | U_m for some 0 < m < n
};

inline const char* to_string(DivisorStatus s) {
    switch (s) {
        case DivisorStatus::primitive: return "primitive";
        case DivisorStatus::not_a_divisor: return "not a divisor";
        case DivisorStatus::divides_discriminant: return "divides discriminant";
        case DivisorStatus::lower_rank: return "lower rank";
    }
    return "?";
}

inline DivisorStatus classify_divisor(const LucasParams& lp, const Int& q, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("classify_divisor: index must be >= 1");
    if (is_prime(q) == Primality::composite) throw NotPrimeError(q);
    if (u_mod(lp, from_u64(n), q) != 0) return DivisorStatus::not_a_divisor;
    if (mod_floor(lp.D, q) == 0) return DivisorStatus::divides_discriminant;
    Int u = 0, v = mod_floor(1, q);
    for (std::uint64_t t = 1; t < n; ++t) {
        Int w = mod_floor(lp.P * v - lp.Q * u, q);
        u = v;
        v = w;
        if (u == 0) return DivisorStatus::lower_rank;
    }
    return DivisorStatus::primitive;
}

inline bool is_primitive_divisor(const LucasParams& lp, const Int& q, std::uint64_t n) {
    return classify_divisor(lp, q, n) == DivisorStatus::primitive;
}

// The classical list of U_n without a primitive divisor in the rational case
// beta = 1, alpha >= 2 (so P = alpha + 1, Q = alpha): n = 1 always; n = 2
// exactly when alpha + 1 is a power of two; n = 6 exactly when alpha = 2.
inline bool zsigmondy_exception(const LucasParams& lp, std::uint64_t n) {
    if (lp.Q != lp.P - 1 || lp.Q < 2)
        throw PreconditionError("zsigmondy_exception: requires beta = 1 and alpha >= 2");
    if (n == 0) throw std::invalid_argument("zsigmondy_exception: index must be >= 1");
    if (n == 1) return true;
    if (n == 2) return is_power_of_two(lp.P);
    if (n == 6) return lp.Q == 2;
    return false;
}

struct PrimitiveDivisors {
    Int u;                        // U_n, exact
    Factorization factorization;  // of |U_n|
    std::vector<Int> primitive;   // primitive prime divisors of U_n, ascending
    bool complete;                // false if a composite cofactor was left unclassified
};

// Factors U_n and classifies every prime factor found.
inline PrimitiveDivisors primitive_divisors(const LucasParams& lp, std::uint64_t n,
                                            const FactorBudget& budget = {}) {
    if (n == 0) throw std::invalid_argument("primitive_divisors: index must be >= 1");
    PrimitiveDivisors out;
    out.u = u_exact(lp, n);
    out.factorization = factor(abs(out.u), budget);
    out.complete = out.factorization.complete();
    for (const auto& [q, e] : out.factorization.factors)
        if (classify_divisor(lp, q, n) == DivisorStatus::primitive) out.primitive.push_back(q);
    return out;
}

// Least prime other than 5 dividing alpha^2 + 1. Such a prime is always a
// primitive divisor of U_4(alpha, 1) = (alpha + 1)(alpha^2 + 1), and it
// exists for every alpha >= 2 except 2, 3, 7, the solutions of
// alpha^2 + 1 = 5^j (Lebesgue) and alpha^2 + 1 = 2 * 5^j (Le).
inline Int second_primitive_divisor_u4(const Int& alpha, const FactorBudget& budget = {}) {
    if (alpha < 2) throw PreconditionError("second_primitive_divisor_u4: requires alpha >= 2");
    if (alpha == 2 || alpha == 3 || alpha == 7)
        throw PreconditionError("second_primitive_divisor_u4: alpha^2 + 1 has no prime factor outside {2, 5}");
    Int target = alpha * alpha + 1;
    for (std::uint32_t p : detail::primes_below(budget.trial_bound)) {
        if (p == 2 || p == 5) continue;
        if (mpz_divisible_ui_p(target.get_mpz_t(), p)) return p;
    }
    Int stripped = target;
    while (mpz_even_p(stripped.get_mpz_t())) stripped /= 2;
    while (mpz_divisible_ui_p(stripped.get_mpz_t(), 5)) stripped /= 5;
    Factorization f = factor(stripped, budget);
    if (f.factors.empty()) {
        if (!f.complete()) throw FactorizationIncompleteError(f.cofactor);
        throw PreconditionError("second_primitive_divisor_u4: no factor found");
    }
    return f.factors.begin()->first;
}

}  // namespace sierp
