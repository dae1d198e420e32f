#pragma once

#include <sierp/integer.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

namespace sierp {

struct NotInvertibleError : Error {
    NotInvertibleError(const Int& a, const Int& m)
        : Error("not invertible: " + to_string(a) + " mod " + to_string(m)) {}
};

struct CrtNotCoprimeError : Error {
    std::size_t first, second;
    CrtNotCoprimeError(std::size_t i, std::size_t j)
        : Error("crt moduli at positions " + std::to_string(i) + " and " +
                std::to_string(j) + " are not coprime"),
          first(i),
          second(j) {}
};

struct NotPrimeError : Error {
    explicit NotPrimeError(const Int& p) : Error("not an odd prime: " + to_string(p)) {}
};

struct NonResidueError : Error {
    NonResidueError(const Int& a, const Int& p)
        : Error(to_string(a) + " is not a quadratic residue mod " + to_string(p)) {}
};

struct FactorizationIncompleteError : Error {
    Int cofactor;
    explicit FactorizationIncompleteError(const Int& c)
        : Error("factorization incomplete, composite cofactor of " +
                std::to_string(digits10(c)) + " digits remains"),
          cofactor(c) {}
};

// Returns (g, x, y) with a*x + b*y = g = gcd(a, b), g >= 0.
inline std::tuple<Int, Int, Int> egcd(const Int& a, const Int& b) {
    Int g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return {g, x, y};
}

// Inverse of a mod m, in [0, m). Requires m >= 1.
inline Int mod_inverse(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw NotInvertibleError(a, m);
    return r;
}

inline Int pow_mod(const Int& base, const Int& exp, const Int& mod) {
    if (exp < 0) throw std::invalid_argument("pow_mod: negative exponent");
    if (mod <= 0) throw std::invalid_argument("pow_mod: modulus must be positive");
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

// One residue condition x = residue (mod modulus). The residue is stored reduced.
struct ResidueCondition {
    Int residue;
    Int modulus;
    ResidueCondition(Int r, Int m) : modulus(std::move(m)) {
        if (modulus < 1) throw std::invalid_argument("residue condition: modulus must be >= 1");
        residue = mod_floor(r, modulus);
    }
};

// Simultaneous solution of pairwise-coprime residue conditions, computed by
// merging conditions one pair at a time. Returns (x, M) with x the least
// non-negative solution and M the product of the moduli.
inline std::pair<Int, Int> crt(const std::vector<ResidueCondition>& conds) {
    if (conds.empty()) throw std::invalid_argument("crt: no conditions");
    for (std::size_t i = 0; i < conds.size(); ++i)
        for (std::size_t j = i + 1; j < conds.size(); ++j) {
            Int g;
            mpz_gcd(g.get_mpz_t(), conds[i].modulus.get_mpz_t(), conds[j].modulus.get_mpz_t());
            if (g != 1) throw CrtNotCoprimeError(i, j);
        }
    Int x = conds[0].residue;
    Int m = conds[0].modulus;
    for (std::size_t i = 1; i < conds.size(); ++i) {
        const Int& r2 = conds[i].residue;
        const Int& m2 = conds[i].modulus;
        // x + m*t = r2 (mod m2)  =>  t = (r2 - x) / m (mod m2)
        Int t = mod_floor((r2 - x) * mod_inverse(m, m2), m2);
        x += m * t;
        m *= m2;
    }
    return {x, m};
}

enum class Primality { composite, prime, probably_prime };

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

inline bool mr_witness_u64(std::uint64_t n, std::uint64_t a) {
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    std::uint64_t x = powmod_u64(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return false;
    }
    return true;  // a witnesses compositeness
}

// Deterministic for all 64-bit inputs with the first twelve prime bases.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (mr_witness_u64(n, a)) return false;
    return true;
}

inline bool mr_witness(const Int& n, const Int& a) {
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;
    Int x = pow_mod(a, d, n);
    Int nm1 = n - 1;
    if (x == 1 || x == nm1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == nm1) return false;
    }
    return true;
}

// Primes below the bound, by sieve. Cached; bound requests only grow the
// table. A regrow invalidates earlier spans, so consume before sieving again.
inline std::span<const std::uint32_t> primes_below(std::uint32_t bound) {
    static std::vector<std::uint32_t> primes;
    static std::uint32_t sieved = 0;
    if (bound > sieved) {
        primes.clear();
        std::vector<bool> composite(bound, false);
        for (std::uint32_t i = 2; i < bound; ++i) {
            if (composite[i]) continue;
            primes.push_back(i);
            for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j < bound; j += i)
                composite[j] = true;
        }
        sieved = bound;
    }
    auto cut = std::lower_bound(primes.begin(), primes.end(), bound);
    return {primes.data(), static_cast<std::size_t>(cut - primes.begin())};
}

}  // namespace detail

// The thirteen bases {2..41} decide primality below this bound (Sorenson-Webster).
inline const Int& mr_deterministic_bound() {
    static const Int bound("3317044064679887385961981");
    return bound;
}

// Deterministic below mr_deterministic_bound(); 64 fixed prime bases above it,
// so `probably_prime` carries error probability below 2^-128.
inline Primality is_prime(const Int& n) {
    if (n < 2) return Primality::composite;
    if (fits_u64(n))
        return detail::is_prime_u64(to_u64(n)) ? Primality::prime : Primality::composite;
    const auto& small = detail::primes_below(100);
    for (std::uint32_t p : small) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return Primality::composite;
    }
    bool below = n < mr_deterministic_bound();
    std::size_t rounds = below ? 13 : 64;
    const auto& bases = detail::primes_below(below ? 43 : 312);  // first 13 / 64 primes
    for (std::size_t i = 0; i < rounds; ++i)
        if (detail::mr_witness(n, Int(bases[i]))) return Primality::composite;
    return below ? Primality::prime : Primality::probably_prime;
}

struct FactorBudget {
    std::uint32_t trial_bound = 1'000'000;    // trial division by primes below this
    std::uint64_t rho_iterations = 4'000'000; // f-evaluations per (cofactor, polynomial)
    int rho_polynomials = 12;                 // x^2 + c for c = 1..rho_polynomials
};

struct Factorization {
    std::map<Int, unsigned> factors;  // prime -> multiplicity, ascending
    Int cofactor = 1;                 // 1, or a composite the budget could not split
    bool complete() const { return cofactor == 1; }
};

namespace detail {

// Brent's cycle variant of Pollard rho with fixed seed y0=2 and polynomial
// x^2 + c, so results are reproducible. Returns a nontrivial divisor or 0.
inline Int pollard_brent(const Int& n, unsigned c, std::uint64_t max_iters) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    Int y = 2, q = 1, g = 1, x, ys;
    std::uint64_t r = 1, spent = 0;
    const std::uint64_t batch = 128;
    while (g == 1 && spent < max_iters) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
        std::uint64_t k = 0;
        while (k < r && g == 1 && spent < max_iters) {
            ys = y;
            std::uint64_t steps = std::min(batch, r - k);
            for (std::uint64_t i = 0; i < steps; ++i) {
                y = (y * y + c) % n;
                q = q * abs(x - y) % n;
            }
            spent += steps;
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += steps;
        }
        r *= 2;
    }
    if (g == n) {  // batch gcd collapsed; redo the last stretch one step at a time
        do {
            ys = (ys * ys + c) % n;
            Int d = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    if (g == 1 || g == n) return 0;
    return g;
}

}  // namespace detail

// Deterministic factorization: trial division below budget.trial_bound, then
// Brent-Pollard rho with the fixed polynomial schedule. A part no polynomial
// splits within the iteration budget is returned as the composite cofactor.
inline Factorization factor(const Int& n, const FactorBudget& budget = {}) {
    if (n < 1) throw std::invalid_argument("factor: argument must be positive");
    Factorization out;
    Int rem = n;
    const auto& primes = detail::primes_below(budget.trial_bound);
    std::size_t idx = 0;
    while (!fits_u64(rem) && idx < primes.size()) {
        std::uint32_t p = primes[idx];
        if (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
            ++out.factors[p];
            mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
        } else {
            ++idx;
        }
    }
    if (fits_u64(rem)) {
        std::uint64_t r = to_u64(rem);
        for (; idx < primes.size(); ++idx) {
            std::uint64_t p = primes[idx];
            if (p * p > r) break;
            while (r % p == 0) {
                ++out.factors[p];
                r /= p;
            }
        }
        rem = from_u64(r);
    }
    std::vector<Int> pending;
    if (rem > 1) pending.push_back(rem);
    while (!pending.empty()) {
        Int part = pending.back();
        pending.pop_back();
        if (is_prime(part) != Primality::composite) {
            ++out.factors[part];
            continue;
        }
        Int d = 0;
        for (int c = 1; c <= budget.rho_polynomials && d == 0; ++c)
            d = detail::pollard_brent(part, static_cast<unsigned>(c), budget.rho_iterations);
        if (d == 0) {
            out.cofactor *= part;
            continue;
        }
        pending.push_back(d);
        pending.push_back(part / d);
    }
    return out;
}

// Legendre symbol (a/p) for odd prime p.
inline int legendre_symbol(const Int& a, const Int& p) {
    if (p == 2 || is_prime(p) == Primality::composite) throw NotPrimeError(p);
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

// Tonelli-Shanks. Returns the smaller of the two square roots of a mod p.
inline Int sqrt_mod_prime(const Int& a, const Int& p) {
    if (p == 2 || is_prime(p) == Primality::composite) throw NotPrimeError(p);
    Int am = mod_floor(a, p);
    if (am == 0) return 0;
    if (mpz_legendre(am.get_mpz_t(), p.get_mpz_t()) != 1) throw NonResidueError(a, p);
    Int s;
    if (mod_floor(p, 4) == 3) {
        s = pow_mod(am, (p + 1) / 4, p);
    } else {
        Int q = p - 1;
        unsigned long e = mpz_scan1(q.get_mpz_t(), 0);
        q >>= e;
        Int z = 2;
        while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
        Int m = e, c = pow_mod(z, q, p), t = pow_mod(am, q, p), r = pow_mod(am, (q + 1) / 2, p);
        while (t != 1) {
            Int i = 0, t2 = t;
            while (t2 != 1) {
                t2 = t2 * t2 % p;
                ++i;
            }
            Int b = pow_mod(c, pow_mod(2, m - i - 1, p - 1), p);
            m = i;
            c = b * b % p;
            t = t * c % p;
            r = r * b % p;
        }
        s = r;
    }
    Int other = p - s;
    return s <= other ? s : other;
}

// Order of a in (Z/qZ)* for prime q: factor q-1, then strip prime powers.
inline Int mult_order(const Int& a, const Int& q, const FactorBudget& budget = {}) {
    if (is_prime(q) == Primality::composite) throw NotPrimeError(q);
    Int am = mod_floor(a, q);
    if (am == 0) throw NotInvertibleError(a, q);
    Factorization f = factor(q - 1, budget);
    if (!f.complete()) throw FactorizationIncompleteError(f.cofactor);
    Int order = q - 1;
    for (const auto& [p, e] : f.factors)
        for (unsigned i = 0; i < e; ++i) {
            Int cand = order / p;
            if (pow_mod(am, cand, q) == 1)
                order = cand;
            else
                break;
        }
    return order;
}

}  // namespace sierp
