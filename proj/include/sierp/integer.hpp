#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sierp {

// All arbitrary-precision values in the library are GMP integers.
using Int = mpz_class;

// Base class for the library's mathematical error conditions.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a mod m with the result in [0, m), also for negative a. Requires m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool is_power_of_two(const Int& n) {
    return n > 0 && mpz_popcount(n.get_mpz_t()) == 1;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool fits_u64(const Int& n) {
    return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Int& n) {
    std::uint64_t lo = mpz_getlimbn(n.get_mpz_t(), 0);
    return mpz_size(n.get_mpz_t()) == 0 ? 0 : lo;
}

inline Int from_u64(std::uint64_t v) {
    Int r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
    return r;
}

inline std::string to_string(const Int& n) { return n.get_str(); }

inline std::size_t digits10(const Int& n) {
    if (n == 0) return 1;
    Int a = abs(n);
    return a.get_str().size();
}

// Strict decimal parser: optional minus, digits only.
inline Int parse_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t start = s[0] == '-' ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("bare sign");
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("invalid digit in integer literal: " + s);
    return Int(s, 10);
}

}  // namespace sierp
