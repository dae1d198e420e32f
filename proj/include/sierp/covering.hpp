#pragma once

#include <sierp/integer.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace sierp {

struct NotCoveredError : Error {
    Int value;
    explicit NotCoveredError(const Int& n)
        : Error(to_string(n) + " is not covered by any congruence class"), value(n) {}
};

// One class n = r (mod m), optionally tagged with the prime assigned to it.
struct CongruenceClass {
    std::int64_t r;
    std::int64_t m;
    std::optional<Int> prime;

    CongruenceClass(std::int64_t r_, std::int64_t m_, std::optional<Int> p = std::nullopt)
        : r(r_), m(m_), prime(std::move(p)) {
        if (m < 2) throw std::invalid_argument("congruence class: modulus must be >= 2");
        if (r < 0 || r >= m) throw std::invalid_argument("congruence class: need 0 <= r < m");
    }
};

// A finite system of congruence classes, in the order given.
struct Covering {
    std::vector<CongruenceClass> classes;
};

inline Int lcm_moduli(const Covering& c) {
    if (c.classes.empty()) throw std::invalid_argument("covering: empty system");
    Int l = 1;
    for (const auto& cls : c.classes) l = lcm(l, Int(cls.m));
    return l;
}

inline bool has_distinct_moduli(const Covering& c) {
    std::set<std::int64_t> seen;
    for (const auto& cls : c.classes)
        if (!seen.insert(cls.m).second) return false;
    return true;
}

inline std::int64_t min_modulus(const Covering& c) {
    if (c.classes.empty()) throw std::invalid_argument("covering: empty system");
    std::int64_t best = c.classes[0].m;
    for (const auto& cls : c.classes) best = std::min(best, cls.m);
    return best;
}

// Exhaustive check over one full period 0..lcm-1. Returns the least residue
// hit by no class, or nullopt when the system covers the integers.
inline std::optional<std::int64_t> verify_cover(const Covering& c) {
    Int big = lcm_moduli(c);
    if (big > 1'000'000'000) throw std::length_error("covering: lcm of moduli exceeds scan limit");
    std::int64_t l = static_cast<std::int64_t>(mpz_get_ui(big.get_mpz_t()));
    std::vector<bool> hit(static_cast<std::size_t>(l), false);
    for (const auto& cls : c.classes)
        for (std::int64_t n = cls.r; n < l; n += cls.m) hit[static_cast<std::size_t>(n)] = true;
    for (std::int64_t n = 0; n < l; ++n)
        if (!hit[static_cast<std::size_t>(n)]) return n;
    return std::nullopt;
}

// Index of the first class containing n, in the order the classes are listed.
inline std::size_t class_for(const Covering& c, const Int& n) {
    for (std::size_t i = 0; i < c.classes.size(); ++i)
        if (mod_floor(n, Int(c.classes[i].m)) == c.classes[i].r) return i;
    throw NotCoveredError(n);
}

}  // namespace sierp
