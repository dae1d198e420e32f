#pragma once

#include <sierp/covering.hpp>
#include <sierp/lucas.hpp>
#include <sierp/modarith.hpp>

#include <optional>
#include <string>
#include <vector>

namespace sierp {

enum class CertificateKind { main, general, fibonacci, nonlinear };

inline const char* to_string(CertificateKind k) {
    switch (k) {
        case CertificateKind::main: return "main";
        case CertificateKind::general: return "general";
        case CertificateKind::fibonacci: return "fibonacci";
        case CertificateKind::nonlinear: return "nonlinear";
    }
    return "?";
}

inline std::optional<CertificateKind> certificate_kind_from(const std::string& s) {
    if (s == "main") return CertificateKind::main;
    if (s == "general") return CertificateKind::general;
    if (s == "fibonacci") return CertificateKind::fibonacci;
    if (s == "nonlinear") return CertificateKind::nonlinear;
    return std::nullopt;
}

// The artifact's output object: a covering whose classes carry primes p_i,
// Lucas parameters, offsets A_i = U_{r_i} + D mod p_i, and a multiplier k
// with k^e * A_i + 1 = 0 (mod p_i) for each class, so that every term
// k^e * (U_n + D) + 1 with n >= 1 is divisible by some p_i.
struct SierpinskiCertificate {
    CertificateKind kind = CertificateKind::general;
    Int P, Q, D;
    std::optional<Int> a, b;   // half-integer parametrization alpha=(a+sqrt(b))/2, when used
    int exponent = 1;          // 1 for k*(U_n+D)+1, 2 for k^2*(U_n+D)+1
    Covering covering;         // classes with prime tags, construction order
    std::vector<Int> offsets;  // A_i, reduced mod p_i
    Int k;
    Int modulus;               // product of the p_i
    std::string k_class;       // the arithmetic progression of admissible multipliers

    LucasParams params() const { return LucasParams(P, Q); }
};

struct CertificateInvalidError : Error {
    using Error::Error;
};

inline std::string describe_k_class(const Int& k, const Int& modulus, int exponent) {
    std::string head = exponent == 2 ? "k'^2" : "k'";
    return "every positive k' with k' = " + to_string(k) + " (mod " + to_string(modulus) +
           ") satisfies " + head + " * A_i + 1 = 0 (mod p_i) for every class";
}

// Structural checks: primes present, distinct and prime; offsets reduced,
// nonzero and consistent; k the least positive solution of its congruences.
inline void validate(const SierpinskiCertificate& c) {
    if (c.exponent != 1 && c.exponent != 2)
        throw CertificateInvalidError("exponent must be 1 or 2");
    if (c.D != c.P * c.P - 4 * c.Q) throw CertificateInvalidError("D != P^2 - 4Q");
    if (c.a && c.b && (*c.a != c.P || *c.b != c.D))
        throw CertificateInvalidError("a, b inconsistent with P, D");
    if (c.covering.classes.size() != c.offsets.size())
        throw CertificateInvalidError("one offset A_i required per class");
    if (c.covering.classes.empty()) throw CertificateInvalidError("no classes");
    LucasParams lp = c.params();
    Int prod = 1;
    for (std::size_t i = 0; i < c.covering.classes.size(); ++i) {
        const auto& cls = c.covering.classes[i];
        if (!cls.prime) throw CertificateInvalidError("class without prime tag");
        const Int& p = *cls.prime;
        if (is_prime(p) == Primality::composite)
            throw CertificateInvalidError("composite class prime " + to_string(p));
        for (std::size_t j = 0; j < i; ++j)
            if (*c.covering.classes[j].prime == p)
                throw CertificateInvalidError("repeated class prime " + to_string(p));
        const Int& A = c.offsets[i];
        if (A <= 0 || A >= p) throw CertificateInvalidError("offset A_i not reduced or zero");
        if (mod_floor(pow_mod(c.k, c.exponent, p) * A + 1, p) != 0)
            throw CertificateInvalidError("k^e * A_i + 1 != 0 mod " + to_string(p));
        if (mod_floor(u_mod(lp, cls.r, p) + c.D, p) != A)
            throw CertificateInvalidError("A_i != U_{r_i} + D mod " + to_string(p));
        prod *= p;
    }
    if (prod != c.modulus) throw CertificateInvalidError("modulus != product of class primes");
    if (c.k <= 0 || c.k >= c.modulus) throw CertificateInvalidError("k not in (0, modulus)");
}

}  // namespace sierp
