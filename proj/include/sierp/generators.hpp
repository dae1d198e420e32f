#pragma once

#include <sierp/assets.hpp>
#include <sierp/certificate.hpp>
#include <sierp/covering.hpp>
#include <sierp/lucas.hpp>
#include <sierp/modarith.hpp>
#include <sierp/primdiv.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sierp {

struct ModulusNotPrimePlusOneError : Error {
    std::size_t index;
    explicit ModulusNotPrimePlusOneError(std::size_t i)
        : Error("class " + std::to_string(i) + ": m + 1 is not prime"), index(i) {}
};

struct OffsetNotInvertibleError : Error {
    std::size_t index;
    explicit OffsetNotInvertibleError(std::size_t i)
        : Error("class " + std::to_string(i) + ": A_i = 0 mod p_i"), index(i) {}
};

struct MenuAssertionError : Error {
    std::size_t index;
    explicit MenuAssertionError(std::size_t i)
        : Error("class " + std::to_string(i) + ": menu closed form violated"), index(i) {}
};

struct GcdAdjustmentStalledError : Error {
    GcdAdjustmentStalledError() : Error("gcd(a, b) adjustment did not converge in 8 rounds") {}
};

struct NonResidueEncounteredError : Error {
    std::size_t index;
    explicit NonResidueEncounteredError(std::size_t i)
        : Error("class " + std::to_string(i) + ": -1/A_i is not a square mod p_i"), index(i) {}
};

struct NoInvertibleOffsetError : Error {
    std::size_t index;
    explicit NoInvertibleOffsetError(std::size_t i)
        : Error("class " + std::to_string(i) +
                ": every primitive divisor found divides A_i"),
          index(i) {}
};

struct AssetCorruptedError : Error {
    using Error::Error;
};

enum class GeneralVariant { standard, rational, nonreal, sierpinski_capture };

inline const char* to_string(GeneralVariant v) {
    switch (v) {
        case GeneralVariant::standard: return "standard";
        case GeneralVariant::rational: return "rational";
        case GeneralVariant::nonreal: return "nonreal";
        case GeneralVariant::sierpinski_capture: return "sierpinski-capture";
    }
    return "?";
}

inline std::optional<GeneralVariant> general_variant_from(const std::string& s) {
    if (s == "standard") return GeneralVariant::standard;
    if (s == "rational") return GeneralVariant::rational;
    if (s == "nonreal") return GeneralVariant::nonreal;
    if (s == "sierpinski-capture" || s == "sierpinski_capture")
        return GeneralVariant::sierpinski_capture;
    return std::nullopt;
}

struct MenuChoice {
    Int a, b;
};

// The per-class (a_i, b_i) prescription. Under the standard menu:
// r = 1 or r even -> (0, 1); r = 3 -> (0, 1) unless p = 5, then (1, 1);
// r >= 5 odd -> (0, 4). The capture variant fixes (3, 1) everywhere.
inline std::vector<MenuChoice> menu_choices(const Covering& c, GeneralVariant v) {
    std::vector<MenuChoice> out;
    out.reserve(c.classes.size());
    for (const auto& cls : c.classes) {
        if (v == GeneralVariant::sierpinski_capture) {
            out.push_back({3, 1});
            continue;
        }
        std::int64_t r = cls.r;
        if (r == 3)
            out.push_back(cls.m + 1 == 5 ? MenuChoice{1, 1} : MenuChoice{0, 1});
        else if (r == 1 || r % 2 == 0)
            out.push_back({0, 1});
        else
            out.push_back({0, 4});
    }
    return out;
}

namespace detail {

// Offsets A_i = U_{r_i} + D mod p_i for tagged classes; zero offsets rejected.
inline std::vector<Int> compute_offsets(const LucasParams& lp, const Covering& c) {
    std::vector<Int> offsets;
    offsets.reserve(c.classes.size());
    for (std::size_t i = 0; i < c.classes.size(); ++i) {
        const auto& cls = c.classes[i];
        Int A = mod_floor(u_mod(lp, cls.r, *cls.prime) + lp.D, *cls.prime);
        if (A == 0) throw OffsetNotInvertibleError(i);
        offsets.push_back(A);
    }
    return offsets;
}

// Least positive k with k = -1/A_i (mod p_i) for all classes.
inline std::pair<Int, Int> solve_k(const Covering& c, const std::vector<Int>& offsets) {
    std::vector<ResidueCondition> conds;
    conds.reserve(offsets.size());
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        const Int& p = *c.classes[i].prime;
        conds.emplace_back(p - mod_inverse(offsets[i], p), p);
    }
    auto [k, m] = crt(conds);
    if (k == 0) k = m;  // k must be positive
    return {k, m};
}

inline SierpinskiCertificate assemble(CertificateKind kind, const LucasParams& lp,
                                      std::optional<Int> a, std::optional<Int> b, int exponent,
                                      Covering covering, std::vector<Int> offsets, Int k,
                                      Int modulus) {
    SierpinskiCertificate cert;
    cert.kind = kind;
    cert.P = lp.P;
    cert.Q = lp.Q;
    cert.D = lp.D;
    cert.a = std::move(a);
    cert.b = std::move(b);
    cert.exponent = exponent;
    cert.covering = std::move(covering);
    cert.offsets = std::move(offsets);
    cert.k = std::move(k);
    cert.modulus = std::move(modulus);
    cert.k_class = describe_k_class(cert.k, cert.modulus, exponent);
    return cert;
}

}  // namespace detail

// Certificate behind the classic 1960 construction: covering with Fermat
// primes and the pair (2, 1), where k*(U_n + D) + 1 = k*2^n + 1.
inline SierpinskiCertificate sierpinski_1960_certificate() {
    Covering c = assets::sierpinski_1960();
    LucasParams lp(3, 2);
    std::vector<Int> offsets = detail::compute_offsets(lp, c);
    auto [k, m] = detail::solve_k(c, offsets);
    return detail::assemble(CertificateKind::main, lp, std::nullopt, std::nullopt, 1,
                            std::move(c), std::move(offsets), std::move(k), std::move(m));
}

// Rational construction: for alpha >= 3 picks covering A, or covering B when
// alpha + 1 is a power of two, and tags each class with a primitive divisor
// p of U_m(alpha, 1) such that A = U_r + (alpha-1)^2 is invertible mod p.
// Candidates are the prime factors of the cyclotomic value phi_m(alpha),
// tried in increasing order. alpha = 2 is served by the 1960 certificate,
// since U_6(2, 1) has no primitive divisor.
inline SierpinskiCertificate generate_main(const Int& alpha, const FactorBudget& effort = {}) {
    if (alpha < 2) throw PreconditionError("generate_main: requires alpha >= 2");
    if (alpha == 2) return sierpinski_1960_certificate();
    Covering c = is_power_of_two(alpha + 1) ? assets::covering_b() : assets::covering_a();
    LucasParams lp(alpha + 1, alpha);
    for (std::size_t i = 0; i < c.classes.size(); ++i) {
        auto& cls = c.classes[i];
        std::uint64_t m = static_cast<std::uint64_t>(cls.m);
        Int phi = cyclotomic_eval(m, alpha);
        Factorization f = factor(abs(phi), effort);
        std::optional<Int> chosen;
        for (const auto& [q, e] : f.factors) {
            if (classify_divisor(lp, q, m) != DivisorStatus::primitive) continue;
            Int A = mod_floor(u_mod(lp, cls.r, q) + lp.D, q);
            if (A == 0) {
                if (q == 5 && cls.m == 4 && mod_floor(alpha, 5) == 3) {
                    // the one systematic collision: replace 5 by the second
                    // primitive divisor of U_4, guaranteed by Le's theorem
                    Int q2 = second_primitive_divisor_u4(alpha, effort);
                    if (!is_primitive_divisor(lp, q2, m) ||
                        mod_floor(u_mod(lp, cls.r, q2) + lp.D, q2) == 0)
                        throw NoInvertibleOffsetError(i);
                    chosen = q2;
                    break;
                }
                continue;
            }
            chosen = q;
            break;
        }
        if (!chosen) {
            if (!f.complete()) throw FactorizationIncompleteError(f.cofactor);
            throw NoInvertibleOffsetError(i);
        }
        cls.prime = *chosen;
    }
    std::vector<Int> offsets = detail::compute_offsets(lp, c);
    auto [k, m] = detail::solve_k(c, offsets);
    return detail::assemble(CertificateKind::main, lp, std::nullopt, std::nullopt, 1,
                            std::move(c), std::move(offsets), std::move(k), std::move(m));
}

// The menu construction over a covering with distinct moduli m_i and
// p_i = m_i + 1 prime. Solves x = a_i (mod p_i), x = 1 (mod 2) and
// y = b_i (mod p_i), y = 1 (mod 4) for the least positive a, b; keeps
// gcd(a, b) = 1 by appending y-congruences; alpha = (a + sqrt(b))/2.
inline SierpinskiCertificate generate_general(const Covering& c, GeneralVariant v) {
    if (!has_distinct_moduli(c))
        throw PreconditionError("generate_general: covering must have distinct moduli");
    if (auto witness = verify_cover(c))
        throw PreconditionError("generate_general: not a covering, witness " +
                                std::to_string(*witness));
    Covering tagged = c;
    for (std::size_t i = 0; i < tagged.classes.size(); ++i) {
        Int p = Int(tagged.classes[i].m) + 1;
        if (is_prime(p) == Primality::composite) throw ModulusNotPrimePlusOneError(i);
        tagged.classes[i].prime = p;
    }
    std::vector<MenuChoice> menu = menu_choices(tagged, v);
    if (v == GeneralVariant::rational)
        for (const auto& mc : menu)
            if (mc.b != 1)
                throw PreconditionError(
                    "generate_general: rational variant needs every odd residue equal to 1");

    std::vector<ResidueCondition> xs, ys;
    for (std::size_t i = 0; i < menu.size(); ++i) {
        xs.emplace_back(menu[i].a, *tagged.classes[i].prime);
        ys.emplace_back(menu[i].b, *tagged.classes[i].prime);
    }
    if (v == GeneralVariant::sierpinski_capture)
        xs.emplace_back(3, 4);
    else
        xs.emplace_back(1, 2);
    ys.emplace_back(1, 4);

    Int a = crt(xs).first;  // odd by the parity congruence, hence nonzero
    Int b, b_eff;
    bool settled = false;
    for (int round = 0; round <= 8; ++round) {
        auto [b0, my] = crt(ys);
        b = b0 == 0 ? my : b0;
        b_eff = v == GeneralVariant::nonreal ? Int(b - my) : b;
        Int g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b_eff.get_mpz_t());
        if (g == 1) {
            settled = true;
            break;
        }
        Factorization fg = factor(g);
        if (!fg.complete()) throw FactorizationIncompleteError(fg.cofactor);
        for (const auto& [q, e] : fg.factors) ys.emplace_back(1, q);
    }
    if (!settled) throw GcdAdjustmentStalledError();

    LucasParams lp = params_from_ab(a, b_eff);
    std::vector<Int> offsets = detail::compute_offsets(lp, tagged);
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        if (menu[i].a != 0) continue;  // closed forms cover only the a_i = 0 cases
        const Int& p = *tagged.classes[i].prime;
        std::int64_t r = tagged.classes[i].r;
        Int expect;
        if (r % 2 == 0)
            expect = mod_floor(menu[i].b, p);
        else if (r == 1)
            expect = mod_floor(2, p);
        else if (r == 3)
            expect = mod_floor(5 * mod_inverse(4, p), p);
        else
            expect = mod_floor(5, p);
        if (offsets[i] != expect) throw MenuAssertionError(i);
    }
    auto [k, m] = detail::solve_k(tagged, offsets);
    Int a_copy = a;
    return detail::assemble(CertificateKind::general, lp, std::move(a_copy), Int(b_eff), 1,
                            std::move(tagged), std::move(offsets), std::move(k), std::move(m));
}

// Fibonacci construction over covering C: each class modulus is the exact
// period of F mod its prime, so F_n = F_r (mod p) whenever n = r (mod m);
// k = -1/(F_r + 5) (mod p) across all 133 classes.
inline SierpinskiCertificate generate_fibonacci() {
    Covering c = assets::covering_c();
    if (verify_cover(c)) throw AssetCorruptedError("covering C does not cover");
    LucasParams lp = fibonacci_params();
    for (std::size_t i = 0; i < c.classes.size(); ++i) {
        const auto& cls = c.classes[i];
        if (!cls.prime || !is_exact_period(lp, *cls.prime, cls.m))
            throw AssetCorruptedError("covering C: period mismatch at class " +
                                      std::to_string(i));
    }
    std::vector<Int> offsets;
    try {
        offsets = detail::compute_offsets(lp, c);
    } catch (const OffsetNotInvertibleError& e) {
        throw AssetCorruptedError("covering C: F_r + 5 = 0 mod p at class " +
                                  std::to_string(e.index));
    }
    auto [k, m] = detail::solve_k(c, offsets);
    return detail::assemble(CertificateKind::fibonacci, lp, std::nullopt, std::nullopt, 1,
                            std::move(c), std::move(offsets), std::move(k), std::move(m));
}

namespace detail {

// Smaller square root of -1/A_i mod p_i for every table-5 class.
inline std::vector<ResidueCondition> nonlinear_root_conditions(const LucasParams& lp,
                                                               const Covering& c) {
    std::vector<ResidueCondition> conds;
    for (std::size_t i = 0; i < c.classes.size(); ++i) {
        const Int& p = *c.classes[i].prime;
        Int A = mod_floor(u_mod(lp, c.classes[i].r, p) + lp.D, p);
        if (A == 0) throw OffsetNotInvertibleError(i);
        Int target = mod_floor(-mod_inverse(A, p), p);
        if (legendre_symbol(target, p) != 1) throw NonResidueEncounteredError(i);
        conds.emplace_back(sqrt_mod_prime(target, p), p);
    }
    return conds;
}

}  // namespace detail

// Nonlinear construction (exponent 2) over the table-5 covering with
// alpha = 5: solves k^2 = -1/A_i (mod p_i), taking the smaller square root
// at every prime. This fixed choice reproduces the construction's k; the
// true minimum over all 2^11 root choices is smaller (see
// nonlinear_enumeration_min) but is not what the procedure produces.
inline SierpinskiCertificate generate_nonlinear() {
    Covering c = assets::table_5();
    if (verify_cover(c)) throw AssetCorruptedError("table-5 covering does not cover");
    LucasParams lp(6, 5);  // alpha = 5, beta = 1, D = 16
    std::vector<Int> offsets = detail::compute_offsets(lp, c);
    auto conds = detail::nonlinear_root_conditions(lp, c);
    auto [k, m] = crt(conds);
    if (k == 0) k = m;
    return detail::assemble(CertificateKind::nonlinear, lp, std::nullopt, std::nullopt, 2,
                            std::move(c), std::move(offsets), std::move(k), std::move(m));
}

// Minimum of the 2^11 CRT solutions over both square roots per prime.
inline Int nonlinear_enumeration_min() {
    Covering c = assets::table_5();
    LucasParams lp(6, 5);
    auto conds = detail::nonlinear_root_conditions(lp, c);
    std::size_t n = conds.size();
    Int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<ResidueCondition> pick;
        pick.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const Int& p = conds[i].modulus;
            Int r = mask >> i & 1 ? Int(p - conds[i].residue) : conds[i].residue;
            pick.emplace_back(std::move(r), p);
        }
        Int k = crt(pick).first;
        if (k == 0) continue;
        if (best == 0 || k < best) best = k;
    }
    return best;
}

}  // namespace sierp
