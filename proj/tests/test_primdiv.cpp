#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include <sierp/primdiv.hpp>

namespace {

using sierp::DivisorStatus;
using sierp::Int;
using sierp::LucasParams;

TEST(Cyclotomic, ValuesAgainstReferenceTable) {
    struct Row { std::uint64_t n; std::int64_t at1, atm1, at2, at3; };
    const Row rows[] = {
        {1, 0, -2, 1, 2},     {2, 2, 0, 3, 4},      {3, 3, 1, 7, 13},
        {4, 2, 2, 5, 10},     {5, 5, 1, 31, 121},   {6, 1, 3, 3, 7},
        {8, 2, 2, 17, 82},    {9, 3, 1, 73, 757},   {10, 1, 5, 11, 61},
        {12, 1, 1, 13, 73},   {15, 1, 1, 151, 4561}, {18, 1, 3, 57, 703},
        {24, 1, 1, 241, 6481}, {36, 1, 1, 4033, 530713},
    };
    for (const auto& r : rows) {
        EXPECT_EQ(sierp::cyclotomic_eval(r.n, Int(1)), r.at1) << r.n;
        EXPECT_EQ(sierp::cyclotomic_eval(r.n, Int(-1)), r.atm1) << r.n;
        EXPECT_EQ(sierp::cyclotomic_eval(r.n, Int(2)), r.at2) << r.n;
        EXPECT_EQ(sierp::cyclotomic_eval(r.n, Int(3)), r.at3) << r.n;
    }
    EXPECT_EQ(sierp::cyclotomic_eval(72, Int(2)), 16773121);
    EXPECT_EQ(sierp::cyclotomic_eval(105, Int(2)), sierp::parse_decimal("473474689919911"));
    EXPECT_THROW(sierp::cyclotomic_eval(0, Int(2)), std::invalid_argument);
}

TEST(Cyclotomic, ProductIdentity) {
    // prod over divisors d > 1 of n of Phi_d(alpha) = (alpha^n - 1)/(alpha - 1)
    for (Int alpha : {Int(2), Int(3), Int(5), Int(6)}) {
        LucasParams lp(alpha + 1, alpha);
        for (std::uint64_t n = 1; n <= 30; ++n) {
            Int prod = 1;
            for (std::uint64_t d = 2; d <= n; ++d)
                if (n % d == 0) prod *= sierp::cyclotomic_eval(d, alpha);
            EXPECT_EQ(prod, sierp::u_exact(lp, n)) << alpha << ' ' << n;
        }
    }
}

TEST(ClassifyDivisor, MersenneCases) {
    LucasParams lp(3, 2);  // U_n = 2^n - 1
    EXPECT_EQ(sierp::classify_divisor(lp, Int(7), 3), DivisorStatus::primitive);
    EXPECT_EQ(sierp::classify_divisor(lp, Int(7), 6), DivisorStatus::lower_rank);
    EXPECT_EQ(sierp::classify_divisor(lp, Int(5), 4), DivisorStatus::primitive);
    EXPECT_EQ(sierp::classify_divisor(lp, Int(3), 2), DivisorStatus::primitive);
    EXPECT_EQ(sierp::classify_divisor(lp, Int(3), 6), DivisorStatus::lower_rank);
    EXPECT_EQ(sierp::classify_divisor(lp, Int(11), 4), DivisorStatus::not_a_divisor);
    EXPECT_TRUE(sierp::is_primitive_divisor(lp, Int(13), 12));
    EXPECT_FALSE(sierp::is_primitive_divisor(lp, Int(11), 4));
}

TEST(ClassifyDivisor, DiscriminantDivisorsAreNeverPrimitive) {
    LucasParams fib = sierp::fibonacci_params();  // D = 5, and 5 | U_5
    EXPECT_EQ(sierp::classify_divisor(fib, Int(5), 5), DivisorStatus::divides_discriminant);
    LucasParams lp(8, 7);  // D = 36, and 2, 3 | U_2 = 8? only 2; 3 | D and 3 | U_3 = 57
    EXPECT_EQ(sierp::classify_divisor(lp, Int(3), 3), DivisorStatus::divides_discriminant);
    EXPECT_EQ(sierp::classify_divisor(lp, Int(2), 2), DivisorStatus::divides_discriminant);
    EXPECT_EQ(sierp::to_string(DivisorStatus::divides_discriminant),
              std::string("divides discriminant"));
}

TEST(ZsigmondyException, PairsWithBetaOne) {
    LucasParams m2(3, 2);   // alpha = 2
    LucasParams m7(8, 7);   // alpha = 7
    LucasParams m4(5, 4);   // alpha = 4
    EXPECT_TRUE(sierp::zsigmondy_exception(m2, 1));
    EXPECT_TRUE(sierp::zsigmondy_exception(m2, 6));
    EXPECT_FALSE(sierp::zsigmondy_exception(m2, 2));
    EXPECT_FALSE(sierp::zsigmondy_exception(m2, 5));
    EXPECT_TRUE(sierp::zsigmondy_exception(m7, 2));   // 7 + 1 = 2^3
    EXPECT_FALSE(sierp::zsigmondy_exception(m7, 6));
    EXPECT_FALSE(sierp::zsigmondy_exception(m4, 2));  // 4 + 1 = 5
    EXPECT_THROW(sierp::zsigmondy_exception(sierp::fibonacci_params(), 3),
                 sierp::PreconditionError);
}

TEST(PrimitiveDivisors, FactorsAndClassifies) {
    LucasParams m2(3, 2);
    auto pd = sierp::primitive_divisors(m2, 6);
    EXPECT_EQ(pd.u, 63);
    EXPECT_TRUE(pd.complete);
    EXPECT_TRUE(pd.primitive.empty());
    EXPECT_EQ(pd.factorization.factors.at(3), 2u);
    EXPECT_EQ(pd.factorization.factors.at(7), 1u);

    pd = sierp::primitive_divisors(m2, 4);
    EXPECT_EQ(pd.u, 15);
    EXPECT_EQ(pd.primitive, std::vector<Int>{Int(5)});

    pd = sierp::primitive_divisors(LucasParams(8, 7), 4);
    EXPECT_EQ(pd.u, 400);  // (7^4 - 1)/6
    EXPECT_EQ(pd.primitive, std::vector<Int>{Int(5)});  // 2 divides D = 36

    pd = sierp::primitive_divisors(LucasParams(9, 8), 4);
    EXPECT_EQ(pd.u, 585);
    EXPECT_EQ(pd.primitive, (std::vector<Int>{Int(5), Int(13)}));

    pd = sierp::primitive_divisors(sierp::fibonacci_params(), 5);
    EXPECT_EQ(pd.u, 5);
    EXPECT_TRUE(pd.primitive.empty());  // 5 divides the discriminant
}

// Direct-definition oracle: q is primitive for U_n when q | U_n, q does not
// divide D, and q divides no earlier U_t.
bool primitive_by_definition(const LucasParams& lp, const Int& q, std::uint64_t n) {
    if (sierp::mod_floor(sierp::u_exact(lp, n), q) != 0) return false;
    if (sierp::mod_floor(lp.D, q) == 0) return false;
    for (std::uint64_t t = 1; t < n; ++t)
        if (sierp::mod_floor(sierp::u_exact(lp, t), q) == 0) return false;
    return true;
}

TEST(PrimitiveDivisors, RankCriterionMatchesDefinition) {
    for (std::int64_t a = 2; a <= 20; ++a) {
        LucasParams lp(a + 1, a);
        for (std::uint64_t n = 2; n <= 12; ++n) {
            auto pd = sierp::primitive_divisors(lp, n);
            ASSERT_TRUE(pd.complete);
            std::vector<Int> expect;
            for (const auto& [q, e] : pd.factorization.factors)
                if (primitive_by_definition(lp, q, n)) expect.push_back(q);
            EXPECT_EQ(pd.primitive, expect) << "alpha=" << a << " n=" << n;
            EXPECT_EQ(pd.primitive.empty(), sierp::zsigmondy_exception(lp, n))
                << "alpha=" << a << " n=" << n;
        }
    }
}

TEST(SecondPrimitiveDivisorU4, KnownValuesAndExceptions) {
    EXPECT_EQ(sierp::second_primitive_divisor_u4(Int(4)), 17);   // 17
    EXPECT_EQ(sierp::second_primitive_divisor_u4(Int(5)), 13);   // 2 * 13
    EXPECT_EQ(sierp::second_primitive_divisor_u4(Int(6)), 37);   // 37
    EXPECT_EQ(sierp::second_primitive_divisor_u4(Int(8)), 13);   // 5 * 13
    EXPECT_EQ(sierp::second_primitive_divisor_u4(Int(12)), 29);  // 5 * 29
    EXPECT_EQ(sierp::second_primitive_divisor_u4(Int(13)), 17);  // 2 * 5 * 17
    EXPECT_EQ(sierp::second_primitive_divisor_u4(Int(18)), 13);  // 5^2 * 13
    for (Int a : {Int(0), Int(1), Int(2), Int(3), Int(7)})
        EXPECT_THROW(sierp::second_primitive_divisor_u4(a), sierp::PreconditionError);
    // every returned prime is a primitive divisor of U_4 outside {2, 5}
    for (std::int64_t a = 4; a <= 60; ++a) {
        if (a == 7) continue;
        Int q = sierp::second_primitive_divisor_u4(Int(a));
        EXPECT_NE(q, 2);
        EXPECT_NE(q, 5);
        EXPECT_EQ(sierp::mod_floor(Int(a) * a + 1, q), 0) << a;
        EXPECT_TRUE(sierp::is_primitive_divisor(LucasParams(a + 1, a), q, 4)) << a;
    }
}

}  // namespace
