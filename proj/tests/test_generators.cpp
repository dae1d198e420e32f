#include <gtest/gtest.h>

#include <string>
#include <vector>

#include <sierp/assets.hpp>
#include <sierp/generators.hpp>

namespace {

using sierp::CertificateKind;
using sierp::Covering;
using sierp::GeneralVariant;
using sierp::Int;
using sierp::SierpinskiCertificate;

std::vector<Int> primes_of(const SierpinskiCertificate& c) {
    std::vector<Int> out;
    for (const auto& cls : c.covering.classes) out.push_back(*cls.prime);
    return out;
}

TEST(Sierpinski1960, CertificateValues) {
    SierpinskiCertificate c = sierp::sierpinski_1960_certificate();
    EXPECT_EQ(c.kind, CertificateKind::main);
    EXPECT_EQ(c.P, 3);
    EXPECT_EQ(c.Q, 2);
    EXPECT_EQ(c.D, 1);
    EXPECT_EQ(c.exponent, 1);
    EXPECT_EQ(c.k, sierp::parse_decimal("15511380746462593381"));
    EXPECT_EQ(c.modulus, sierp::parse_decimal("18446744073709551615"));  // 2^64 - 1
    EXPECT_EQ(primes_of(c),
              (std::vector<Int>{Int(3), Int(5), Int(17), Int(257), Int(65537), Int(641),
                                sierp::parse_decimal("6700417")}));
    EXPECT_NO_THROW(sierp::validate(c));
}

TEST(GenerateMain, AlphaTwoDelegatesToClassicTables) {
    SierpinskiCertificate c = sierp::generate_main(2);
    EXPECT_EQ(c.k, sierp::parse_decimal("15511380746462593381"));
    EXPECT_EQ(c.covering.classes.size(), 7u);
}

TEST(GenerateMain, AlphaFourUsesFirstCovering) {
    SierpinskiCertificate c = sierp::generate_main(4);
    EXPECT_EQ(c.P, 5);
    EXPECT_EQ(c.Q, 4);
    EXPECT_EQ(c.covering.classes.size(), 5u);
    EXPECT_EQ(primes_of(c), (std::vector<Int>{Int(5), Int(7), Int(17), Int(13), Int(241)}));
    EXPECT_EQ(c.offsets, (std::vector<Int>{Int(4), Int(2), Int(10), Int(10), Int(69)}));
    EXPECT_EQ(c.k, 828551);
    EXPECT_EQ(c.modulus, 1864135);
    EXPECT_NO_THROW(sierp::validate(c));
}

TEST(GenerateMain, AlphaSevenSwitchesToSecondCovering) {
    // alpha + 1 a power of two starves the 0 mod 2 class of covering-A
    SierpinskiCertificate c = sierp::generate_main(7);
    EXPECT_EQ(c.P, 8);
    EXPECT_EQ(c.Q, 7);
    EXPECT_EQ(c.covering.classes.size(), 14u);
    EXPECT_EQ(c.k, sierp::parse_decimal("69331789583710704765034345771724189"));
    EXPECT_EQ(primes_of(c).front(), 19);
    EXPECT_EQ(primes_of(c).back(), 12913561);
    EXPECT_NO_THROW(sierp::validate(c));
}

TEST(GenerateMain, RejectsAlphaBelowTwo) {
    EXPECT_THROW(sierp::generate_main(1), sierp::PreconditionError);
    EXPECT_THROW(sierp::generate_main(0), sierp::PreconditionError);
    EXPECT_THROW(sierp::generate_main(-3), sierp::PreconditionError);
}

TEST(MenuChoices, StandardPrescription) {
    auto picks = sierp::menu_choices(sierp::assets::standard_540(), GeneralVariant::standard);
    const Covering& c = sierp::assets::standard_540();
    ASSERT_EQ(picks.size(), c.classes.size());
    for (std::size_t i = 0; i < picks.size(); ++i) {
        std::int64_t r = c.classes[i].r;
        if (r % 2 == 0 || r == 1) {
            EXPECT_EQ(picks[i].a, 0) << i;
            EXPECT_EQ(picks[i].b, 1) << i;
        } else if (r == 3) {
            // the one prime where U_3 + D vanishes needs the shifted pick
            EXPECT_EQ(picks[i].a, *c.classes[i].prime == 5 ? 1 : 0) << i;
            EXPECT_EQ(picks[i].b, 1) << i;
        } else {
            EXPECT_EQ(picks[i].a, 0) << i;
            EXPECT_EQ(picks[i].b, 4) << i;
        }
    }
    auto capture = sierp::menu_choices(c, GeneralVariant::sierpinski_capture);
    for (const auto& p : capture) {
        EXPECT_EQ(p.a, 3);
        EXPECT_EQ(p.b, 1);
    }

    // the r = 3 class over the prime 5 takes the shifted pick
    auto e32 = sierp::menu_choices(sierp::assets::nonreal_360(), GeneralVariant::standard);
    EXPECT_EQ(sierp::assets::nonreal_360().classes[1].r, 3);
    EXPECT_EQ(e32[1].a, 1);
    EXPECT_EQ(e32[1].b, 1);
}

TEST(GenerateGeneral, SectionThreeStandard) {
    SierpinskiCertificate c =
        sierp::generate_general(sierp::assets::standard_540(), GeneralVariant::standard);
    ASSERT_TRUE(c.a && c.b);
    EXPECT_EQ(*c.a, sierp::parse_decimal("57735618045574774305"));
    EXPECT_EQ(*c.b, sierp::parse_decimal("41575375575250122841"));
    EXPECT_EQ(c.k, sierp::parse_decimal("37170467875892126822"));
    EXPECT_EQ(c.kind, CertificateKind::general);
    EXPECT_EQ(c.exponent, 1);
    // all x-congruences here have residue zero, so a is the product of the primes
    EXPECT_EQ(*c.a, c.modulus);
    EXPECT_EQ(c.D, *c.b);
    EXPECT_NO_THROW(sierp::validate(c));
}

TEST(GenerateGeneral, RationalVariant) {
    SierpinskiCertificate c =
        sierp::generate_general(sierp::assets::rational_360(), GeneralVariant::rational);
    ASSERT_TRUE(c.a && c.b);
    EXPECT_EQ(*c.a, sierp::parse_decimal("10813280829486135"));
    EXPECT_EQ(*c.b, 1);
    EXPECT_EQ(c.k, sierp::parse_decimal("3604426943162044"));
    // alpha = (a + 1)/2 is the published integer root
    EXPECT_EQ((*c.a + 1) / 2, sierp::parse_decimal("5406640414743068"));
    EXPECT_NO_THROW(sierp::validate(c));
}

TEST(GenerateGeneral, NonrealVariant) {
    SierpinskiCertificate c =
        sierp::generate_general(sierp::assets::nonreal_360(), GeneralVariant::nonreal);
    ASSERT_TRUE(c.a && c.b);
    EXPECT_EQ(*c.a, sierp::parse_decimal("6487968497691681"));
    EXPECT_EQ(*c.b, sierp::parse_decimal("-10777658998435559"));
    EXPECT_EQ(c.k, sierp::parse_decimal("1314262889709437"));
    EXPECT_LT(c.D, 0);
    EXPECT_NO_THROW(sierp::validate(c));
}

TEST(GenerateGeneral, CaptureVariant) {
    SierpinskiCertificate c =
        sierp::generate_general(sierp::assets::capture_360(), GeneralVariant::sierpinski_capture);
    EXPECT_EQ(c.P, 3);
    EXPECT_EQ(c.Q, 2);
    EXPECT_EQ(c.D, 1);
    EXPECT_EQ(c.k, sierp::parse_decimal("9579495527398457"));
    EXPECT_NO_THROW(sierp::validate(c));
}

TEST(GenerateGeneral, PreconditionFailures) {
    // moduli repeat
    EXPECT_THROW(sierp::generate_general(sierp::assets::covering_c(), GeneralVariant::standard),
                 sierp::PreconditionError);
    // not a covering
    Covering holes{{{0, 2}, {1, 4}}};
    EXPECT_THROW(sierp::generate_general(holes, GeneralVariant::standard),
                 sierp::PreconditionError);
    // rational pick unavailable: standard-540 has classes with odd r >= 5
    EXPECT_THROW(sierp::generate_general(sierp::assets::standard_540(), GeneralVariant::rational),
                 sierp::PreconditionError);
    // m + 1 composite (m = 3)
    Covering bad{{{0, 2}, {0, 3}, {1, 4}, {5, 6}, {7, 12}}};
    try {
        sierp::generate_general(bad, GeneralVariant::standard);
        FAIL() << "expected ModulusNotPrimePlusOneError";
    } catch (const sierp::ModulusNotPrimePlusOneError& e) {
        EXPECT_EQ(e.index, 1u);
    }
}

TEST(GenerateFibonacci, NineHundredFortyNineDigitMultiplier) {
    SierpinskiCertificate c = sierp::generate_fibonacci();
    EXPECT_EQ(c.kind, CertificateKind::fibonacci);
    EXPECT_EQ(c.P, 1);
    EXPECT_EQ(c.Q, -1);
    EXPECT_EQ(c.D, 5);
    EXPECT_EQ(c.covering.classes.size(), 133u);
    EXPECT_EQ(sierp::digits10(c.k), 949u);
    std::string k = sierp::to_string(c.k);
    EXPECT_EQ(k.substr(0, 25), "7048448796642275134208848");
    EXPECT_EQ(k.substr(k.size() - 25), "6182506859320611707173097");
    EXPECT_NO_THROW(sierp::validate(c));
}

TEST(GenerateNonlinear, SquaredMultiplierConstruction) {
    SierpinskiCertificate c = sierp::generate_nonlinear();
    EXPECT_EQ(c.kind, CertificateKind::nonlinear);
    EXPECT_EQ(c.exponent, 2);
    EXPECT_EQ(c.P, 6);
    EXPECT_EQ(c.Q, 5);
    EXPECT_EQ(c.D, 16);
    EXPECT_EQ(c.covering.classes.size(), 11u);
    EXPECT_EQ(c.k, sierp::parse_decimal("117050073288612071969896"));
    EXPECT_EQ(c.modulus, sierp::parse_decimal("164636269832650817652087"));
    EXPECT_NO_THROW(sierp::validate(c));
}

TEST(GenerateNonlinear, EnumerationMinimumOverRootChoices) {
    // switching square roots per prime reaches a far smaller k than the
    // all-smaller-roots pick the construction fixes
    Int m = sierp::nonlinear_enumeration_min();
    EXPECT_EQ(m, sierp::parse_decimal("11735641734673170472"));
    EXPECT_LT(m, sierp::parse_decimal("117050073288612071969896"));
}

TEST(Validate, RejectsTampering) {
    SierpinskiCertificate c = sierp::generate_main(4);
    c.k += 1;
    EXPECT_THROW(sierp::validate(c), sierp::CertificateInvalidError);

    c = sierp::generate_main(4);
    c.offsets[0] += 1;
    EXPECT_THROW(sierp::validate(c), sierp::CertificateInvalidError);

    c = sierp::generate_main(4);
    c.covering.classes[0].prime = 11;
    EXPECT_THROW(sierp::validate(c), sierp::CertificateInvalidError);

    c = sierp::generate_main(4);
    c.exponent = 3;
    EXPECT_THROW(sierp::validate(c), sierp::CertificateInvalidError);

    c = sierp::generate_main(4);
    c.D += 2;
    EXPECT_THROW(sierp::validate(c), sierp::CertificateInvalidError);
}

TEST(VariantNames, RoundTrip) {
    using sierp::general_variant_from;
    EXPECT_EQ(general_variant_from("standard"), GeneralVariant::standard);
    EXPECT_EQ(general_variant_from("rational"), GeneralVariant::rational);
    EXPECT_EQ(general_variant_from("nonreal"), GeneralVariant::nonreal);
    EXPECT_EQ(general_variant_from("sierpinski-capture"), GeneralVariant::sierpinski_capture);
    EXPECT_EQ(general_variant_from("sierpinski_capture"), GeneralVariant::sierpinski_capture);
    EXPECT_EQ(general_variant_from("bogus"), std::nullopt);
    EXPECT_EQ(std::string(sierp::to_string(GeneralVariant::nonreal)), "nonreal");

    EXPECT_EQ(sierp::certificate_kind_from("fibonacci"), CertificateKind::fibonacci);
    EXPECT_EQ(sierp::certificate_kind_from("bogus"), std::nullopt);
    EXPECT_EQ(std::string(sierp::to_string(CertificateKind::nonlinear)), "nonlinear");
}

}  // namespace
