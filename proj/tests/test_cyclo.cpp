#include "hurwitz/constants.hpp"
#include "hurwitz/cyclo.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace hurwitz;
using testing_support::random_cyclo;
using testing_support::random_nonzero;

TEST(Cyclo, FullPowerSumIsZero) {
    EXPECT_TRUE(CycloNum::canon(13, std::vector<mpq_class>(13, 1)).is_zero());
}

TEST(Cyclo, ZetaToTheConductorIsOne) {
    EXPECT_TRUE(CycloNum::zeta(13, 13).is_one());
    EXPECT_TRUE(CycloNum::zeta(52, 52).is_one());
    EXPECT_EQ(CycloNum::zeta(13, -1), CycloNum::zeta(13, 12));
}

TEST(Cyclo, GaussSumSquaresToThirteen) {
    const CycloNum g = parse_zeta_expr(13, "z+z^12+z^3+z^10+z^9+z^4-z^5-z^8-z^2-z^11-z^6-z^7");
    EXPECT_EQ(g * g, CycloNum(13, 13));
    EXPECT_EQ(g, sqrt13());
}

TEST(Cyclo, ThetaSumAndPolynomial) {
    CycloNum s(13);
    for (int i = 1; i <= 4; ++i) {
        const CycloNum& t = cval("theta" + std::to_string(i));
        s += t;
        const CycloNum t2 = t * t;
        EXPECT_TRUE((t2 * t2 + t2 * t + t2 * 2 - t * 4 + CycloNum(13, 3)).is_zero()) << i;
    }
    EXPECT_EQ(s, CycloNum(13, -1));
}

TEST(Cyclo, GaloisExamples) {
    EXPECT_EQ(CycloNum::zeta(13).galois(1), CycloNum::zeta(13));
    EXPECT_EQ(sqrt13().galois(2), -sqrt13());
    EXPECT_EQ(cval("theta1").galois(3), cval("theta1"));
    EXPECT_THROW(sqrt13().galois(13), DomainError);
}

TEST(Cyclo, GaloisOnSqrt13IsTheLegendreSymbol) {
    for (long k = 1; k < 13; ++k) {
        bool residue = false;
        for (long x = 1; x < 13; ++x) residue = residue || (x * x) % 13 == k;
        EXPECT_EQ(sqrt13().galois(k), residue ? sqrt13() : -sqrt13()) << k;
    }
}

TEST(Cyclo, Embeddings) {
    const Complex s = sqrt13().embed();
    EXPECT_TRUE(approx_equal(s, Complex(boost::multiprecision::sqrt(Real(13))), Real("1e-40")));
    const Complex t = cval("theta1").embed();
    EXPECT_GT(t.re, 0);
    EXPECT_GT(t.im, 0);
    const Complex z = CycloNum(13).embed();
    EXPECT_EQ(z.re, 0);
    EXPECT_EQ(z.im, 0);
}

TEST(Cyclo, DivisionByZeroThrows) {
    EXPECT_THROW(CycloNum(13).inverse(), DivisionByZero);
    EXPECT_THROW(CycloNum(13, 1) / CycloNum(13), DivisionByZero);
}

TEST(Cyclo, ParseErrors) {
    EXPECT_THROW(CycloNum::parse("13; 1, x"), ParseError);
    EXPECT_THROW(CycloNum::parse("nonsense"), ParseError);
}

TEST(Cyclo, MixedConductorsAreUnified) {
    const CycloNum i = CycloNum::zeta(4);
    const CycloNum x = i * sqrt13();
    EXPECT_EQ(x.conductor(), 52);
    EXPECT_EQ(x * x, CycloNum(52, -13));
    EXPECT_EQ(CycloNum(13, 2), CycloNum(7, 2));
}

TEST(Constants, P1ValueAndLongForm) {
    EXPECT_EQ(cval("p1"), sqrt13() * (CycloNum::zeta(13, 2) + CycloNum::zeta(13, 11)));
    EXPECT_EQ(cval("p1"), parse_zeta_expr(13, "z^2+z^11-2+2z+2z^12-2z^9-2z^4"));
}

TEST(Constants, EtaMinimalPolynomial) {
    const CycloNum& e = cval("eta");
    EXPECT_TRUE((e * e * e + e * e - e * 2 - CycloNum(7, 1)).is_zero());
}

TEST(Constants, EveryConstantSatisfiesItsIdentity) {
    for (const auto& n : constant_names()) EXPECT_TRUE(verify_constant(n)) << n;
    EXPECT_THROW(cval("no_such_constant"), DomainError);
}

TEST(Constants, RBranchesHavePositiveImaginaryPart) {
    for (const char* n : {"r1", "r2", "r3", "r4"}) EXPECT_GT(cval(n).embed().im, 0) << n;
}

// properties on seeded random elements

class CycloField : public ::testing::TestWithParam<int> {};

TEST_P(CycloField, FieldAxioms) {
    const int n = GetParam();
    for (int trial = 0; trial < 40; ++trial) {
        const CycloNum a = random_cyclo(n), b = random_cyclo(n), c = random_cyclo(n);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
        const CycloNum d = random_nonzero(n);
        EXPECT_TRUE((d * d.inverse()).is_one());
        EXPECT_EQ(a / d * d, a);
    }
}

TEST_P(CycloField, GaloisIsARingAutomorphism) {
    const int n = GetParam();
    for (int trial = 0; trial < 20; ++trial) {
        const CycloNum a = random_cyclo(n), b = random_cyclo(n);
        for (long k = 1; k < n; ++k) {
            if (std::gcd(k, static_cast<long>(n)) != 1) continue;
            EXPECT_EQ((a * b).galois(k), a.galois(k) * b.galois(k));
            EXPECT_EQ((a + b).galois(k), a.galois(k) + b.galois(k));
        }
    }
}

TEST_P(CycloField, SerializationRoundTrip) {
    const int n = GetParam();
    for (int trial = 0; trial < 40; ++trial) {
        const CycloNum a = random_cyclo(n);
        EXPECT_EQ(CycloNum::parse(a.str()), a) << a.str();
    }
}

TEST_P(CycloField, EmbeddingIsMultiplicative) {
    const int n = GetParam();
    set_working_precision(default_digits);
    for (int trial = 0; trial < 20; ++trial) {
        const CycloNum a = random_cyclo(n), b = random_cyclo(n);
        EXPECT_TRUE(approx_equal((a * b).embed(), a.embed() * b.embed(), Real("1e-40")));
        EXPECT_TRUE(approx_equal(a.conj().embed(), Complex(a.embed().re, -a.embed().im), Real("1e-40")));
    }
}

INSTANTIATE_TEST_SUITE_P(Conductors, CycloField, ::testing::Values(7, 13, 52));
