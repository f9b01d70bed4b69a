#include "hurwitz/dump.hpp"
#include "hurwitz/matrep.hpp"
#include "hurwitz/weil.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace hurwitz;
using testing_support::random_nonzero;
using testing_support::random_word;

TEST(Matrep, BuildT) { EXPECT_EQ(build("T"), diag13({7, 11, 8, 6, 2, 5})); }

TEST(Matrep, BuildSEntry) {
    EXPECT_EQ(build("S")(0, 0), -(CycloNum::zeta(13, 12) - CycloNum::zeta(13)) * inv_sqrt13());
}

TEST(Matrep, IdentityAndInverse) {
    EXPECT_EQ(build("identity"), Mat::identity(6));
    EXPECT_EQ(Mat::identity(6).inverse(), Mat::identity(6));
    EXPECT_THROW(build("no_such_matrix"), DomainError);
}

TEST(Matrep, ProjectiveRelations) {
    const Mat& S = build("S");
    const Mat& T = build("T");
    EXPECT_TRUE(proj_eq(S * S, Mat::identity(6)));
    EXPECT_EQ(S * S, -Mat::identity(6));
    EXPECT_TRUE(proj_eq((S * T).pow(3), Mat::identity(6)));
    EXPECT_TRUE(proj_eq(build("x3") * build("y3"), build("Q").pow(3)));
}

TEST(Matrep, StrictRelationsUnderTheLift) {
    const Mat& Q = build("Q");
    const Mat I = Mat::identity(6);
    EXPECT_EQ((Q.pow(3) * paper_P(4)).pow(3), -I);
    EXPECT_EQ((Q * paper_P(2)).pow(3), I);
    EXPECT_EQ((Q.pow(5) * paper_P(2)).pow(2), -I);
    EXPECT_EQ(Q * paper_P(2) * Q.pow(5) * paper_P(2), Q.pow(3));
}

TEST(Matrep, ProjectiveOrders) {
    EXPECT_EQ(proj_order(build("T")), 13);
    EXPECT_EQ(proj_order(build("Q")), 7);
    EXPECT_EQ(proj_order(Mat::identity(6)), 1);
}

TEST(Matrep, OrderBoundFlagsForeignElements) {
    const Mat m = Mat::diag({CycloNum(52, 1), CycloNum::zeta(52)});
    EXPECT_FALSE(proj_order(m).has_value());
    EXPECT_THROW(proj_order_checked(m, "test"), DomainError);
}

TEST(Matrep, Traces) {
    EXPECT_TRUE(trace("S").is_zero());
    EXPECT_EQ(trace("T"), (CycloNum(13, -1) - sqrt13()) * mpq_class(1, 2));
    EXPECT_EQ(trace("identity"), CycloNum(13, 6));
}

TEST(Matrep, Presentations) {
    EXPECT_TRUE(check_presentation(build("x1"), build("y1"), 7, 7).holds);
    EXPECT_TRUE(check_presentation(build("x2"), build("y2"), 7, 6).holds);
    const auto deg = check_presentation(Mat::identity(6), Mat::identity(6), 7, 7);
    EXPECT_TRUE(deg.holds);
    EXPECT_TRUE(deg.degenerate);
}

TEST(Matrep, SmallClosures) {
    EXPECT_EQ(closure({build("T")}, 100).size(), 13u);
    EXPECT_EQ(closure({build("H"), build("T")}, 2000).size(), 78u);
    EXPECT_THROW(closure({}, 10), DomainError);
    EXPECT_TRUE(closure({build("S"), build("T")}, 50).bound_exceeded);
}

TEST(Matrep, PrintedEntryParsing) {
    EXPECT_EQ(parse_entry("z^3-z^10", resolve_constant_symbol), CycloNum::zeta(13, 3) - CycloNum::zeta(13, 10));
    EXPECT_EQ(parse_entry("2 q5", resolve_constant_symbol), cval("q5") * 2);
    EXPECT_THROW(printed_table("no_such_table"), DomainError);
}

TEST(Matrep, MatrixDumpRoundTrip) {
    for (const char* n : {"S", "T", "Q", "H", "S_tilde"}) EXPECT_EQ(parse_matrix_dump(dump_matrix(build(n))), build(n)) << n;
}

// properties

TEST(MatrepProperty, ProjEqIsInvariantUnderScalars) {
    for (int trial = 0; trial < 20; ++trial) {
        const Mat g = random_word(1 + trial % 7);
        const CycloNum l = random_nonzero(13);
        EXPECT_TRUE(proj_eq(g, l * g));
        EXPECT_TRUE(proj_eq(l * g, g));
        EXPECT_EQ(proj_eq(g, build("T")), proj_eq(l * g, build("T")));
    }
}

TEST(MatrepProperty, WordsAreInvertible) {
    for (int trial = 0; trial < 20; ++trial) {
        const Mat g = random_word(1 + trial % 9);
        EXPECT_EQ(g * g.inverse(), Mat::identity(6));
        EXPECT_TRUE(proj_order(g).has_value());
    }
}

TEST(MatrepProperty, TransposeAndGaloisAreCompatible) {
    for (int trial = 0; trial < 10; ++trial) {
        const Mat a = random_word(3), b = random_word(4);
        EXPECT_EQ((a * b).transpose(), b.transpose() * a.transpose());
        EXPECT_EQ((a * b).galois(2), a.galois(2) * b.galois(2));
    }
}

TEST(Weil, WordsEvaluateToTheirClass) {
    const auto& W = SL2Words::instance();
    EXPECT_EQ(W.word.size(), 1092u);
    for (const auto& x : W.order) {
        const SL2 y = SL2Word{W.word.at(x.proj_key())}.evaluate();
        EXPECT_EQ(y.proj_key(), x.proj_key());
    }
}

TEST(Weil, Correspondences) {
    EXPECT_TRUE(proj_eq(rho(-2, -1, 5, 2), build("PQP2")));
    EXPECT_TRUE(proj_eq(rho(0, -7, 2, 0), build("y2")));
    EXPECT_TRUE(proj_eq(rho(1, 0, 0, 1), Mat::identity(6)));
    EXPECT_THROW(rho(1, 1, 1, 1), DomainError);
}
