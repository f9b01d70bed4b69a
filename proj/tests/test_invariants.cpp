#include "hurwitz/codes.hpp"
#include "hurwitz/forms.hpp"
#include "hurwitz/induced.hpp"
#include "hurwitz/invariants.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace hurwitz;
using testing_support::random_form;
using testing_support::random_word;

TEST(Forms, A0HasThreeTerms) {
    EXPECT_EQ(build_form("A0").size(), 3u);
    EXPECT_THROW(build_form("no_such_form"), DomainError);
}

TEST(Forms, StExpansionOfA0) {
    const auto& a = A_forms();
    for (int nu = 0; nu < 13; ++nu) EXPECT_EQ(sqrt13() * act(detail::ST(nu), a[0]), theta_combination(a, nu)) << nu;
}

TEST(Forms, QuarticIsInvariant) {
    const MultiPoly& L = L_form();
    EXPECT_EQ(act(build("S"), L), L);
    EXPECT_EQ(act(build("T"), L), L);
    EXPECT_EQ(L, L_expanded());
}

TEST(Forms, A0SquaredFixedByTheOrder78Subgroup) {
    const MultiPoly a = A_forms()[0] * A_forms()[0];
    EXPECT_EQ(act(build("H"), a), a);
    EXPECT_EQ(act(build("T"), a), a);
}

TEST(Induced, SevenDimensionalMatchesPrintedTables) {
    EXPECT_EQ(derived_S_tilde(), build("S_tilde"));
    EXPECT_EQ(derived_T_tilde(), build("T_tilde"));
}

TEST(Induced, FourteenDimensionalTraces) {
    EXPECT_TRUE(derived_S_hat().trace().is_zero());
    EXPECT_EQ(derived_T_hat().trace(), CycloNum(13, 1));
    EXPECT_EQ((derived_S_hat() * derived_T_hat()).trace(), CycloNum(13, -2));
}

TEST(Induced, OutOfSpanIsRejected) {
    const MultiPoly z1 = variables(6, 13)[0];
    EXPECT_FALSE(A_basis().contains(z1 * z1 * z1));
    EXPECT_THROW(A_basis().coords(7 * (z1 * variables(6, 13)[1])), DomainError);
    EXPECT_THROW(FormBasis({A_forms()[0], A_forms()[0]}), DomainError);
}

// properties

TEST(InvariantsProperty, ActionIsAnAntiHomomorphism) {
    for (int t = 0; t < 8; ++t) {
        const Mat g = random_word(2 + t % 3), h = random_word(1 + t % 4);
        const MultiPoly f = random_form(2 + t % 3);
        EXPECT_EQ(act(g * h, f), act(h, act(g, f)));
    }
}

TEST(InvariantsProperty, ActionIsARingMap) {
    for (int t = 0; t < 8; ++t) {
        const Mat g = random_word(3);
        const MultiPoly f = random_form(2), h = random_form(3);
        EXPECT_EQ(act(g, f * h), act(g, f) * act(g, h));
        EXPECT_EQ(act(g, f + f), 2 * act(g, f));
    }
}

TEST(InvariantsProperty, InducedMatricesAreMultiplicative) {
    for (int t = 0; t < 6; ++t) {
        const Mat g = random_word(2 + t), h = random_word(3);
        EXPECT_EQ(induced_matrix(g * h, A_basis()), induced_matrix(g, A_basis()) * induced_matrix(h, A_basis()));
    }
}

TEST(InvariantsProperty, CoordinatesRebuildRandomCombinations) {
    for (int t = 0; t < 10; ++t) {
        MultiPoly h(6, 13);
        std::vector<CycloNum> c;
        for (int i = 0; i < 7; ++i) {
            c.push_back(testing_support::random_cyclo(13));
            h += c.back() * A_forms()[i];
        }
        EXPECT_EQ(A_basis().coords(h), c);
    }
}

TEST(Codes, DualAndDimensions) {
    const Code13 c(2, {{1, 5}});
    EXPECT_EQ(c.dimension(), 1);
    EXPECT_TRUE(c.self_orthogonal());
    EXPECT_EQ(c.dual(), c);
    EXPECT_EQ(Code13::zero(3).dual().dimension(), 3);
    EXPECT_EQ(lee_class(12), 1);
    EXPECT_EQ(lee_class(7), 6);
}

TEST(Codes, MacWilliamsForSpan15) {
    const auto r = macwilliams_check(Code13(2, {{1, 5}}), build("S_tilde"), sqrt13());
    EXPECT_TRUE(r.identity);
    EXPECT_TRUE(r.constant.is_one());
    EXPECT_TRUE(r.constant_matches);
    EXPECT_TRUE(r.double_transform);
}

TEST(Codes, NonSelfOrthogonalIsRejected) {
    EXPECT_THROW(macwilliams_check(Code13(2, {{1, 1}}), build("S_tilde"), sqrt13()), DomainError);
}

TEST(CodesProperty, DualOfDualAndDimensionCount) {
    for (int t = 0; t < 20; ++t) {
        const int n = 2 + t % 4;
        std::vector<std::vector<int>> gens;
        for (int g = 0; g < 1 + t % 2; ++g) {
            std::vector<int> v(n);
            for (auto& x : v) x = static_cast<int>(testing_support::small(0, 12));
            gens.push_back(v);
        }
        const Code13 c(n, gens);
        EXPECT_EQ(c.dual().dimension(), n - c.dimension());
        EXPECT_EQ(c.dual().dual(), c);
        const Code13 d = c.dual();
        for (const auto& a : c.basis())
            for (const auto& b : d.basis()) EXPECT_EQ(Code13::dot(a, b), 0);
    }
}
