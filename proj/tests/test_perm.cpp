#include "hurwitz/perm.hpp"
#include "hurwitz/sinkov.hpp"

#include <gtest/gtest.h>

using namespace hurwitz;
namespace sk = hurwitz::sinkov;

TEST(Perm, ParseAndCompose) {
    const Perm a = Perm::parse("(1, 2, 3)");
    const Perm b = Perm::parse("(1, 2)");
    EXPECT_EQ((a * b).str(), "(2, 3)");  // left to right: 1 -> 2 -> 1
    EXPECT_TRUE((a * a.inverse()).is_identity());
    EXPECT_EQ(a.order(), 3);
    EXPECT_THROW(Perm::parse("(1, 1)"), ParseError);
    EXPECT_THROW(Perm::parse("(1, 15)"), ParseError);
}

TEST(Perm, SinkovOrders) {
    EXPECT_EQ(sk::s().order(), 2);
    EXPECT_EQ((sk::p(9) * sk::s()).order(), 7);
    EXPECT_EQ(commutator(sk::p(9), sk::s()).order(), 13);
    for (const auto& e : sk::entries()) EXPECT_EQ((sk::p(e.index) * sk::s()).order(), e.ord_ps) << "p" << e.index;
}

TEST(Perm, QAndPFromTheIdentification) {
    EXPECT_EQ(sk::Q(), Perm::parse("(1, 10, 5, 12, 7, 3, 2)(4, 6, 9, 14, 8, 11, 13)"));
    EXPECT_EQ(commutator(sk::derived("x2"), sk::derived("y2")).order(), 6);
}

TEST(Perm, AsdCases) {
    const auto a = asd_stats(sk::s(), sk::p(10));
    EXPECT_EQ(a.cusp_widths, (std::vector<int>{13, 1}));
    EXPECT_EQ(a.e2, 2);
    EXPECT_EQ(a.e3, 2);
    EXPECT_EQ(a.level, 13);
    EXPECT_EQ(a.genus, 0);
    const auto b = asd_stats(sk::s(), sk::p(9));
    EXPECT_EQ(b.cusp_widths, (std::vector<int>{7, 7}));
    EXPECT_EQ(b.level, 7);
    EXPECT_EQ(b.genus, 0);
    EXPECT_THROW(asd_stats(sk::p(9), sk::p(9)), DomainError);
}

TEST(Perm, GenusFormulas) {
    EXPECT_EQ(genus_formula(14, 2, 2, 2), 0);
    EXPECT_EQ(rh_genus(1092, 2, 3, 7), 14);
    EXPECT_EQ(rh_genus(1092, 2, 3, 13), 50);
    const auto w = wohlfahrt(1092, 156, 0, 0);
    EXPECT_EQ(w.chi, 26);
    EXPECT_EQ(w.genus, 14);
}

TEST(Perm, Primitivity) {
    EXPECT_TRUE(primitivity({sk::s(), sk::p(9)}));
    const Perm c = Perm::parse("(1,2,3,4,5,6,7,8,9,10,11,12,13,14)");
    EXPECT_FALSE(primitivity({c}));
    EXPECT_EQ(minimal_block({c}, 0, 7), (std::vector<int>{1, 8}));  // 1-based points
    EXPECT_TRUE(primitivity({Perm::parse("(1,2)"), c}));
}

TEST(Perm, Congruence) {
    EXPECT_FALSE(congruence_test(7, 1092));
    EXPECT_TRUE(congruence_test(13, 1092));
    EXPECT_TRUE(congruence_test(1, 5));
    EXPECT_EQ(principal_index(7), 168);
    EXPECT_EQ(principal_index(13), 1092);
}

TEST(Perm, GroupOrders) {
    EXPECT_EQ(group_order({sk::s(), sk::p(9)}), 1092);
    EXPECT_EQ(enumerate_group({sk::s(), sk::p(9)}).size(), 1092u);
    EXPECT_TRUE(is_transitive({sk::s(), sk::p(9)}));
    mpz_class f14 = 1;
    for (int k = 2; k <= 14; ++k) f14 *= k;
    EXPECT_EQ(group_order({Perm::parse("(1,2)"), Perm::parse("(1,2,3,4,5,6,7,8,9,10,11,12,13,14)")}), f14);
}

// properties

TEST(PermProperty, StabilizerChainAgreesWithEnumeration) {
    for (const auto& e : sk::entries()) {
        const std::vector<Perm> gens = {sk::s(), sk::p(e.index)};
        EXPECT_EQ(group_order(gens), mpz_class(static_cast<unsigned long>(enumerate_group(gens).size()))) << "p" << e.index;
    }
}

TEST(PermProperty, CuspWidthsSumToIndexAndGenusIsIntegral) {
    for (int k : {9, 10, 11, 12, 13, 14, 15, 16}) {
        const auto st = asd_stats(sk::s(), sk::p(k));
        int sum = 0;
        for (int w : st.cusp_widths) sum += w;
        EXPECT_EQ(sum, st.mu) << k;
        EXPECT_EQ(st.genus_q.get_den(), 1) << k;
        EXPECT_GE(st.genus, 0) << k;
    }
}

TEST(PermProperty, InverseAndOrderLaws) {
    for (const auto& e : sk::entries()) {
        const Perm x = sk::p(e.index) * sk::s();
        EXPECT_TRUE(x.pow(x.order()).is_identity());
        EXPECT_EQ(x.inverse().order(), x.order());
        EXPECT_EQ((x * x.inverse()), Perm());
    }
}
