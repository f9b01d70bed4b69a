#include "hurwitz/quaternion.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace hurwitz;

namespace {

Quat random_quat() {
    const CycloNum e = eta();
    auto coef = [&] {
        return K(testing_support::small(-3, 3)) + e * testing_support::small(-3, 3) + e * e * testing_support::small(-3, 3);
    };
    return Quat(coef(), coef(), coef(), coef());
}

}  // namespace

TEST(Quaternion, BasicRelations) {
    const Quat i = Quat::i(), j = Quat::j();
    EXPECT_EQ(j * i, -(i * j));
    EXPECT_EQ(i * i, Quat::scalar(eta()));
    EXPECT_TRUE(Quat::one().norm().is_one());
}

TEST(Quaternion, ElkiesGenerators) {
    const auto r = check_elkies();
    EXPECT_TRUE(r.g2_sq);
    EXPECT_TRUE(r.g3_cube);
    EXPECT_TRUE(r.g7_seventh);
    EXPECT_TRUE(r.g2_eq_g7g3);
    EXPECT_TRUE(elkies_generators().g3.norm().is_one());
    EXPECT_EQ(r.order_g2, 4);
    EXPECT_EQ(r.order_g3, 6);
    EXPECT_EQ(r.order_g7, 14);
}

TEST(Quaternion, SplittingOfThirteen) {
    const auto p = verify_prime_split();
    EXPECT_TRUE(p.product_is_13);
    EXPECT_TRUE(p.unit_part);
    EXPECT_TRUE(p.three_primes);
}

TEST(Quaternion, NormsAgainstTheMinimalPolynomial) {
    EXPECT_EQ(normK(eta()), 1);
    EXPECT_EQ(norm_linear_via_minpoly(1, 0), 1);
    EXPECT_EQ(abs(normK(eta() * 2 - K(1))), 13);
    for (long c = -3; c <= 3; ++c)
        for (long d = -3; d <= 3; ++d) EXPECT_EQ(normK(eta() * c + K(d)), norm_linear_via_minpoly(c, d)) << c << " " << d;
}

TEST(Quaternion, OrderIsMaximal) {
    const auto r = order_report();
    EXPECT_EQ(r.rank, 12u);
    EXPECT_TRUE(r.maximal);
    EXPECT_TRUE(r.contains_g2 && r.contains_g3 && r.contains_g7);
}

TEST(Quaternion, RealPlaces) {
    int ramified = 0;
    for (const auto& pl : real_places()) ramified += pl.ramified;
    EXPECT_EQ(ramified, 2);
}

// properties

TEST(QuaternionProperty, NormIsMultiplicative) {
    for (int t = 0; t < 25; ++t) {
        const Quat x = random_quat(), y = random_quat();
        EXPECT_EQ((x * y).norm(), x.norm() * y.norm());
    }
}

TEST(QuaternionProperty, ConjugationIsAnAntiInvolution) {
    for (int t = 0; t < 25; ++t) {
        const Quat x = random_quat(), y = random_quat();
        EXPECT_EQ(x.conj().conj(), x);
        EXPECT_EQ((x * y).conj(), y.conj() * x.conj());
        EXPECT_EQ(x * x.conj(), Quat::scalar(x.norm()));
    }
}

TEST(QuaternionProperty, Associativity) {
    for (int t = 0; t < 25; ++t) {
        const Quat x = random_quat(), y = random_quat(), z = random_quat();
        EXPECT_EQ((x * y) * z, x * (y * z));
    }
}
