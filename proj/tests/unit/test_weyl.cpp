#include "../reference.hpp"

#include <gtest/gtest.h>

using namespace verlinde;

TEST(WeightA, Validation) {
    const WeightA w(4, {3, 1});
    EXPECT_EQ(w.parts(), (std::vector<std::int64_t>{3, 1, 0}));
    EXPECT_EQ(w.part(4), 0);
    EXPECT_EQ(WeightA::symmetric(3, 2), WeightA(3, {2, 0}));
    EXPECT_THROW(WeightA(1, {}), invalid_input);
    EXPECT_THROW(WeightA(3, {1, 2}), invalid_input);
    EXPECT_THROW(WeightA(3, {1, 1, 1}), invalid_input);
    EXPECT_THROW(WeightA(3, {-1}), invalid_input);
}

TEST(Weyl, QuantumDimension) {
    // adjoint of SL_3
    const auto adj = qweyl_dim(WeightA(3, {2, 1}));
    EXPECT_EQ(adj.at_one(), 8);
    EXPECT_TRUE(adj.is_symmetric());
    EXPECT_EQ(qweyl_dim(WeightA(2, {4})), quantum_int(5));
    for (std::int64_t m = 2; m <= 5; ++m)
        for (std::int64_t i = 0; i <= 6; ++i)
            EXPECT_EQ(qweyl_dim(WeightA::symmetric(m, i)), gauss_binom(i + m - 1, m - 1)) << m << ' ' << i;
}

TEST(Weyl, SuperSign) {
    EXPECT_EQ(super_sign(WeightA(3, {1})), 1);
    EXPECT_EQ(super_sign(WeightA(2, {1})), -1);
    EXPECT_EQ(super_sign(WeightA(4, {1})), -1);
    for (std::int64_t m = 2; m <= 6; ++m)
        for (std::int64_t i = 0; i <= 5; ++i)
            EXPECT_EQ(super_sign(WeightA::symmetric(m, i)), (i * (m - 1)) % 2 ? -1 : 1);
}

TEST(Weyl, FundamentalRepresentationIsLm) {
    EXPECT_EQ(decompose_weyl(WeightA(3, {1, 0}), 7), VerObj::simple(7, 3));
    for (std::int64_t p : {5, 7, 11})
        for (std::int64_t m = 2; m < p; ++m)
            EXPECT_EQ(decompose_weyl(WeightA::symmetric(m, 1), p), VerObj::simple(p, m));
}

TEST(Weyl, SymmetricWeightsGiveSymmetricPowers) {
    for (std::int64_t p : {5, 7, 11})
        for (std::int64_t m = 2; m <= 4; ++m)
            for (std::int64_t i = 0; i + m - 1 < p; ++i)
                EXPECT_EQ(decompose_weyl(WeightA::symmetric(m, i), p), sym_power_simple(i, m, p));
}

TEST(Weyl, ExteriorWeightsGiveExteriorPowers) {
    // omega_k = (1^k) lies in the alcove when m < p
    for (std::int64_t p : {5, 7, 11})
        for (std::int64_t m = 2; m < p; ++m)
            for (std::int64_t k = 0; k < m; ++k) {
                std::vector<std::int64_t> parts(static_cast<std::size_t>(k), 1);
                EXPECT_EQ(decompose_weyl(WeightA(m, parts), p), ext_power_simple(k, m, p)) << p << ' ' << m << ' ' << k;
            }
}

TEST(Weyl, AlcoveIsEnforced) {
    EXPECT_TRUE(alcove_check(WeightA(3, {4}), 7));
    EXPECT_FALSE(alcove_check(WeightA(3, {5}), 7));
    EXPECT_THROW(decompose_weyl(WeightA(3, {5}), 7), invalid_input);
}
