#include "../reference.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace verlinde;
using namespace verlinde::oracle;

namespace {

MatrixFp block_diagonal(std::int64_t p, const std::vector<std::int64_t>& sizes) {
    std::size_t n = 0;
    for (auto s : sizes) n += static_cast<std::size_t>(s);
    MatrixFp u = MatrixFp::identity(p, n);
    std::size_t at = 0;
    for (auto s : sizes) {
        for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(s); ++k) u(at + k + 1, at + k) = 1;
        at += static_cast<std::size_t>(s);
    }
    return u;
}

/// g u g^-1 for an upper-triangular unipotent g with random entries.
MatrixFp conjugate(const MatrixFp& u, std::mt19937_64& rng) {
    const auto p = u.p();
    const std::size_t n = u.rows();
    MatrixFp g = MatrixFp::identity(p, n), ginv = MatrixFp::identity(p, n);
    std::uniform_int_distribution<std::int64_t> d(0, p - 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.set(i, j, d(rng));
    // invert by back substitution: columns of g^-1 solve g x = e_j
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t ii = j; ii-- > 0;) {
            std::int64_t s = 0;
            for (std::size_t k = ii + 1; k <= j; ++k) s += std::int64_t(g(ii, k)) * ginv(k, j);
            ginv.set(ii, j, -s);
        }
    return g * u * ginv;
}

}  // namespace

TEST(MatrixFp, Basics) {
    const auto j = MatrixFp::jordan_block(5, 3);
    EXPECT_EQ(j(1, 0), 1u);
    EXPECT_EQ(j(0, 1), 0u);
    EXPECT_EQ(rank(j - MatrixFp::identity(5, 3)), 2u);
    EXPECT_EQ(kronecker(j, MatrixFp::identity(5, 2)).rows(), 6u);
    MatrixFp m(5, 2, 2);
    m.set(0, 0, -1);
    EXPECT_EQ(m(0, 0), 4u);
    EXPECT_THROW(MatrixFp(5, 2, 3) * MatrixFp(5, 2, 3), invalid_input);
}

TEST(Jordan, RecoversBlockStructureUnderConjugation) {
    std::mt19937_64 rng(41);
    for (std::int64_t p : {3, 5, 7}) {
        const std::vector<std::vector<std::int64_t>> shapes{{1}, {p}, {1, 2, p}, {2, 2, 1}, {p, p - 1, 3 % p + 1}};
        for (const auto& shape : shapes) {
            const auto u = conjugate(block_diagonal(p, shape), rng);
            EXPECT_EQ(jordan_type_of(u), JordanType(p, shape)) << p;
        }
    }
}

TEST(Jordan, RejectsNonUnipotent) {
    MatrixFp u = MatrixFp::identity(3, 4);
    for (std::size_t k = 0; k + 1 < 4; ++k) u(k + 1, k) = 1;  // a block of size 4 > p
    EXPECT_THROW(jordan_type_of(u), invalid_input);
    EXPECT_THROW(JordanType(5, {6}), invalid_input);
}

TEST(Jordan, TensorProductExample) {
    EXPECT_EQ(jordan_tensor(4, 4, 5), JordanType(5, {1, 5, 5, 5}));
    EXPECT_EQ(negligible_quotient(jordan_tensor(4, 4, 5)), VerObj::simple(5, 1));
    EXPECT_EQ(jordan_tensor(2, 2, 3), JordanType(3, {1, 3}));
    EXPECT_EQ(jordan_tensor(1, 1, 2), JordanType(2, {1}));
    for (std::int64_t p : {3, 5, 7})
        for (std::int64_t r = 1; r <= p; ++r)
            for (std::int64_t s = 1; s <= p; ++s) EXPECT_EQ(jordan_tensor(r, s, p).dimension(), r * s);
}

TEST(Jordan, SymmetricPowersAgreeWithSymmetrizedTensorPowers) {
    for (std::int64_t p : {3, 5, 7})
        for (std::int64_t m = 1; m <= std::min<std::int64_t>(p, 4); ++m)
            for (std::int64_t i = 0; i < p; ++i) {
                std::int64_t full = 1;
                for (std::int64_t k = 0; k < i; ++k) full *= m;
                if (full > 2500) continue;
                EXPECT_EQ(jordan_sym(i, m, p), jordan_tensor_power_symmetrized(i, m, p, false))
                    << p << ' ' << m << ' ' << i;
                if (i <= m) {
                    EXPECT_EQ(jordan_ext(i, m, p), jordan_tensor_power_symmetrized(i, m, p, true))
                        << p << ' ' << m << ' ' << i;
                }
            }
}

TEST(Jordan, SquareOfABlockSplits) {
    // S^2 J_m + Wedge^2 J_m = J_m (x) J_m
    for (std::int64_t p : {3, 5, 7, 11})
        for (std::int64_t m = 2; m <= p; ++m)
            EXPECT_EQ(jordan_sym(2, m, p) + jordan_ext(2, m, p), jordan_tensor(m, m, p)) << p << ' ' << m;
}

TEST(Jordan, Dimensions) {
    for (std::int64_t p : {5, 7})
        for (std::int64_t m = 1; m < p; ++m)
            for (std::int64_t i = 0; i < p; ++i) {
                EXPECT_EQ(jordan_sym(i, m, p).dimension(), ref::binom(m + i - 1, i));
                if (i <= m) {
                    EXPECT_EQ(jordan_ext(i, m, p).dimension(), ref::binom(m, i));
                }
            }
}

TEST(Jordan, BudgetAndRangeChecks) {
    EXPECT_THROW(jordan_sym(6, 7, 7, 100), invalid_input);
    EXPECT_THROW(jordan_sym(7, 2, 7), invalid_input);
    EXPECT_THROW(jordan_ext(3, 2, 7), invalid_input);
    EXPECT_THROW(jordan_tensor(6, 1, 5), invalid_input);
}

TEST(Jordan, NegligibleQuotientDropsProjectives) {
    EXPECT_EQ(negligible_quotient(JordanType(5, {1, 3, 3, 5, 5})), VerObj(5, {1, 0, 2, 0}));
    EXPECT_TRUE(negligible_quotient(JordanType(3, {3, 3})).is_zero());
}
