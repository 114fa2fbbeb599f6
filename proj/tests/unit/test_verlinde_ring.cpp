#include "../reference.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace verlinde;

namespace {

VerObj L(std::int64_t p, std::int64_t r) { return VerObj::simple(p, r); }

VerObj random_virtual(std::int64_t p, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> d(-3, 3);
    VerObj x(p);
    for (std::int64_t r = 1; r < p; ++r) x[r] = d(rng);
    return x;
}

}  // namespace

TEST(VerObj, ConstructionAndIndexing) {
    const VerObj x(5, {1, 0, 2, 0});
    EXPECT_EQ(x[1], 1);
    EXPECT_EQ(x[3], 2);
    EXPECT_EQ(x.length(), 3);
    EXPECT_TRUE(x.is_effective());
    EXPECT_FALSE((L(5, 1) - L(5, 2)).is_effective());
    EXPECT_THROW(VerObj(5, {1, 2}), invalid_input);
    EXPECT_THROW(VerObj(6), invalid_input);
    EXPECT_THROW(L(5, 5), invalid_input);
    EXPECT_THROW(L(5, 0), invalid_input);
    EXPECT_THROW(L(5, 1) + L(7, 1), invalid_input);
}

TEST(Fusion, SmallExamples) {
    EXPECT_EQ(fuse(L(3, 2), L(3, 2)), L(3, 1));
    EXPECT_EQ(fuse(L(2, 1), L(2, 1)), L(2, 1));
    EXPECT_EQ(fuse(L(5, 2), L(5, 2)), L(5, 1) + L(5, 3));
    EXPECT_EQ(fuse(L(5, 3), L(5, 3)), L(5, 1) + L(5, 3));
    EXPECT_EQ(fuse(L(7, 3), L(7, 4)), L(7, 2) + L(7, 4) + L(7, 6));
    // L_{p-1} is invertible and swaps L_r with L_{p-r}
    for (std::int64_t p : {3, 5, 7, 11})
        for (std::int64_t r = 1; r < p; ++r) EXPECT_EQ(fuse(L(p, p - 1), L(p, r)), L(p, p - r));
}

TEST(Fusion, RingAxioms) {
    std::mt19937_64 rng(1);
    for (std::int64_t p : {3, 5, 7, 11})
        for (int t = 0; t < 40; ++t) {
            const auto a = random_virtual(p, rng), b = random_virtual(p, rng), c = random_virtual(p, rng);
            EXPECT_EQ(fuse(a, b), fuse(b, a));
            EXPECT_EQ(fuse(fuse(a, b), c), fuse(a, fuse(b, c)));
            EXPECT_EQ(fuse(a, b + c), fuse(a, b) + fuse(a, c));
            EXPECT_EQ(fuse(VerObj::unit(p), a), a);
        }
}

TEST(Fusion, MatchesJordanBlocksOfTensorProducts) {
    for (std::int64_t p : {2, 3, 5, 7})
        for (std::int64_t r = 1; r < p; ++r)
            for (std::int64_t s = 1; s < p; ++s)
                EXPECT_EQ(oracle::negligible_quotient(oracle::jordan_tensor(r, s, p)), fuse(L(p, r), L(p, s)))
                    << p << ' ' << r << ' ' << s;
}

TEST(Fusion, PowersAndParity) {
    EXPECT_EQ(fuse_power(L(5, 2), 0), L(5, 1));
    EXPECT_EQ(fuse_power(L(5, 2), 2), L(5, 1) + L(5, 3));
    const auto split = parity_split(VerObj(7, {1, 2, 3, 4, 5, 6}));
    EXPECT_EQ(split.plus, VerObj(7, {1, 0, 3, 0, 5, 0}));
    EXPECT_EQ(split.minus, VerObj(7, {0, 2, 0, 4, 0, 6}));
}

TEST(Characters, DimensionsOfSimples) {
    // FPdim(L_2) = q + q^-1, SFPdim(L_2) = -(q + q^-1)
    const auto two = to_cyclotomic(quantum_int(2), 5);
    EXPECT_EQ(fpdim(L(5, 2)), two);
    EXPECT_EQ(sfpdim(L(5, 2)), -two);
    EXPECT_EQ(fpdim(L(5, 4)), Cyclotomic::constant(5, 1));
    EXPECT_EQ(sfpdim(L(5, 4)), Cyclotomic::constant(5, -1));
    EXPECT_EQ(fpdim(L(2, 1)), Cyclotomic::constant(2, 1));
    EXPECT_EQ(sfpdim(L(2, 1)), Cyclotomic::constant(2, 1));
}

TEST(Characters, AreRingHomomorphisms) {
    std::mt19937_64 rng(2);
    for (std::int64_t p : {3, 5, 7, 11})
        for (int t = 0; t < 20; ++t) {
            const auto a = random_virtual(p, rng), b = random_virtual(p, rng);
            for (std::int64_t j = 1; j < p; ++j) {
                EXPECT_EQ(char_chi(j, fuse(a, b)), char_chi(j, a) * char_chi(j, b));
                EXPECT_EQ(char_chi(j, a + b), char_chi(j, a) + char_chi(j, b));
            }
            EXPECT_EQ(char_chi(1, VerObj::unit(p)), Cyclotomic::constant(p, 1));
        }
}

TEST(Characters, GaloisRelations) {
    for (std::int64_t p : {3, 5, 7, 11, 13})
        for (std::int64_t s = 0; 2 * s + 1 <= p - 2; ++s)
            for (std::int64_t r = 1; r < p; ++r) {
                EXPECT_EQ(char_chi(2 * s + 1, L(p, r)), galois(fpdim(L(p, r)), 2 * s + 1));
                EXPECT_EQ(char_chi(p - 2 * s - 1, L(p, r)), galois(sfpdim(L(p, r)), 2 * s + 1));
            }
}

TEST(Characters, RepresentativesMapToCharacters) {
    std::mt19937_64 rng(4);
    for (std::int64_t p : {3, 5, 7, 11})
        for (int t = 0; t < 20; ++t) {
            const auto x = random_virtual(p, rng);
            EXPECT_EQ(to_cyclotomic(fpdim_rep(x), p), fpdim(x));
            EXPECT_EQ(to_cyclotomic(sfpdim_rep(x), p), sfpdim(x));
        }
}

TEST(Characters, DimensionModP) {
    EXPECT_EQ(dim_modp(L(5, 3)), 3);
    EXPECT_EQ(dim_modp(VerObj(5, {1, 1, 1, 1})), 0);
    EXPECT_EQ(dim_modp(L(5, 1) - L(5, 2)), 4);
    // dim of J_r (x) J_s is rs; the negligible part has dimension divisible by p
    for (std::int64_t p : {3, 5, 7})
        for (std::int64_t r = 1; r < p; ++r)
            for (std::int64_t s = 1; s < p; ++s) EXPECT_EQ(dim_modp(fuse(L(p, r), L(p, s))), (r * s) % p);
}

TEST(Characters, ArePairwiseDistinct) {
    for (std::int64_t p : {3, 5, 7, 11, 13})
        for (std::int64_t j = 1; j < p; ++j)
            for (std::int64_t k = j + 1; k < p; ++k) {
                bool differ = false;
                for (std::int64_t r = 1; r < p && !differ; ++r) differ = char_chi(j, L(p, r)) != char_chi(k, L(p, r));
                EXPECT_TRUE(differ) << p << ' ' << j << ' ' << k;
            }
}
