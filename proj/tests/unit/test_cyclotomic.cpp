#include "../reference.hpp"

#include <gtest/gtest.h>

#include <complex>
#include <random>

using namespace verlinde;

namespace {

LaurentPoly random_integral(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3), lo(-20, 5), len(0, 12);
    LaurentPoly f;
    const int start = lo(rng);
    for (int k = 0, n = len(rng); k < n; ++k) f.add_to(start + k, Rational(coeff(rng)));
    return f;
}

std::complex<double> evaluate(const Cyclotomic& x, std::int64_t k = 1) {
    const double pi = std::acos(-1.0);
    std::complex<double> out = 0;
    for (std::size_t i = 0; i < x.coords().size(); ++i)
        out += x.coords()[i].convert_to<double>() * std::polar(1.0, pi * double(k) * double(i) / double(x.p()));
    return out;
}

}  // namespace

TEST(Cyclotomic, PowersOfQReduce) {
    for (std::int64_t p : {3, 5, 7, 11}) {
        EXPECT_EQ(Cyclotomic::q_power(p, p), -Cyclotomic::constant(p, 1));
        EXPECT_EQ(Cyclotomic::q_power(p, 2 * p), Cyclotomic::constant(p, 1));
        EXPECT_EQ(Cyclotomic::q_power(p, 1) * Cyclotomic::q_power(p, -1), Cyclotomic::constant(p, 1));
        // Phi_{2p}(q) = sum (-q)^k = 0
        Cyclotomic phi(p);
        for (std::int64_t k = 0; k < p; ++k) phi.add_q_power(k, k % 2 ? -1 : 1);
        EXPECT_TRUE(phi.is_zero()) << p;
    }
}

TEST(Cyclotomic, KnownValuesAtPFive) {
    // q + q^-1 is the golden ratio at p = 5
    const auto phi = to_cyclotomic(quantum_int(2), 5);
    EXPECT_EQ(phi * phi, phi + Cyclotomic::constant(5, 1));
    EXPECT_EQ(to_cyclotomic(quantum_int(5), 5), Cyclotomic(5));
    EXPECT_EQ(to_cyclotomic(quantum_int(4), 5), to_cyclotomic(quantum_int(1), 5));
}

TEST(Cyclotomic, ToCyclotomicIsARingHomomorphism) {
    std::mt19937_64 rng(5);
    for (std::int64_t p : {3, 5, 7, 11, 13})
        for (int t = 0; t < 60; ++t) {
            const auto f = random_integral(rng), g = random_integral(rng);
            EXPECT_EQ(to_cyclotomic(f * g, p), to_cyclotomic(f, p) * to_cyclotomic(g, p));
            EXPECT_EQ(to_cyclotomic(f + g, p), to_cyclotomic(f, p) + to_cyclotomic(g, p));
        }
}

TEST(Cyclotomic, AgreesWithComplexEvaluation) {
    std::mt19937_64 rng(9);
    const double pi = std::acos(-1.0);
    for (std::int64_t p : {5, 7, 11}) {
        for (int t = 0; t < 30; ++t) {
            const auto f = random_integral(rng);
            std::complex<double> direct = 0;
            for (const auto& [j, c] : f.terms())
                direct += c.convert_to<double>() * std::polar(1.0, pi * double(j) / double(p));
            EXPECT_NEAR(std::abs(direct - evaluate(to_cyclotomic(f, p))), 0.0, 1e-9);
        }
    }
}

TEST(Cyclotomic, GaloisMapsAreAutomorphisms) {
    std::mt19937_64 rng(13);
    for (std::int64_t p : {5, 7, 11})
        for (std::int64_t k = 1; k < 2 * p; k += 2) {
            if (k % p == 0) continue;
            for (int t = 0; t < 10; ++t) {
                const auto a = to_cyclotomic(random_integral(rng), p), b = to_cyclotomic(random_integral(rng), p);
                EXPECT_EQ(galois(a * b, k), galois(a, k) * galois(b, k));
                EXPECT_EQ(galois(a + b, k), galois(a, k) + galois(b, k));
                EXPECT_NEAR(std::abs(evaluate(galois(a, k)) - evaluate(a, k)), 0.0, 1e-9);
            }
        }
    EXPECT_THROW(galois(Cyclotomic(5), 2), invalid_input);
    EXPECT_THROW(galois(Cyclotomic(5), 5), invalid_input);
}

TEST(Cyclotomic, RealTraceOfConstants) {
    for (std::int64_t p : {3, 5, 7, 11}) {
        EXPECT_EQ(real_trace(Cyclotomic::constant(p, 1)), Cyclotomic::constant(p, (p - 1) / 2));
        // Tr(q^r + q^-r) = (-1)^{r-1}
        for (std::int64_t r = 1; r < p; ++r)
            EXPECT_EQ(real_trace(to_cyclotomic(LaurentPoly::monomial(r) + LaurentPoly::monomial(-r), p)),
                      Cyclotomic::constant(p, r % 2 ? 1 : -1));
    }
    EXPECT_THROW(real_trace(Cyclotomic::q_power(5, 1)), invalid_input);
}

TEST(Cyclotomic, RejectsBadInput) {
    EXPECT_THROW(to_cyclotomic(LaurentPoly(Rational(1, 2)), 5), invalid_input);
    EXPECT_THROW(Cyclotomic(4), invalid_input);
    EXPECT_THROW(Cyclotomic(5) + Cyclotomic(7), invalid_input);
}
