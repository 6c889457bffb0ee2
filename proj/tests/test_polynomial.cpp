#include <gtest/gtest.h>

#include <random>

#include "wlrec/beta.hpp"
#include "wlrec/polynomial.hpp"

using namespace wlrec;

namespace {

using QPoly = DensePolynomial<Rational>;

Rational q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

QPoly random_poly(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<long> coef(-50, 50);
    std::uniform_int_distribution<long> den(1, 9);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = q(coef(rng), den(rng));
    return QPoly(c);
}

}  // namespace

TEST(Polynomial, AddExamples) {
    EXPECT_EQ(poly_add(QPoly{q(1), q(1)}, QPoly{q(0), q(2)}), (QPoly{q(1), q(3)}));
    const QPoly p{q(4), q(-1, 3), q(7)};
    EXPECT_EQ(poly_add(p, QPoly{}), p);
    const QPoly cancelled = poly_add(QPoly{q(0), q(0), q(1)}, QPoly{q(0), q(0), q(-1)});
    EXPECT_TRUE(cancelled.is_zero());
    EXPECT_TRUE(cancelled.coeffs().empty());
    EXPECT_EQ(cancelled.degree(), -1);
}

TEST(Polynomial, CanonicalConstruction) {
    const QPoly p{q(1), q(2), q(0), q(0)};
    EXPECT_EQ(p.degree(), 1);
    EXPECT_EQ(p.coefficient(5), q(0));
}

TEST(Polynomial, DerivativeExamples) {
    EXPECT_EQ(poly_derivative(QPoly{q(3), q(1)}), QPoly{q(1)});
    EXPECT_TRUE(poly_derivative(QPoly{q(5)}).is_zero());
    EXPECT_EQ(poly_derivative(QPoly{q(0), q(2), q(0), q(1)}), (QPoly{q(2), q(0), q(3)}));
}

TEST(Polynomial, EvalExamples) {
    const QPoly g{q(3), q(1)};
    EXPECT_EQ(poly_eval(g, q(0)), q(3));
    EXPECT_EQ(poly_eval(g, q(1)), q(4));
    EXPECT_EQ(poly_eval(g, q(10)), q(13));
    EXPECT_EQ(poly_eval(QPoly{}, q(10)), q(0));
}

TEST(Polynomial, RecursionStepExamples) {
    EXPECT_EQ(poly_combine_recursion_step(QPoly{q(1)}, QPoly{}, q(3), q(1), q(0)), (QPoly{q(3), q(1)}));
    EXPECT_TRUE(poly_combine_recursion_step(QPoly{}, QPoly{}, q(3), q(1), q(2)).is_zero());
    EXPECT_EQ(poly_combine_recursion_step(QPoly{q(0), q(1)}, QPoly{q(1)}, q(0), q(1), q(1)),
              (QPoly{q(0), q(0), q(1)}));
}

TEST(Polynomial, AddDegreeBoundAndExactness) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const QPoly p = random_poly(rng, 8);
        const QPoly r = random_poly(rng, 8);
        const QPoly sum = poly_add(p, r);
        EXPECT_LE(sum.degree(), std::max(p.degree(), r.degree()));
        if (p.degree() != r.degree()) EXPECT_EQ(sum.degree(), std::max(p.degree(), r.degree()));
        EXPECT_EQ(poly_sub(sum, r), p);
    }
}

TEST(Polynomial, DerivativeIsLinear) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const QPoly p = random_poly(rng, 7);
        const QPoly r = random_poly(rng, 7);
        const Rational a = q(static_cast<long>(rng() % 17) - 8, 3);
        const Rational b = q(static_cast<long>(rng() % 13) - 6, 5);
        const QPoly lhs = poly_derivative(poly_add(poly_scale(p, a), poly_scale(r, b)));
        const QPoly rhs = poly_add(poly_scale(poly_derivative(p), a), poly_scale(poly_derivative(r), b));
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(Polynomial, RecursionStepCommutesWithEvaluation) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const QPoly s1 = random_poly(rng, 6);
        const QPoly s0 = random_poly(rng, 6);
        const Rational a = q(static_cast<long>(rng() % 21), 4);
        const Rational b = q(static_cast<long>(rng() % 9) + 1, 7);
        const Rational c = q(static_cast<long>(rng() % 11) - 5, 2);
        const Rational x = q(static_cast<long>(rng() % 31) - 15, 6);
        const Rational expected =
            (x + a) * poly_eval(s1, x) - b * x * poly_eval(poly_derivative(s1), x) + c * x * poly_eval(s0, x);
        EXPECT_EQ(poly_eval(poly_combine_recursion_step(s1, s0, a, b, c), x), expected);
    }
}

TEST(Polynomial, MultiplicationMatchesEvaluation) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 50; ++trial) {
        const QPoly p = random_poly(rng, 6);
        const QPoly r = random_poly(rng, 6);
        const Rational x = q(static_cast<long>(rng() % 19) - 9, 5);
        EXPECT_EQ(poly_eval(poly_mul(p, r), x), poly_eval(p, x) * poly_eval(r, x));
    }
}

TEST(Polynomial, MixedPrecisionIsRejected) {
    DensePolynomial<BigFloat> low;
    DensePolynomial<BigFloat> high;
    {
        PrecisionScope scope(128);
        low = DensePolynomial<BigFloat>{BigFloat(1L), BigFloat(2L)};
    }
    {
        PrecisionScope scope(256);
        high = DensePolynomial<BigFloat>{BigFloat(3L)};
        EXPECT_THROW(poly_add(low, high), UsageError);
    }
}

TEST(Polynomial, BigFloatArithmetic) {
    PrecisionScope scope(256);
    const DensePolynomial<BigFloat> g{BigFloat(3L), BigFloat(1L)};
    EXPECT_EQ(poly_eval(g, BigFloat(10L)).to_double(), 13.0);
    const BigFloat third = BigFloat(1L) / BigFloat(3L);
    EXPECT_NEAR((third * BigFloat(3L) - BigFloat(1L)).to_double(), 0.0, 1e-70);
}

TEST(Field, FactorialsAndPowers) {
    EXPECT_EQ(factorial<Rational>(6), q(720));
    EXPECT_EQ(rising_factorial<Rational>(q(1, 2), 3), q(15, 8));
    EXPECT_EQ(falling_factorial<Rational>(q(5), 3), q(60));
    EXPECT_EQ(ipow<Rational>(q(2, 3), 3), q(8, 27));
    EXPECT_EQ(ipow<Rational>(q(2, 3), -2), q(9, 4));
    EXPECT_EQ(ipow<Rational>(q(7), 0), q(1));
}

TEST(Beta, ParsesGrammar) {
    EXPECT_EQ(Beta::parse("1/2").exact(), q(1, 2));
    EXPECT_EQ(Beta::parse("0.25").exact(), q(1, 4));
    EXPECT_EQ(Beta::parse("3").exact(), q(3));
    EXPECT_EQ(Beta::parse("2e0").exact(), q(2));
    EXPECT_FALSE(Beta::parse("pi").is_rational());
    EXPECT_FALSE(Beta::parse("e").is_rational());
    EXPECT_NEAR(Beta::parse("5pi").to_double(), 5 * 3.14159265358979323846, 1e-12);
    EXPECT_NEAR(Beta::parse("5*pi").to_double(), 5 * 3.14159265358979323846, 1e-12);
    EXPECT_NEAR(Beta::parse("e").to_double(), 2.71828182845904523536, 1e-15);
    EXPECT_EQ(Beta::parse("5pi"), Beta::parse("5*pi"));
    EXPECT_THROW(Beta::parse("pi").exact(), UnsupportedParameter);
    EXPECT_THROW(Beta::parse("-1"), DomainError);
    EXPECT_THROW(Beta::parse("0"), DomainError);
    EXPECT_THROW(Beta::parse("abc"), Error);
}
