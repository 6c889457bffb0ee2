#include <gtest/gtest.h>

#include <cmath>

#include "wlrec/hyp.hpp"
#include "wlrec/reference.hpp"

using namespace wlrec;

namespace {

EnsembleParams make(long n, long alpha, const char* beta) { return EnsembleParams{n, alpha, Beta::parse(beta)}; }

Rational q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

TEST(Hyp, ScalarCase) {
    const auto h = hyp1f1_matrix<Rational>(make(2, 1, "2"));
    EXPECT_EQ(h.poly, (DensePolynomial<Rational>{q(1), q(1, 3)}));
    EXPECT_EQ(h.prefactor, q(1, 3));
}

TEST(Hyp, UnitAtOriginAndDegree) {
    for (long n = 1; n <= 6; ++n) {
        for (long alpha = 0; alpha <= 5; ++alpha) {
            for (const char* beta : {"1/3", "1", "2", "5/2"}) {
                const auto h = hyp1f1_matrix<Rational>(make(n, alpha, beta));
                EXPECT_EQ(h(q(0)), q(1));
                EXPECT_EQ(h.poly.degree(), alpha * (n - 1));
            }
        }
    }
}

TEST(Hyp, ReducesToKummerForAlphaOne) {
    for (const char* beta : {"1", "2", "4"}) {
        for (long n = 1; n <= 6; ++n) {
            const auto p = make(n, 1, beta);
            const Rational c = q(2) / p.beta.exact() + q(2);
            EXPECT_EQ(hyp1f1_matrix<Rational>(p).poly, kummer_terminating(n - 1, c)) << p.to_string();
        }
    }
}

TEST(Hyp, KummerSeries) {
    EXPECT_EQ(kummer_terminating<Rational>(1, q(3)), (DensePolynomial<Rational>{q(1), q(1, 3)}));
    // 1F1(-2; 2; -x) = 1 + x + x^2/6
    EXPECT_EQ(kummer_terminating<Rational>(2, q(2)), (DensePolynomial<Rational>{q(1), q(1), q(1, 6)}));
    EXPECT_EQ(kummer_terminating<Rational>(0, q(5)), DensePolynomial<Rational>{q(1)});
}

TEST(Hyp, PublishedPolynomials) {
    for (const auto& ref : reference_hyp1f1()) {
        const auto h = hyp1f1_matrix<Rational>(make(ref.n, ref.alpha, ref.beta.c_str()));
        ASSERT_EQ(h.poly.size(), ref.coeffs.size());
        for (std::size_t k = 0; k < ref.coeffs.size(); ++k) EXPECT_EQ(h.poly.coeffs()[k], ref.prefactor * ref.coeffs[k]);
    }
}

TEST(Hyp, IrrationalBetaPolynomial) {
    PrecisionScope scope(256);
    const auto h = hyp1f1_matrix<BigFloat>(make(3, 2, "5pi"));
    const auto expected = reference_hyp1f1_beta_5pi();
    ASSERT_EQ(h.poly.size(), expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) {
        EXPECT_LT((abs(h.poly.coeffs()[k] - expected[k]) / expected[k]).to_double(), 1e-12);
    }
}

TEST(Hyp, PublishedValues) {
    for (const auto& ref : reference_hyp1f1_values()) {
        const auto p = make(ref.n, ref.alpha, ref.beta.c_str());
        const double got = with_field(default_field(p), [&]<class F>() { return hyp1f1_matrix<F>(p).eval(ref.x); });
        EXPECT_NEAR(got / ref.value, 1.0, 1e-4) << p.to_string();
    }
}

TEST(Hyp, FloatAndExactAgree) {
    const auto p = make(5, 3, "2");
    const auto exact = hyp1f1_matrix<Rational>(p);
    PrecisionScope scope(256);
    const auto approx = hyp1f1_matrix<BigFloat>(p);
    EXPECT_NEAR(approx.eval(8.0) / exact.eval(8.0), 1.0, 1e-15);
}
