#include <gtest/gtest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>

#include "wlrec/density.hpp"
#include "wlrec/reference.hpp"

using namespace wlrec;

namespace {

EnsembleParams make(long n, long alpha, const char* beta) { return EnsembleParams{n, alpha, Beta::parse(beta)}; }

Rational q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

template <class Fn>
double integrate(Fn f, double a, double b) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-14);
}

template <class Fn>
double integrate_half_line(Fn f) {
    boost::math::quadrature::exp_sinh<double> rule;
    // The density underflows first; keep inf * 0 out of the integrand.
    const auto guarded = [&](double x) {
        const double v = f(x);
        return std::isnan(v) ? 0.0 : v;
    };
    return rule.integrate(guarded, 0.0, std::numeric_limits<double>::infinity(), 1e-13);
}

}  // namespace

TEST(Density, SmallestCase) {
    const auto d = ClosedFormDensity<Rational>::build(make(2, 1, "2"));
    ASSERT_EQ(d.kappa().size(), 2u);
    EXPECT_EQ(d.kappa_at(1), q(3));
    EXPECT_EQ(d.kappa_at(2), q(1));
    EXPECT_EQ(d.rate(), q(2));
    EXPECT_EQ(d.eval(0.0), 0.0);
    EXPECT_NEAR(d.eval(1.0), 4.0 * std::exp(-2.0), 1e-15);
    EXPECT_NEAR(d.eval(1.0), 0.5413, 5e-5);
    EXPECT_THROW(d.eval(-0.1), DomainError);
    EXPECT_THROW(d.cdf(-0.1), DomainError);
}

TEST(Density, PureExponentialWhenAlphaZero) {
    const auto d = ClosedFormDensity<Rational>::build(make(4, 0, "3"));
    ASSERT_EQ(d.kappa().size(), 1u);
    EXPECT_EQ(d.kappa_at(0), q(6));
    EXPECT_EQ(d.rate(), q(6));
    EXPECT_NEAR(d.eval(0.3), 6.0 * std::exp(-1.8), 1e-14);
}

TEST(Density, PublishedUnrestrictedRows) {
    for (const auto& ref : reference_unrestricted()) {
        const auto d = ClosedFormDensity<Rational>::build(make(ref.n, ref.alpha, ref.beta.c_str()));
        ASSERT_EQ(d.kappa().size(), ref.coeffs.size());
        for (std::size_t k = 0; k < ref.coeffs.size(); ++k) EXPECT_EQ(d.kappa()[k], ref.prefactor * ref.coeffs[k]);
        EXPECT_EQ(d.total_mass(), q(1));
    }
}

TEST(Density, IrrationalBetaRow) {
    PrecisionScope scope(256);
    const auto d = ClosedFormDensity<BigFloat>::build(make(3, 2, "e"));
    const auto expected = reference_kappa_beta_e();
    ASSERT_EQ(d.kappa().size(), expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) {
        EXPECT_LT((abs(d.kappa()[k] - expected[k]) / expected[k]).to_double(), 1e-12);
    }
    EXPECT_LT(abs(d.total_mass() - BigFloat(1L)).to_double(), 1e-60);
}

TEST(Density, PublishedPolynomialAtOne) {
    const auto d = ClosedFormDensity<Rational>::build(make(3, 3, "4"));
    const double expected = 16.0 / 1575.0 * std::exp(-6.0) * (4 + 84 + 735 + 3360 + 8400 + 11340 + 6615);
    EXPECT_NEAR(d.eval(1.0) / expected, 1.0, 1e-14);
}

TEST(Density, CdfLimitsAndMedian) {
    const auto d = ClosedFormDensity<Rational>::build(make(2, 1, "2"));
    EXPECT_EQ(d.cdf(0.0), 0.0);
    EXPECT_GT(d.cdf(40.0), 1.0 - 1e-12);
    double lo = 0.0;
    double hi = 10.0;
    for (int i = 0; i < 100; ++i) {
        const double mid = 0.5 * (lo + hi);
        (d.cdf(mid) < 0.5 ? lo : hi) = mid;
    }
    const double median = 0.5 * (lo + hi);
    EXPECT_NEAR(integrate([&](double x) { return d.eval(x); }, 0.0, median), 0.5, 1e-10);
    EXPECT_NEAR(d.cdf(median) + d.survival(median), 1.0, 1e-15);
}

TEST(Density, CdfDerivativeIsDensity) {
    for (const auto& p : {make(2, 1, "2"), make(5, 2, "2"), make(4, 3, "1/2"), make(3, 4, "3")}) {
        const auto d = ClosedFormDensity<Rational>::build(p);
        const double h = 1e-5;
        for (int k = 1; k <= 30; ++k) {
            const double x = 0.1 * k;
            const double numeric = (d.cdf(x + h) - d.cdf(x - h)) / (2 * h);
            EXPECT_NEAR(numeric, d.eval(x), 1e-6) << p.to_string() << " x=" << x;
        }
    }
}

TEST(Density, LogEvalMatchesEval) {
    const auto d = ClosedFormDensity<Rational>::build(make(5, 2, "2"));
    EXPECT_EQ(d.log_eval(0.0), -std::numeric_limits<double>::infinity());
    for (double x : {0.05, 0.4, 1.3, 4.0}) EXPECT_NEAR(d.log_eval(x), std::log(d.eval(x)), 1e-12);
}

TEST(Density, Moments) {
    const auto d = ClosedFormDensity<Rational>::build(make(2, 1, "2"));
    EXPECT_EQ(moment_unrestricted(d, 0), q(1));
    EXPECT_EQ(moment_unrestricted(d, 1), q(9, 8));
    EXPECT_NEAR(integrate_half_line([&](double x) { return x * d.eval(x); }), 9.0 / 8.0, 1e-10);
    EXPECT_EQ(moment_unrestricted(ClosedFormDensity<Rational>::build(make(1, 2, "2")), 1), q(3));
    EXPECT_THROW(moment_unrestricted(d, -2), DomainError);
    EXPECT_EQ(moment_unrestricted(d, -1), q(7, 4));
}

TEST(Density, MomentsMatchQuadrature) {
    for (const auto& p : {make(5, 2, "2"), make(3, 3, "4"), make(4, 3, "1/2")}) {
        const auto d = ClosedFormDensity<Rational>::build(p);
        for (long eta = 1; eta <= 3; ++eta) {
            const double quad = integrate_half_line([&](double x) { return std::pow(x, eta) * d.eval(x); });
            EXPECT_NEAR(moment_unrestricted(d, eta).get_d() / quad, 1.0, 1e-10) << p.to_string() << " eta=" << eta;
        }
        PrecisionScope scope(128);
        const double half = moment_unrestricted_real(d, BigFloat(0.5)).to_double();
        EXPECT_NEAR(half / integrate_half_line([&](double x) { return std::sqrt(x) * d.eval(x); }), 1.0, 1e-10);
        EXPECT_NEAR(moment_unrestricted_real(d, BigFloat(2L)).to_double(), moment_unrestricted(d, 2).get_d(), 1e-12);
    }
}

TEST(FixedTrace, PublishedRows) {
    for (const auto& ref : reference_fixed_trace()) {
        const auto d = FixedTraceDensity<Rational>::build(make(ref.n, ref.alpha, ref.beta.c_str()));
        const auto reduced = d.reduced_polynomial();
        ASSERT_EQ(reduced.size(), ref.coeffs.size());
        for (std::size_t k = 0; k < ref.coeffs.size(); ++k) EXPECT_EQ(reduced.coeffs()[k], ref.prefactor * ref.coeffs[k]);
    }
    EXPECT_EQ(FixedTraceDensity<Rational>::build(make(5, 2, "2")).reduced_exponent(), q(23));
    EXPECT_EQ(FixedTraceDensity<Rational>::build(make(3, 4, "1/5")).reduced_exponent(), q(8, 5));
}

TEST(FixedTrace, IrrationalBetaRow) {
    PrecisionScope scope(256);
    const auto d = FixedTraceDensity<BigFloat>::build(make(3, 2, "pi"));
    const auto expected = reference_fixed_trace_beta_pi();
    const auto reduced = d.reduced_polynomial();
    ASSERT_EQ(reduced.size(), expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) {
        EXPECT_LT((abs(reduced.coeffs()[k] - expected[k]) / abs(expected[k])).to_double(), 1e-12);
    }
    const BigFloat three_pi_plus_one = BigFloat(3L) * const_pi() + BigFloat(1L);
    EXPECT_LT(abs(d.reduced_exponent() - three_pi_plus_one).to_double(), 1e-60);
}

TEST(FixedTrace, Support) {
    const auto d = FixedTraceDensity<Rational>::build(make(5, 2, "2"));
    EXPECT_EQ(d.eval(0.2), 0.0);
    EXPECT_EQ(d.eval(0.25), 0.0);
    EXPECT_EQ(d.eval(3.0), 0.0);
    for (int k = 0; k < 200; ++k) EXPECT_GE(d.eval(0.001 * k), 0.0);
    EXPECT_EQ(d.cdf(0.2), 1.0);
    EXPECT_EQ(d.cdf(0.0), 0.0);
}

TEST(FixedTrace, ExactEvaluationAgrees) {
    const auto d = FixedTraceDensity<Rational>::build(make(5, 2, "2"));
    for (int k = 1; k < 20; ++k) {
        const Rational x = q(k, 100);
        EXPECT_NEAR(d.eval_exact(x).get_d() / d.eval(x.get_d()), 1.0, 1e-13);
    }
}

TEST(FixedTrace, Normalization) {
    for (const auto& p : {make(4, 3, "1"), make(5, 2, "2"), make(3, 4, "1/5"), make(2, 1, "3")}) {
        const auto d = FixedTraceDensity<Rational>::build(p);
        const double upper = 1.0 / static_cast<double>(p.n);
        boost::math::quadrature::tanh_sinh<double> rule;
        const double mass = rule.integrate([&](double x) { return d.eval(x); }, 0.0, upper);
        EXPECT_NEAR(mass, 1.0, 1e-10) << p.to_string();
    }
}

TEST(FixedTrace, CdfDerivativeIsDensity) {
    const auto d = FixedTraceDensity<Rational>::build(make(4, 3, "1"));
    const double h = 1e-6;
    for (int k = 1; k < 25; ++k) {
        const double x = 0.01 * k;
        EXPECT_NEAR((d.cdf(x + h) - d.cdf(x - h)) / (2 * h), d.eval(x), 1e-5 * (1 + d.eval(x)));
    }
}

TEST(FixedTrace, MomentRelation) {
    for (const auto& p : {make(5, 2, "2"), make(4, 3, "1"), make(3, 2, "4")}) {
        const auto base = ClosedFormDensity<Rational>::build(p);
        const auto ft = FixedTraceDensity<Rational>::from_unrestricted(base);
        EXPECT_EQ(moment_fixed_trace(ft, 0), q(1));
        const Rational expected = p.beta.exact() / q(2) * moment_unrestricted(base, 1) / ft.gamma();
        EXPECT_EQ(moment_fixed_trace(ft, 1), expected);
        const double quad = integrate([&](double x) { return x * x * ft.eval(x); }, 0.0, 1.0 / static_cast<double>(p.n));
        EXPECT_NEAR(moment_fixed_trace(ft, 2).get_d() / quad, 1.0, 1e-10);
    }
}

TEST(FixedTrace, Errors) {
    EXPECT_THROW(FixedTraceDensity<Rational>::build(make(1, 2, "2")), UnsupportedParameter);
    EXPECT_THROW(FixedTraceDensity<Rational>::build(make(3, 2, "2")).eval(-1.0), DomainError);
    PrecisionScope scope(256);
    const auto irrational = FixedTraceDensity<BigFloat>::build(make(3, 2, "pi"));
    EXPECT_GT(irrational.eval(0.1), 0.0);
}

TEST(DelayTime, SingleChannelIsInverseGamma) {
    const auto d = delay_time_density<Rational>(1, Beta::parse("2"), 1.0);
    for (double x : {0.2, 0.7, 1.5, 4.0}) {
        EXPECT_NEAR(d.eval(x), std::exp(-1.0 / x) / (x * x * x), 1e-14);
        EXPECT_NEAR(d.cdf(x), (1.0 + 1.0 / x) * std::exp(-1.0 / x), 1e-14);
    }
    EXPECT_EQ(d.eval(0.0), 0.0);
}

TEST(DelayTime, IntegratesToOne) {
    const double tau_h = 2 * std::numbers::pi;
    const auto d = delay_time_density<Rational>(8, Beta::parse("1"), tau_h);
    EXPECT_EQ(d.base().params().alpha, 4);
    const double mass = integrate_half_line([&](double x) { return d.eval(x); });
    EXPECT_NEAR(mass, 1.0, 1e-8);
    EXPECT_NEAR(d.cdf(1e6), 1.0, 1e-12);
}

TEST(DelayTime, Errors) {
    EXPECT_THROW(delay_time_params(3, Beta::parse("1")), UnsupportedParameter);
    EXPECT_THROW(delay_time_density<Rational>(4, Beta::parse("2"), -1.0), DomainError);
    EXPECT_EQ(delay_time_params(8, Beta::parse("4")).alpha, 16);
}
