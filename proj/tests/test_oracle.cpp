#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "wlrec/density.hpp"
#include "wlrec/oracle.hpp"

using namespace wlrec;

namespace {

EnsembleParams make(long n, long alpha, const char* beta) { return EnsembleParams{n, alpha, Beta::parse(beta)}; }

Rational q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(GaussLaguerre, IntegratesPolynomialsExactly) {
    for (double a : {0.0, 1.0, 2.5, 4.0}) {
        const int m = 12;
        const auto rule = gauss_laguerre(m, a);
        ASSERT_EQ(rule.nodes.size(), static_cast<std::size_t>(m));
        // E[t^k] = (a+1)_k under t^a e^-t / Gamma(a+1).
        double expected = 1.0;
        for (int k = 0; k < 2 * m; ++k) {
            double got = 0.0;
            for (int i = 0; i < m; ++i) got += rule.weights[i] * std::pow(rule.nodes[i], k);
            EXPECT_LT(rel(got, expected), 1e-11) << "a=" << a << " k=" << k;
            expected *= a + 1 + k;
        }
        EXPECT_TRUE(std::is_sorted(rule.nodes.begin(), rule.nodes.end()));
    }
    EXPECT_THROW(gauss_laguerre(0, 1.0), UsageError);
    EXPECT_THROW(gauss_laguerre(4, -1.0), DomainError);
}

TEST(QuadratureG, Examples) {
    EXPECT_NEAR(quadrature_g(make(2, 1, "2"), 0.0).value, 3.0, 1e-12);
    EXPECT_NEAR(quadrature_g(make(2, 1, "2"), 2.0).value, 5.0, 1e-12);
    EXPECT_NEAR(quadrature_g(make(4, 0, "3"), 1.7).value, 1.0, 1e-12);
    EXPECT_NEAR(quadrature_g(make(1, 3, "2"), 1.7).value, 1.0, 1e-12);
    EXPECT_THROW(quadrature_g(make(6, 1, "2"), 1.0), UnsupportedParameter);
    EXPECT_THROW(quadrature_g(make(3, 4, "2"), 1.0, 3), UsageError);
    EXPECT_THROW(quadrature_g(make(3, 4, "2"), -1.0), DomainError);
}

TEST(QuadratureG, MatchesRecursion) {
    for (long n = 2; n <= 4; ++n) {
        for (long alpha = 0; alpha <= 3; ++alpha) {
            for (const char* beta : {"1", "2", "3", "4"}) {
                const auto p = make(n, alpha, beta);
                const auto g = compute_g<Rational>(p);
                for (double x : {0.0, 0.5, 3.0}) {
                    const auto r = quadrature_g(p, x);
                    const double exact = poly_eval(g.poly, Rational(x)).get_d();
                    EXPECT_LT(rel(r.value, exact), 1e-10) << p.to_string() << " x=" << x;
                    EXPECT_TRUE(r.converged);
                }
            }
        }
    }
}

TEST(QuadratureG, RefinementIsStable) {
    const auto p = make(4, 3, "2");
    const int m = default_oracle_nodes(p);
    EXPECT_EQ(m, static_cast<int>(std::ceil((3.0 * 3 + 2.0 * 3 + 4 * 2.0) / 2)) + 10);
    const double a = quadrature_g(p, 1.5, m, false).value;
    const double b = quadrature_g(p, 1.5, 2 * m, false).value;
    EXPECT_LT(rel(b, a), 1e-10);
}

TEST(MixedMoment, OneDimensional) {
    // n = 2: single lambda with weight lambda^beta exp(-beta lambda / 2).
    for (const char* beta : {"1", "2", "5/2"}) {
        const auto p = make(2, 0, beta);
        const double b = p.beta.to_double();
        for (long a = 0; a <= 6; ++a) {
            const double expected = std::pow(2 / b, a) * std::tgamma(b + 1 + a) / std::tgamma(b + 1);
            EXPECT_LT(rel(mixed_moment(p, {a}).value, expected), 1e-10);
        }
    }
}

TEST(MixedMoment, PublishedValues) {
    const auto p = make(5, 3, "2");
    EXPECT_LT(rel(mixed_moment(p, {0, 2, 3, 3}).value, 3175200.0), 1e-8);
    EXPECT_LT(rel(mixed_moment(p, {1, 1, 3, 3}).value, 1360800.0), 1e-8);
    EXPECT_LT(rel(mixed_moment(p, {1, 2, 2, 3}).value, 680400.0), 1e-8);
    EXPECT_LT(rel(mixed_moment(p, {2, 2, 2, 2}).value, 302400.0), 1e-8);
    EXPECT_EQ(exact_mixed_moment(p, {0, 2, 3, 3}), q(3175200));
    EXPECT_EQ(exact_mixed_moment(p, {2, 2, 2, 2}), q(302400));
}

TEST(MixedMoment, SymmetricAndNormalized) {
    const auto p = make(4, 2, "4");
    EXPECT_NEAR(mixed_moment(p, {0, 0, 0}).value, 1.0, 1e-12);
    EXPECT_EQ(exact_mixed_moment(p, {0, 0, 0}), q(1));
    const double a = mixed_moment(p, {0, 1, 3}).value;
    EXPECT_LT(rel(mixed_moment(p, {3, 0, 1}).value, a), 1e-12);
    EXPECT_LT(rel(a, exact_mixed_moment(p, {1, 3, 0}).get_d()), 1e-10);
    EXPECT_THROW(mixed_moment(p, {1, 2}), UsageError);
    EXPECT_THROW(mixed_moment(p, {1, 2, -1}), DomainError);
    EXPECT_THROW(exact_mixed_moment(make(4, 2, "3"), {1, 1, 1}), UnsupportedParameter);
}

TEST(Partitions, Listing) {
    const auto parts = enumerate_partitions(4, 4, 3);
    std::vector<std::vector<long>> got;
    for (const auto& p : parts) got.push_back(p.values());
    const std::vector<std::vector<long>> expected = {{3, 1, 0, 0}, {2, 2, 0, 0}, {2, 1, 1, 0}, {1, 1, 1, 1}};
    EXPECT_EQ(got, expected);
    EXPECT_EQ(parts[2].parts, (std::vector<std::pair<long, long>>{{2, 1}, {1, 2}, {0, 1}}));
}

TEST(Partitions, Boundaries) {
    EXPECT_TRUE(enumerate_partitions(13, 4, 3).empty());
    ASSERT_EQ(enumerate_partitions(12, 4, 3).size(), 1u);
    EXPECT_EQ(enumerate_partitions(12, 4, 3)[0].values(), (std::vector<long>{3, 3, 3, 3}));
    ASSERT_EQ(enumerate_partitions(0, 3, 5).size(), 1u);
    EXPECT_EQ(enumerate_partitions(0, 3, 5)[0].values(), (std::vector<long>{0, 0, 0}));
}

TEST(Partitions, CompleteAgainstCompositions) {
    for (long parts = 1; parts <= 4; ++parts) {
        for (long max_value = 0; max_value <= 4; ++max_value) {
            for (long total = 0; total <= parts * max_value + 1; ++total) {
                std::set<std::vector<long>> brute;
                std::vector<long> cur(static_cast<std::size_t>(parts), 0);
                std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
                    if (i == cur.size()) {
                        if (left == 0) {
                            auto v = cur;
                            std::sort(v.rbegin(), v.rend());
                            brute.insert(v);
                        }
                        return;
                    }
                    for (long v = 0; v <= std::min(left, max_value); ++v) {
                        cur[i] = v;
                        rec(i + 1, left - v);
                    }
                };
                rec(0, total);
                const auto got = enumerate_partitions(total, parts, max_value);
                ASSERT_EQ(got.size(), brute.size());
                for (std::size_t k = 0; k < got.size(); ++k) {
                    EXPECT_TRUE(brute.count(got[k].values()));
                    if (k > 0) EXPECT_GT(got[k - 1].values(), got[k].values());
                }
            }
        }
    }
}

TEST(PartitionSum, PublishedCoefficient) {
    EXPECT_EQ(kappa_via_partitions_exact(make(5, 3, "2"), 7), q(159, 16));
    EXPECT_LT(rel(kappa_via_partitions(make(5, 3, "2"), 7), 159.0 / 16.0), 1e-8);
}

TEST(PartitionSum, MatchesRecursion) {
    const auto p = make(5, 3, "2");
    const auto d = ClosedFormDensity<Rational>::build(p);
    for (long r = 3; r <= 15; ++r) {
        EXPECT_EQ(kappa_via_partitions_exact(p, r), d.kappa_at(r)) << r;
        EXPECT_LT(rel(kappa_via_partitions(p, r), d.kappa_at(r).get_d()), 1e-8) << r;
    }
    EXPECT_THROW(kappa_via_partitions_exact(p, 2), DomainError);
    EXPECT_THROW(kappa_via_partitions_exact(p, 16), DomainError);
    const auto small = make(5, 2, "2");
    EXPECT_EQ(kappa_via_partitions_exact(small, 10), q(1, 17280));
    EXPECT_EQ(kappa_via_partitions_exact(small, 2), ClosedFormDensity<Rational>::build(small).kappa_at(2));
}

TEST(PartitionSum, OddBetaByQuadrature) {
    const auto p = make(3, 2, "3");
    const auto d = ClosedFormDensity<Rational>::build(p);
    for (long r = 2; r <= 6; ++r) EXPECT_LT(rel(kappa_via_partitions(p, r), d.kappa_at(r).get_d()), 1e-8);
}

TEST(NormConstant, EvenBetaFactorials) {
    for (long n = 1; n <= 5; ++n) {
        for (long alpha = 0; alpha <= 4; ++alpha) {
            for (const char* beta : {"2", "4"}) {
                const auto p = make(n, alpha, beta);
                const auto g = compute_g<Rational>(p);
                EXPECT_EQ(norm_constant_even_beta(p), norm_constant_c_integral(p, g.poly)) << p.to_string();
            }
        }
    }
    EXPECT_THROW(norm_constant_even_beta(make(3, 1, "1")), UnsupportedParameter);
}
