#pragma once

#include <utility>
#include <vector>

#include "wlrec/recursion.hpp"

namespace wlrec {

/// Generalized Gauss-Laguerre rule for t^a exp(-t) on [0, inf), weights scaled to sum to one.
struct GaussLaguerreRule {
    double a = 0.0;
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussLaguerreRule gauss_laguerre(int m, double a);

struct QuadratureResult {
    double value = 0.0;
    /// |Q(m) - Q(m + kRefineStep)| relative to |Q(m)|; zero when not estimated.
    double error_estimate = 0.0;
    int nodes = 0;
    bool converged = true;
};

inline constexpr int kOracleMaxN = 5;
inline constexpr int kRefineStep = 4;
inline constexpr double kOracleTolerance = 1e-8;

/// ceil((alpha(n-1) + beta(n-1) + n beta) / 2) + 10.
int default_oracle_nodes(const EnsembleParams& params);

/// g_{n,alpha,beta}(x) = <prod_j (x + lambda_j)^alpha> over n-1 eigenvalues with
/// weight |Delta|^beta prod lambda^beta exp(-beta lambda / 2), by tensor quadrature.
/// nodes = 0 selects the default. UnsupportedParameter for n > 5.
QuadratureResult quadrature_g(const EnsembleParams& params, double x, int nodes = 0, bool estimate_error = true);

/// <prod_j lambda_j^{a_j}> under the same weight; exponents has n-1 entries.
QuadratureResult mixed_moment(const EnsembleParams& params, const std::vector<long>& exponents, int nodes = 0,
                              bool estimate_error = true);

/// Exact mixed moment for even integer beta by expanding |Delta|^beta.
Rational exact_mixed_moment(const EnsembleParams& params, const std::vector<long>& exponents);

/// Multiset of part values written as (value, multiplicity), values descending.
struct Partition {
    std::vector<std::pair<long, long>> parts;

    /// Parts expanded in non-increasing order.
    std::vector<long> values() const;
};

/// Partitions of total into exactly `parts` non-negative integers, each <= max_value,
/// in reverse lexicographic order. Empty when infeasible.
std::vector<Partition> enumerate_partitions(long total, long parts, long max_value);

/// kappa_r = (n-1)! c sum_partitions prod_k C(alpha, p_k)^{s_k} / s_k! <prod lambda^{alpha - p}>.
/// Exact; requires even integer beta.
Rational kappa_via_partitions_exact(const EnsembleParams& params, long r);
/// Same sum with quadrature moments and the Gamma-product c.
double kappa_via_partitions(const EnsembleParams& params, long r, int nodes = 0);

/// c_{n,alpha,beta} as a ratio of factorials; requires even integer beta.
Rational norm_constant_even_beta(const EnsembleParams& params);

}  // namespace wlrec
